#ifndef ZSUPER_REPORT_HPP
#define ZSUPER_REPORT_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace zsuper
{

struct report_line {
    bool pass;
    std::string check;
    std::string detail;
};

// Ordered PASS/FAIL lines. Text form: "PASS <check>" or
// "FAIL <check>: <detail>", one per line.
class report
{
public:
    void add(bool pass, std::string check, std::string detail = {})
    {
        m_lines.push_back({pass, std::move(check), std::move(detail)});
    }
    void append(const report &other)
    {
        m_lines.insert(m_lines.end(), other.m_lines.begin(), other.m_lines.end());
    }
    const std::vector<report_line> &lines() const noexcept
    {
        return m_lines;
    }
    bool passed() const
    {
        return std::all_of(m_lines.begin(), m_lines.end(), [](const report_line &l) { return l.pass; });
    }
    std::size_t failures() const
    {
        return static_cast<std::size_t>(
            std::count_if(m_lines.begin(), m_lines.end(), [](const report_line &l) { return !l.pass; }));
    }
    std::string to_text() const
    {
        std::string out;
        for (const auto &l : m_lines) {
            out += l.pass ? "PASS " : "FAIL ";
            out += l.check;
            if (!l.detail.empty()) {
                out += ": " + l.detail;
            }
            out += '\n';
        }
        return out;
    }

private:
    std::vector<report_line> m_lines;
};

} // namespace zsuper

#endif
