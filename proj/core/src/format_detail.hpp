#ifndef ZSUPER_SRC_FORMAT_DETAIL_HPP
#define ZSUPER_SRC_FORMAT_DETAIL_HPP

#include <string>
#include <vector>

#include <zsuper/rational.hpp>

namespace zsuper::detail
{

// Appends "c*f1*f2" to out as the next summand, handling the sign and
// omitting unit coefficients.
inline void append_term(std::string &out, const rational &c, const std::vector<std::string> &factors)
{
    const bool negative = sgn(c) < 0;
    if (out.empty()) {
        if (negative) {
            out += '-';
        }
    } else {
        out += negative ? " - " : " + ";
    }
    const rational mag = abs(c);
    std::string body;
    if (mag != 1 || factors.empty()) {
        body = mag.get_str();
    }
    for (const auto &f : factors) {
        if (!body.empty()) {
            body += '*';
        }
        body += f;
    }
    out += body;
}

inline std::string power_factor(const std::string &name, unsigned e)
{
    return e == 1u ? name : name + "^" + std::to_string(e);
}

} // namespace zsuper::detail

#endif
