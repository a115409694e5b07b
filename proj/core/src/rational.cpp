#include <zsuper/rational.hpp>

#include <string>

#include <zsuper/errors.hpp>

namespace zsuper
{

std::string to_string(const rational &q)
{
    return q.get_str();
}

rational parse_rational(std::string_view text)
{
    rational q;
    if (text.empty() || q.set_str(std::string(text), 10) != 0) {
        throw error("malformed rational literal '" + std::string(text) + "'");
    }
    if (q.get_den() == 0) {
        throw error("zero denominator in '" + std::string(text) + "'");
    }
    q.canonicalize();
    return q;
}

} // namespace zsuper
