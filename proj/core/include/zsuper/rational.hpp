#ifndef ZSUPER_RATIONAL_HPP
#define ZSUPER_RATIONAL_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace zsuper
{

using rational = mpq_class;

// Reduced "a" or "a/b".
std::string to_string(const rational &q);

// Parses "a" or "a/b" (optionally signed) and canonicalizes.
rational parse_rational(std::string_view text);

} // namespace zsuper

#endif
