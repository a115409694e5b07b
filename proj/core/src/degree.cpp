#include <zsuper/degree.hpp>

#include <bit>
#include <cctype>
#include <string>

#include <zsuper/errors.hpp>

namespace zsuper
{

namespace
{

void check_arity(unsigned arity)
{
    if (arity == 0u || arity > max_arity) {
        throw arity_mismatch("degree arity must lie in [1, " + std::to_string(max_arity) + "], got "
                             + std::to_string(arity));
    }
}

void check_same_arity(const degree &a, const degree &b)
{
    if (a.arity() != b.arity()) {
        throw arity_mismatch("degrees " + a.to_string() + " and " + b.to_string() + " have different arity");
    }
}

} // namespace

degree::degree(unsigned arity, std::uint32_t bits) : m_arity(arity), m_bits(bits)
{
    check_arity(arity);
    if (arity < 32u && (bits >> arity) != 0u) {
        throw arity_mismatch("bit pattern does not fit in arity " + std::to_string(arity));
    }
}

degree::degree(std::initializer_list<int> digits) : m_arity(static_cast<unsigned>(digits.size()))
{
    check_arity(m_arity);
    for (int d : digits) {
        if (d != 0 && d != 1) {
            throw arity_mismatch("degree digits must be 0 or 1");
        }
        m_bits = (m_bits << 1u) | static_cast<std::uint32_t>(d);
    }
}

degree degree::zero(unsigned arity)
{
    return degree(arity, 0u);
}

bool degree::digit(unsigned i) const
{
    if (i >= m_arity) {
        throw arity_mismatch("digit index out of range");
    }
    return ((m_bits >> (m_arity - 1u - i)) & 1u) != 0u;
}

degree degree::operator+(const degree &other) const
{
    check_same_arity(*this, other);
    return degree(m_arity, m_bits ^ other.m_bits);
}

degree &degree::operator+=(const degree &other)
{
    *this = *this + other;
    return *this;
}

std::string degree::to_string() const
{
    std::string out = "(";
    for (unsigned i = 0; i < m_arity; ++i) {
        if (i != 0u) {
            out += ',';
        }
        out += digit(i) ? '1' : '0';
    }
    out += ')';
    return out;
}

degree degree::parse(std::string_view text)
{
    std::uint32_t bits = 0;
    unsigned arity = 0;
    bool expect_digit = true;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
    };
    skip_ws();
    if (i == text.size() || text[i] != '(') {
        throw arity_mismatch("malformed degree '" + std::string(text) + "'");
    }
    ++i;
    for (;;) {
        skip_ws();
        if (i == text.size()) {
            throw arity_mismatch("unterminated degree '" + std::string(text) + "'");
        }
        const char c = text[i++];
        if (expect_digit && (c == '0' || c == '1')) {
            bits = (bits << 1u) | static_cast<std::uint32_t>(c - '0');
            ++arity;
            expect_digit = false;
        } else if (!expect_digit && c == ',') {
            expect_digit = true;
        } else if (!expect_digit && c == ')') {
            break;
        } else {
            throw arity_mismatch("malformed degree '" + std::string(text) + "'");
        }
    }
    skip_ws();
    if (i != text.size()) {
        throw arity_mismatch("trailing characters after degree '" + std::string(text) + "'");
    }
    return degree(arity, bits);
}

int scalar_product(const degree &a, const degree &b)
{
    check_same_arity(a, b);
    return std::popcount(a.bits() & b.bits()) & 1;
}

int koszul_sign(const degree &a, const degree &b)
{
    return scalar_product(a, b) == 0 ? 1 : -1;
}

int parity(const degree &a)
{
    return std::popcount(a.bits()) & 1;
}

std::vector<degree> enumerate_nonzero_degrees(unsigned n)
{
    check_arity(n);
    std::vector<degree> out;
    const std::uint32_t count = (std::uint32_t{1} << n) - 1u;
    out.reserve(count);
    for (std::uint32_t b = 1; b <= count; ++b) {
        out.emplace_back(n, b);
    }
    return out;
}

int commutation_sign(sign_rule rule, const degree &a, const degree &b)
{
    switch (rule) {
        case sign_rule::scalar_product:
            return koszul_sign(a, b);
        case sign_rule::total_parity:
            check_same_arity(a, b);
            return (parity(a) & parity(b)) != 0 ? -1 : 1;
        case sign_rule::commutative:
            check_same_arity(a, b);
            return 1;
    }
    return 1;
}

std::string_view to_string(sign_rule rule)
{
    switch (rule) {
        case sign_rule::scalar_product:
            return "zsp";
        case sign_rule::total_parity:
            return "parity";
        case sign_rule::commutative:
            return "comm";
    }
    return "zsp";
}

sign_rule parse_sign_rule(std::string_view text)
{
    if (text == "zsp") {
        return sign_rule::scalar_product;
    }
    if (text == "parity") {
        return sign_rule::total_parity;
    }
    if (text == "comm") {
        return sign_rule::commutative;
    }
    throw error("unknown convention '" + std::string(text) + "' (expected zsp, parity or comm)");
}

} // namespace zsuper
