#ifndef ZSUPER_DEGREE_HPP
#define ZSUPER_DEGREE_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace zsuper
{

inline constexpr unsigned max_arity = 16;

// An element of Z2^n. Digit 0 is the leftmost digit of the printed tuple
// and is stored as the most significant bit, so that comparing
// (arity, bits) is the lexicographic order on tuples.
class degree
{
public:
    degree() = default;
    degree(unsigned arity, std::uint32_t bits);
    degree(std::initializer_list<int> digits);

    static degree zero(unsigned arity);

    unsigned arity() const noexcept
    {
        return m_arity;
    }
    std::uint32_t bits() const noexcept
    {
        return m_bits;
    }
    bool digit(unsigned i) const;
    bool is_zero() const noexcept
    {
        return m_bits == 0u;
    }

    // Componentwise sum mod 2.
    degree operator+(const degree &other) const;
    degree &operator+=(const degree &other);

    friend bool operator==(const degree &, const degree &) = default;
    friend std::strong_ordering operator<=>(const degree &, const degree &) = default;

    // "(1,0,1)"
    std::string to_string() const;
    static degree parse(std::string_view text);

private:
    unsigned m_arity = 0;
    std::uint32_t m_bits = 0;
};

// <a,b> = sum_i a_i b_i mod 2.
int scalar_product(const degree &a, const degree &b);

// (-1)^<a,b>.
int koszul_sign(const degree &a, const degree &b);

// Digit sum mod 2; equals scalar_product(a, a).
int parity(const degree &a);

// All 2^n - 1 nonzero degrees, ascending lexicographically.
std::vector<degree> enumerate_nonzero_degrees(unsigned n);

// Commutation rule used when reordering generators.
enum class sign_rule {
    // (-1)^<a,b>: the Z2^n-commutative rule.
    scalar_product,
    // (-1)^{parity(a) parity(b)}: classical supercommutativity by total degree.
    total_parity,
    // everything commutes, nothing is nilpotent.
    commutative,
};

int commutation_sign(sign_rule rule, const degree &a, const degree &b);

// "zsp", "parity", "comm"
std::string_view to_string(sign_rule rule);
sign_rule parse_sign_rule(std::string_view text);

} // namespace zsuper

#endif
