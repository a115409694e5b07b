#ifndef ZSUPER_GRADED_SERIES_HPP
#define ZSUPER_GRADED_SERIES_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <zsuper/base_polynomial.hpp>
#include <zsuper/degree.hpp>
#include <zsuper/rational.hpp>
#include <zsuper/variable_table.hpp>

namespace zsuper
{

// Exponent vector over the formal generators of a table.
class monomial
{
public:
    monomial() = default;
    explicit monomial(std::size_t nvars) : m_exps(nvars, 0u) {}
    explicit monomial(std::vector<std::uint32_t> exps);

    std::size_t size() const noexcept
    {
        return m_exps.size();
    }
    std::uint32_t operator[](std::size_t a) const
    {
        return m_exps[a];
    }
    const std::vector<std::uint32_t> &exponents() const noexcept
    {
        return m_exps;
    }
    // |mu|
    unsigned order() const noexcept
    {
        return m_order;
    }
    degree deg(const variable_table &table) const;

    // Graded order: ascending |mu|, then descending lexicographic on the
    // exponent vector (earlier generators first).
    friend bool operator<(const monomial &a, const monomial &b);
    friend bool operator==(const monomial &a, const monomial &b)
    {
        return a.m_exps == b.m_exps;
    }

    std::string to_string(const variable_table &table) const;

private:
    std::vector<std::uint32_t> m_exps;
    unsigned m_order = 0;
};

// Result of normalizing a word of generators. sign == 0 means the word
// vanishes (a nilpotent generator occurs twice).
struct normalized_word {
    int sign;
    monomial mono;
};

// Sorts the generator occurrences into declaration order by adjacent
// transpositions, accumulating the commutation sign of every swap.
normalized_word normalize_word(const variable_table &table, std::span<const std::size_t> factors);

// J-adic order: a natural number or infinity (the zero series).
class j_order
{
public:
    explicit j_order(unsigned v) : m_value(v) {}
    static j_order infinity()
    {
        return j_order();
    }
    bool is_infinite() const noexcept
    {
        return !m_value.has_value();
    }
    unsigned value() const;

    friend bool operator==(const j_order &, const j_order &) = default;
    friend std::strong_ordering operator<=>(const j_order &a, const j_order &b);
    std::string to_string() const;

private:
    j_order() = default;
    std::optional<unsigned> m_value;
};

// Truncation order k (terms with |mu| <= k are kept); nullopt is "exact".
using cap_t = std::optional<unsigned>;

cap_t min_cap(cap_t a, cap_t b);
std::string cap_to_string(cap_t c);

// Element of C[x][[xi]] over a variable table: a sparse sum of
// base_polynomial(x) * xi^mu, optionally truncated at a cap.
class graded_series
{
public:
    using term_map = std::map<monomial, base_polynomial>;

    explicit graded_series(table_ptr table, cap_t cap = std::nullopt);

    static graded_series constant(table_ptr table, const rational &c, cap_t cap = std::nullopt);
    static graded_series from_base(table_ptr table, const base_polynomial &p, cap_t cap = std::nullopt);
    static graded_series base_variable(table_ptr table, std::size_t i, cap_t cap = std::nullopt);
    static graded_series generator(table_ptr table, std::size_t a, cap_t cap = std::nullopt);
    static graded_series term(table_ptr table, const monomial &mu, const base_polynomial &coeff,
                              cap_t cap = std::nullopt);

    const table_ptr &table() const noexcept
    {
        return m_table;
    }
    cap_t cap() const noexcept
    {
        return m_cap;
    }
    const term_map &terms() const noexcept
    {
        return m_terms;
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }
    std::size_t size() const noexcept
    {
        return m_terms.size();
    }
    base_polynomial coefficient(const monomial &mu) const;

    void add_term(const monomial &mu, const base_polynomial &coeff);

    graded_series &operator+=(const graded_series &other);
    graded_series &operator-=(const graded_series &other);
    graded_series operator-() const;
    friend graded_series operator+(graded_series a, const graded_series &b)
    {
        return a += b;
    }
    friend graded_series operator-(graded_series a, const graded_series &b)
    {
        return a -= b;
    }
    friend graded_series operator*(const graded_series &a, const graded_series &b);
    graded_series scaled(const rational &c) const;
    graded_series times_base(const base_polynomial &p) const;
    graded_series pow(unsigned e) const;

    // Coefficient of the empty monomial (all formal generators set to 0).
    base_polynomial epsilon() const;
    j_order order() const;
    graded_series truncate(unsigned k) const;
    // Terms with |mu| == m only; keeps the cap.
    graded_series order_part(unsigned m) const;
    graded_series homogeneous_part(const degree &d) const;
    // Degrees of the stored terms.
    std::vector<degree> degrees() const;
    // The zero series is homogeneous of every degree.
    bool is_homogeneous_of(const degree &d) const;
    // nullopt if inhomogeneous or zero.
    std::optional<degree> homogeneous_degree() const;

    graded_series with_cap(cap_t cap) const;
    // Same terms over another table with the same variables (rule may differ).
    // Terms that vanish under the new rule raise grading_violation.
    graded_series rebind(table_ptr table) const;

    // Equality of the stored terms; the cap is not compared.
    friend bool operator==(const graded_series &a, const graded_series &b);
    bool equal_mod(const graded_series &other, unsigned k) const;

    // Canonical text in graded order, base terms expanded.
    std::string to_string() const;

private:
    void check_compatible(const graded_series &other) const;
    bool admits(const monomial &mu) const;

    table_ptr m_table;
    cap_t m_cap;
    term_map m_terms;
};

// Product of two monomials over a table: sign (0 if it vanishes) and the
// normalized result.
normalized_word multiply_monomials(const variable_table &table, const monomial &a, const monomial &b);

// All monomials of order exactly k over the table, in graded order.
std::vector<monomial> monomials_of_order(const variable_table &table, unsigned k);

} // namespace zsuper

#endif
