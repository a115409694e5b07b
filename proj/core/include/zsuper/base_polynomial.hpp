#ifndef ZSUPER_BASE_POLYNOMIAL_HPP
#define ZSUPER_BASE_POLYNOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <zsuper/rational.hpp>

namespace zsuper
{

using exponents = std::vector<std::uint32_t>;

unsigned total_degree(const exponents &e);

// Descending total degree, then descending lexicographic. This is the
// printing order of base terms, so iteration order == output order.
struct base_term_order {
    bool operator()(const exponents &a, const exponents &b) const;
};

// Sparse multivariate polynomial over Q in a fixed number of base variables.
// Stands in for the smooth coefficient functions of a superdomain.
class base_polynomial
{
public:
    using term_map = std::map<exponents, rational, base_term_order>;

    explicit base_polynomial(std::size_t nvars = 0) : m_nvars(nvars) {}

    static base_polynomial constant(std::size_t nvars, const rational &c);
    static base_polynomial variable(std::size_t nvars, std::size_t index);
    static base_polynomial monomial(const exponents &e, const rational &c = 1);

    std::size_t nvars() const noexcept
    {
        return m_nvars;
    }
    const term_map &terms() const noexcept
    {
        return m_terms;
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }
    bool is_constant() const;
    rational constant_term() const;
    rational coefficient(const exponents &e) const;
    // nullopt for the zero polynomial.
    std::optional<unsigned> degree() const;

    void add_term(const exponents &e, const rational &c);

    base_polynomial &operator+=(const base_polynomial &other);
    base_polynomial &operator-=(const base_polynomial &other);
    base_polynomial &operator*=(const rational &c);
    friend base_polynomial operator+(base_polynomial a, const base_polynomial &b)
    {
        return a += b;
    }
    friend base_polynomial operator-(base_polynomial a, const base_polynomial &b)
    {
        return a -= b;
    }
    friend base_polynomial operator*(base_polynomial a, const rational &c)
    {
        return a *= c;
    }
    friend base_polynomial operator*(const base_polynomial &a, const base_polynomial &b);
    base_polynomial operator-() const;

    base_polynomial pow(unsigned e) const;
    base_polynomial derivative(std::size_t var) const;

    // Substitutes variable i by subs[i]; all subs share one variable count.
    base_polynomial compose(std::span<const base_polynomial> subs) const;

    friend bool operator==(const base_polynomial &a, const base_polynomial &b)
    {
        return a.m_nvars == b.m_nvars && a.m_terms == b.m_terms;
    }

    // Canonical text using the given variable names, e.g. "x^2 - 1/2*x*y + 3".
    std::string to_string(std::span<const std::string> names) const;

private:
    void check_compatible(const base_polynomial &other) const;

    std::size_t m_nvars;
    term_map m_terms;
};

// Every exponent vector over nvars variables with total degree <= bound,
// in base_term_order reversed (ascending degree).
std::vector<exponents> base_monomials_up_to(std::size_t nvars, unsigned bound);

} // namespace zsuper

#endif
