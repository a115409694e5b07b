#include <zsuper/base_polynomial.hpp>

#include <algorithm>
#include <numeric>

#include <zsuper/errors.hpp>

#include "format_detail.hpp"

namespace zsuper
{

unsigned total_degree(const exponents &e)
{
    return std::accumulate(e.begin(), e.end(), 0u);
}

bool base_term_order::operator()(const exponents &a, const exponents &b) const
{
    const auto da = total_degree(a);
    const auto db = total_degree(b);
    if (da != db) {
        return da > db;
    }
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

base_polynomial base_polynomial::constant(std::size_t nvars, const rational &c)
{
    base_polynomial p(nvars);
    p.add_term(exponents(nvars, 0u), c);
    return p;
}

base_polynomial base_polynomial::variable(std::size_t nvars, std::size_t index)
{
    if (index >= nvars) {
        throw error("base variable index out of range");
    }
    exponents e(nvars, 0u);
    e[index] = 1u;
    base_polynomial p(nvars);
    p.add_term(e, 1);
    return p;
}

base_polynomial base_polynomial::monomial(const exponents &e, const rational &c)
{
    base_polynomial p(e.size());
    p.add_term(e, c);
    return p;
}

bool base_polynomial::is_constant() const
{
    return m_terms.empty() || (m_terms.size() == 1u && total_degree(m_terms.begin()->first) == 0u);
}

rational base_polynomial::constant_term() const
{
    return coefficient(exponents(m_nvars, 0u));
}

rational base_polynomial::coefficient(const exponents &e) const
{
    const auto it = m_terms.find(e);
    return it == m_terms.end() ? rational(0) : it->second;
}

std::optional<unsigned> base_polynomial::degree() const
{
    if (m_terms.empty()) {
        return std::nullopt;
    }
    // The first term has the highest total degree.
    return total_degree(m_terms.begin()->first);
}

void base_polynomial::add_term(const exponents &e, const rational &c)
{
    if (e.size() != m_nvars) {
        throw error("exponent vector length does not match base variable count");
    }
    if (c == 0) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            m_terms.erase(it);
        }
    }
}

void base_polynomial::check_compatible(const base_polynomial &other) const
{
    if (m_nvars != other.m_nvars) {
        throw table_mismatch("base polynomials over different variable counts");
    }
}

base_polynomial &base_polynomial::operator+=(const base_polynomial &other)
{
    check_compatible(other);
    for (const auto &[e, c] : other.m_terms) {
        add_term(e, c);
    }
    return *this;
}

base_polynomial &base_polynomial::operator-=(const base_polynomial &other)
{
    check_compatible(other);
    for (const auto &[e, c] : other.m_terms) {
        add_term(e, -c);
    }
    return *this;
}

base_polynomial &base_polynomial::operator*=(const rational &c)
{
    if (c == 0) {
        m_terms.clear();
        return *this;
    }
    for (auto &[e, v] : m_terms) {
        v *= c;
    }
    return *this;
}

base_polynomial operator*(const base_polynomial &a, const base_polynomial &b)
{
    a.check_compatible(b);
    base_polynomial out(a.m_nvars);
    exponents e(a.m_nvars);
    for (const auto &[ea, ca] : a.m_terms) {
        for (const auto &[eb, cb] : b.m_terms) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

base_polynomial base_polynomial::operator-() const
{
    base_polynomial out(*this);
    for (auto &[e, c] : out.m_terms) {
        c = -c;
    }
    return out;
}

base_polynomial base_polynomial::pow(unsigned e) const
{
    auto out = constant(m_nvars, 1);
    auto base = *this;
    while (e != 0u) {
        if ((e & 1u) != 0u) {
            out = out * base;
        }
        e >>= 1u;
        if (e != 0u) {
            base = base * base;
        }
    }
    return out;
}

base_polynomial base_polynomial::derivative(std::size_t var) const
{
    if (var >= m_nvars) {
        throw error("base variable index out of range");
    }
    base_polynomial out(m_nvars);
    for (const auto &[e, c] : m_terms) {
        if (e[var] == 0u) {
            continue;
        }
        auto d = e;
        --d[var];
        out.add_term(d, c * e[var]);
    }
    return out;
}

base_polynomial base_polynomial::compose(std::span<const base_polynomial> subs) const
{
    if (subs.size() != m_nvars) {
        throw error("substitution count does not match base variable count");
    }
    const std::size_t target_vars = subs.empty() ? 0u : subs.front().nvars();
    for (const auto &s : subs) {
        if (s.nvars() != target_vars) {
            throw table_mismatch("substitutions over different variable counts");
        }
    }
    // powers[i][k] = subs[i]^k, grown lazily.
    std::vector<std::vector<base_polynomial>> powers(m_nvars);
    auto power = [&](std::size_t i, unsigned k) -> const base_polynomial & {
        auto &cache = powers[i];
        if (cache.empty()) {
            cache.push_back(constant(target_vars, 1));
        }
        while (cache.size() <= k) {
            cache.push_back(cache.back() * subs[i]);
        }
        return cache[k];
    };
    base_polynomial out(target_vars);
    for (const auto &[e, c] : m_terms) {
        auto term = constant(target_vars, c);
        for (std::size_t i = 0; i < m_nvars; ++i) {
            if (e[i] != 0u) {
                term = term * power(i, e[i]);
            }
        }
        out += term;
    }
    return out;
}

std::string base_polynomial::to_string(std::span<const std::string> names) const
{
    if (names.size() != m_nvars) {
        throw error("name count does not match base variable count");
    }
    if (m_terms.empty()) {
        return "0";
    }
    std::string out;
    std::vector<std::string> factors;
    for (const auto &[e, c] : m_terms) {
        factors.clear();
        for (std::size_t i = 0; i < m_nvars; ++i) {
            if (e[i] != 0u) {
                factors.push_back(detail::power_factor(names[i], e[i]));
            }
        }
        detail::append_term(out, c, factors);
    }
    return out;
}

std::vector<exponents> base_monomials_up_to(std::size_t nvars, unsigned bound)
{
    std::vector<exponents> out;
    exponents cur(nvars, 0u);
    // Depth-first over variables, distributing the remaining budget.
    auto rec = [&](auto &&self, std::size_t i, unsigned budget) -> void {
        if (i == nvars) {
            out.push_back(cur);
            return;
        }
        for (unsigned k = 0; k <= budget; ++k) {
            cur[i] = k;
            self(self, i + 1, budget - k);
        }
        cur[i] = 0u;
    };
    rec(rec, 0, bound);
    std::sort(out.begin(), out.end(), [](const exponents &a, const exponents &b) { return base_term_order{}(b, a); });
    return out;
}

} // namespace zsuper
