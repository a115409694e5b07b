#include <zsuper/graded_series.hpp>

#include <algorithm>
#include <numeric>

#include <zsuper/errors.hpp>

#include "format_detail.hpp"

namespace zsuper
{

monomial::monomial(std::vector<std::uint32_t> exps)
    : m_exps(std::move(exps)), m_order(std::accumulate(m_exps.begin(), m_exps.end(), 0u))
{
}

degree monomial::deg(const variable_table &table) const
{
    auto d = degree::zero(table.arity());
    for (std::size_t a = 0; a < m_exps.size(); ++a) {
        if ((m_exps[a] & 1u) != 0u) {
            d += table.formal_degree(a);
        }
    }
    return d;
}

bool operator<(const monomial &a, const monomial &b)
{
    if (a.m_order != b.m_order) {
        return a.m_order < b.m_order;
    }
    return std::lexicographical_compare(b.m_exps.begin(), b.m_exps.end(), a.m_exps.begin(), a.m_exps.end());
}

std::string monomial::to_string(const variable_table &table) const
{
    std::string out;
    for (std::size_t a = 0; a < m_exps.size(); ++a) {
        if (m_exps[a] == 0u) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += detail::power_factor(table.formal()[a].name, m_exps[a]);
    }
    return out.empty() ? "1" : out;
}

normalized_word normalize_word(const variable_table &table, std::span<const std::size_t> factors)
{
    std::vector<std::size_t> word(factors.begin(), factors.end());
    for (auto a : word) {
        if (a >= table.formal_count()) {
            throw unknown_variable("generator index " + std::to_string(a) + " is not in the table");
        }
    }
    int sign = 1;
    // Insertion sort: every step is one adjacent transposition.
    for (std::size_t i = 1; i < word.size(); ++i) {
        for (std::size_t j = i; j > 0 && word[j - 1] > word[j]; --j) {
            sign *= table.sign(word[j - 1], word[j]);
            std::swap(word[j - 1], word[j]);
        }
    }
    std::vector<std::uint32_t> exps(table.formal_count(), 0u);
    for (auto a : word) {
        ++exps[a];
        if (exps[a] > 1u && table.nilpotent(a)) {
            return {0, monomial(table.formal_count())};
        }
    }
    return {sign, monomial(std::move(exps))};
}

unsigned j_order::value() const
{
    if (!m_value) {
        throw error("j-order is infinite");
    }
    return *m_value;
}

std::strong_ordering operator<=>(const j_order &a, const j_order &b)
{
    if (a.is_infinite() || b.is_infinite()) {
        return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    }
    return *a.m_value <=> *b.m_value;
}

std::string j_order::to_string() const
{
    return m_value ? std::to_string(*m_value) : std::string("inf");
}

cap_t min_cap(cap_t a, cap_t b)
{
    if (!a) {
        return b;
    }
    if (!b) {
        return a;
    }
    return std::min(*a, *b);
}

std::string cap_to_string(cap_t c)
{
    return c ? std::to_string(*c) : std::string("exact");
}

normalized_word multiply_monomials(const variable_table &table, const monomial &a, const monomial &b)
{
    const auto q = table.formal_count();
    std::vector<std::uint32_t> exps(q);
    for (std::size_t i = 0; i < q; ++i) {
        exps[i] = a[i] + b[i];
        if (exps[i] > 1u && table.nilpotent(i)) {
            return {0, monomial(q)};
        }
    }
    // Moving the word of b left past the generators of a with a larger index:
    // each pair (i in a, j in b, i > j) contributes sign(i, j)^(a_i b_j).
    unsigned flips = 0;
    for (std::size_t j = 0; j < q; ++j) {
        if (b[j] == 0u) {
            continue;
        }
        for (std::size_t i = j + 1; i < q; ++i) {
            if (a[i] != 0u && table.sign(i, j) < 0) {
                flips += a[i] * b[j];
            }
        }
    }
    return {(flips & 1u) != 0u ? -1 : 1, monomial(std::move(exps))};
}

std::vector<monomial> monomials_of_order(const variable_table &table, unsigned k)
{
    const auto q = table.formal_count();
    std::vector<monomial> out;
    std::vector<std::uint32_t> cur(q, 0u);
    auto rec = [&](auto &&self, std::size_t a, unsigned budget) -> void {
        if (a == q) {
            if (budget == 0u) {
                out.emplace_back(cur);
            }
            return;
        }
        const unsigned top = table.nilpotent(a) ? std::min(budget, 1u) : budget;
        for (unsigned e = 0; e <= top; ++e) {
            cur[a] = e;
            self(self, a + 1, budget - e);
        }
        cur[a] = 0u;
    };
    rec(rec, 0, k);
    std::sort(out.begin(), out.end());
    return out;
}

graded_series::graded_series(table_ptr table, cap_t cap) : m_table(std::move(table)), m_cap(cap)
{
    if (!m_table) {
        throw error("graded_series requires a variable table");
    }
}

graded_series graded_series::constant(table_ptr table, const rational &c, cap_t cap)
{
    const auto p = table->base_count();
    return from_base(table, base_polynomial::constant(p, c), cap);
}

graded_series graded_series::from_base(table_ptr table, const base_polynomial &p, cap_t cap)
{
    graded_series s(std::move(table), cap);
    s.add_term(monomial(s.m_table->formal_count()), p);
    return s;
}

graded_series graded_series::base_variable(table_ptr table, std::size_t i, cap_t cap)
{
    const auto p = table->base_count();
    return from_base(table, base_polynomial::variable(p, i), cap);
}

graded_series graded_series::generator(table_ptr table, std::size_t a, cap_t cap)
{
    std::vector<std::uint32_t> e(table->formal_count(), 0u);
    e.at(a) = 1u;
    const auto p = table->base_count();
    return term(table, monomial(std::move(e)), base_polynomial::constant(p, 1), cap);
}

graded_series graded_series::term(table_ptr table, const monomial &mu, const base_polynomial &coeff, cap_t cap)
{
    graded_series s(std::move(table), cap);
    s.add_term(mu, coeff);
    return s;
}

base_polynomial graded_series::coefficient(const monomial &mu) const
{
    const auto it = m_terms.find(mu);
    return it == m_terms.end() ? base_polynomial(m_table->base_count()) : it->second;
}

bool graded_series::admits(const monomial &mu) const
{
    if (m_cap && mu.order() > *m_cap) {
        return false;
    }
    return true;
}

void graded_series::add_term(const monomial &mu, const base_polynomial &coeff)
{
    if (mu.size() != m_table->formal_count() || coeff.nvars() != m_table->base_count()) {
        throw table_mismatch("term does not match the variable table");
    }
    for (std::size_t a = 0; a < mu.size(); ++a) {
        if (mu[a] > 1u && m_table->nilpotent(a)) {
            throw grading_violation("monomial " + mu.to_string(*m_table) + " contains the square of a nilpotent generator");
        }
    }
    if (coeff.is_zero() || !admits(mu)) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(mu, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            m_terms.erase(it);
        }
    }
}

void graded_series::check_compatible(const graded_series &other) const
{
    if (!same_table(m_table, other.m_table)) {
        throw table_mismatch("graded series over different variable tables");
    }
}

graded_series &graded_series::operator+=(const graded_series &other)
{
    check_compatible(other);
    m_cap = min_cap(m_cap, other.m_cap);
    if (m_cap) {
        *this = truncate(*m_cap);
    }
    for (const auto &[mu, c] : other.m_terms) {
        add_term(mu, c);
    }
    return *this;
}

graded_series &graded_series::operator-=(const graded_series &other)
{
    check_compatible(other);
    m_cap = min_cap(m_cap, other.m_cap);
    if (m_cap) {
        *this = truncate(*m_cap);
    }
    for (const auto &[mu, c] : other.m_terms) {
        add_term(mu, -c);
    }
    return *this;
}

graded_series graded_series::operator-() const
{
    graded_series out(*this);
    for (auto &[mu, c] : out.m_terms) {
        c = -c;
    }
    return out;
}

graded_series operator*(const graded_series &a, const graded_series &b)
{
    a.check_compatible(b);
    const auto &table = *a.m_table;
    graded_series out(a.m_table, min_cap(a.m_cap, b.m_cap));
    for (const auto &[ma, ca] : a.m_terms) {
        for (const auto &[mb, cb] : b.m_terms) {
            // Terms are ordered by |mu|, so the rest of b is above the cap too.
            if (out.m_cap && ma.order() + mb.order() > *out.m_cap) {
                break;
            }
            auto [sign, mono] = multiply_monomials(table, ma, mb);
            if (sign == 0) {
                continue;
            }
            auto prod = ca * cb;
            if (sign < 0) {
                prod *= rational(-1);
            }
            out.add_term(mono, prod);
        }
    }
    return out;
}

graded_series graded_series::scaled(const rational &c) const
{
    graded_series out(m_table, m_cap);
    for (const auto &[mu, p] : m_terms) {
        out.add_term(mu, p * c);
    }
    return out;
}

graded_series graded_series::times_base(const base_polynomial &p) const
{
    graded_series out(m_table, m_cap);
    for (const auto &[mu, c] : m_terms) {
        out.add_term(mu, c * p);
    }
    return out;
}

graded_series graded_series::pow(unsigned e) const
{
    auto out = constant(m_table, 1, m_cap);
    for (unsigned i = 0; i < e; ++i) {
        out = out * *this;
    }
    return out;
}

base_polynomial graded_series::epsilon() const
{
    return coefficient(monomial(m_table->formal_count()));
}

j_order graded_series::order() const
{
    if (m_terms.empty()) {
        return j_order::infinity();
    }
    return j_order(m_terms.begin()->first.order());
}

graded_series graded_series::truncate(unsigned k) const
{
    graded_series out(m_table, min_cap(m_cap, k));
    for (const auto &[mu, c] : m_terms) {
        if (mu.order() > k) {
            break;
        }
        out.m_terms.emplace_hint(out.m_terms.end(), mu, c);
    }
    return out;
}

graded_series graded_series::order_part(unsigned m) const
{
    graded_series out(m_table, m_cap);
    for (const auto &[mu, c] : m_terms) {
        if (mu.order() == m) {
            out.m_terms.emplace_hint(out.m_terms.end(), mu, c);
        }
    }
    return out;
}

graded_series graded_series::homogeneous_part(const degree &d) const
{
    if (d.arity() != m_table->arity()) {
        throw arity_mismatch("degree arity does not match the table");
    }
    graded_series out(m_table, m_cap);
    for (const auto &[mu, c] : m_terms) {
        if (mu.deg(*m_table) == d) {
            out.m_terms.emplace_hint(out.m_terms.end(), mu, c);
        }
    }
    return out;
}

std::vector<degree> graded_series::degrees() const
{
    std::vector<degree> out;
    for (const auto &[mu, c] : m_terms) {
        auto d = mu.deg(*m_table);
        if (std::find(out.begin(), out.end(), d) == out.end()) {
            out.push_back(d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool graded_series::is_homogeneous_of(const degree &d) const
{
    return std::all_of(m_terms.begin(), m_terms.end(),
                       [&](const auto &t) { return t.first.deg(*m_table) == d; });
}

std::optional<degree> graded_series::homogeneous_degree() const
{
    const auto ds = degrees();
    if (ds.size() != 1u) {
        return std::nullopt;
    }
    return ds.front();
}

graded_series graded_series::with_cap(cap_t cap) const
{
    if (cap) {
        auto out = truncate(*cap);
        out.m_cap = cap;
        return out;
    }
    graded_series out(*this);
    out.m_cap = cap;
    return out;
}

graded_series graded_series::rebind(table_ptr table) const
{
    if (table->base_names() != m_table->base_names() || table->formal() != m_table->formal()) {
        throw table_mismatch("rebind requires the same variables");
    }
    graded_series out(std::move(table), m_cap);
    for (const auto &[mu, c] : m_terms) {
        out.add_term(mu, c);
    }
    return out;
}

bool operator==(const graded_series &a, const graded_series &b)
{
    return same_table(a.m_table, b.m_table) && a.m_terms == b.m_terms;
}

bool graded_series::equal_mod(const graded_series &other, unsigned k) const
{
    return truncate(k) == other.truncate(k);
}

std::string graded_series::to_string() const
{
    if (m_terms.empty()) {
        return "0";
    }
    const auto &base_names = m_table->base_names();
    std::string out;
    std::vector<std::string> factors;
    for (const auto &[mu, poly] : m_terms) {
        for (const auto &[e, c] : poly.terms()) {
            factors.clear();
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] != 0u) {
                    factors.push_back(detail::power_factor(base_names[i], e[i]));
                }
            }
            for (std::size_t a = 0; a < mu.size(); ++a) {
                if (mu[a] != 0u) {
                    factors.push_back(detail::power_factor(m_table->formal()[a].name, mu[a]));
                }
            }
            detail::append_term(out, c, factors);
        }
    }
    return out;
}

} // namespace zsuper
