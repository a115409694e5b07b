#include <zsuper/variable_table.hpp>

#include <set>

#include <zsuper/errors.hpp>

namespace zsuper
{

variable_table::variable_table(unsigned arity, std::vector<std::string> base, std::vector<formal_variable> formal,
                               sign_rule rule)
    : m_arity(arity), m_base(std::move(base)), m_formal(std::move(formal)), m_rule(rule)
{
    // Validates the arity.
    (void)degree::zero(arity);
    std::set<std::string> seen;
    for (const auto &name : m_base) {
        if (name.empty() || !seen.insert(name).second) {
            throw error("duplicate or empty variable name '" + name + "'");
        }
    }
    for (const auto &v : m_formal) {
        if (v.name.empty() || !seen.insert(v.name).second) {
            throw error("duplicate or empty variable name '" + v.name + "'");
        }
        if (v.deg.arity() != arity) {
            throw arity_mismatch("variable '" + v.name + "' has degree " + v.deg.to_string() + " but the arity is "
                                 + std::to_string(arity));
        }
        if (v.deg.is_zero()) {
            throw grading_violation("formal variable '" + v.name + "' must have nonzero degree");
        }
    }
    const auto q = m_formal.size();
    m_odd_pair.assign(q * q, false);
    for (std::size_t a = 0; a < q; ++a) {
        for (std::size_t b = 0; b < q; ++b) {
            m_odd_pair[a * q + b] = commutation_sign(m_rule, m_formal[a].deg, m_formal[b].deg) < 0;
        }
    }
}

std::vector<std::string> variable_table::formal_names() const
{
    std::vector<std::string> out;
    out.reserve(m_formal.size());
    for (const auto &v : m_formal) {
        out.push_back(v.name);
    }
    return out;
}

std::optional<coordinate_ref> variable_table::find(std::string_view name) const
{
    for (std::size_t i = 0; i < m_base.size(); ++i) {
        if (m_base[i] == name) {
            return coordinate_ref{coordinate_ref::kind::base, i};
        }
    }
    for (std::size_t a = 0; a < m_formal.size(); ++a) {
        if (m_formal[a].name == name) {
            return coordinate_ref{coordinate_ref::kind::formal, a};
        }
    }
    return std::nullopt;
}

std::vector<unsigned> variable_table::sector_ranks() const
{
    std::vector<unsigned> ranks((std::size_t{1} << m_arity) - 1u, 0u);
    for (const auto &v : m_formal) {
        ++ranks[v.deg.bits() - 1u];
    }
    return ranks;
}

std::vector<std::size_t> variable_table::sector(const degree &d) const
{
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < m_formal.size(); ++a) {
        if (m_formal[a].deg == d) {
            out.push_back(a);
        }
    }
    return out;
}

std::shared_ptr<const variable_table> variable_table::with_rule(sign_rule rule) const
{
    return std::make_shared<const variable_table>(m_arity, m_base, m_formal, rule);
}

table_ptr make_table(unsigned arity, std::vector<std::string> base, std::vector<formal_variable> formal, sign_rule rule)
{
    return std::make_shared<const variable_table>(arity, std::move(base), std::move(formal), rule);
}

bool same_table(const table_ptr &a, const table_ptr &b)
{
    return a == b || (a && b && *a == *b);
}

} // namespace zsuper
