#ifndef ZSUPER_VARIABLE_TABLE_HPP
#define ZSUPER_VARIABLE_TABLE_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <zsuper/degree.hpp>

namespace zsuper
{

struct formal_variable {
    std::string name;
    degree deg;
    friend bool operator==(const formal_variable &, const formal_variable &) = default;
};

struct coordinate_ref {
    enum class kind { base, formal };
    kind which;
    std::size_t index;
};

// Coordinates x^1..x^p (degree 0) and formal generators xi^1..xi^q of a
// superdomain, together with the commutation rule. The declaration order of
// the formal generators is the canonical order used for normal forms.
class variable_table
{
public:
    variable_table(unsigned arity, std::vector<std::string> base, std::vector<formal_variable> formal,
                   sign_rule rule = sign_rule::scalar_product);

    unsigned arity() const noexcept
    {
        return m_arity;
    }
    sign_rule rule() const noexcept
    {
        return m_rule;
    }
    const std::vector<std::string> &base_names() const noexcept
    {
        return m_base;
    }
    const std::vector<formal_variable> &formal() const noexcept
    {
        return m_formal;
    }
    std::vector<std::string> formal_names() const;
    std::size_t base_count() const noexcept
    {
        return m_base.size();
    }
    std::size_t formal_count() const noexcept
    {
        return m_formal.size();
    }
    std::size_t coordinate_count() const noexcept
    {
        return m_base.size() + m_formal.size();
    }
    const degree &formal_degree(std::size_t a) const
    {
        return m_formal.at(a).deg;
    }

    std::optional<coordinate_ref> find(std::string_view name) const;

    // Sign picked up when generator a is moved past generator b.
    int sign(std::size_t a, std::size_t b) const
    {
        return m_odd_pair[a * m_formal.size() + b] ? -1 : 1;
    }
    // Whether generator a squares to zero under the rule.
    bool nilpotent(std::size_t a) const
    {
        return m_odd_pair[a * m_formal.size() + a];
    }

    // Number of formal generators per nonzero degree, in the order of
    // enumerate_nonzero_degrees(arity).
    std::vector<unsigned> sector_ranks() const;
    // Indices of the generators of degree d, in declaration order.
    std::vector<std::size_t> sector(const degree &d) const;

    // Same variables under another commutation rule.
    std::shared_ptr<const variable_table> with_rule(sign_rule rule) const;

    friend bool operator==(const variable_table &a, const variable_table &b)
    {
        return a.m_arity == b.m_arity && a.m_rule == b.m_rule && a.m_base == b.m_base && a.m_formal == b.m_formal;
    }

private:
    unsigned m_arity;
    std::vector<std::string> m_base;
    std::vector<formal_variable> m_formal;
    sign_rule m_rule;
    std::vector<bool> m_odd_pair;
};

using table_ptr = std::shared_ptr<const variable_table>;

table_ptr make_table(unsigned arity, std::vector<std::string> base, std::vector<formal_variable> formal,
                     sign_rule rule = sign_rule::scalar_product);

// Pointer-or-structural equality.
bool same_table(const table_ptr &a, const table_ptr &b);

} // namespace zsuper

#endif
