#ifndef ZSUPER_ATLAS_HPP
#define ZSUPER_ATLAS_HPP

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <zsuper/degree.hpp>
#include <zsuper/graded_series.hpp>
#include <zsuper/morphism.hpp>
#include <zsuper/report.hpp>
#include <zsuper/variable_table.hpp>

namespace zsuper
{

using chart_id = std::string;
using chart_pair = std::pair<chart_id, chart_id>;
using chart_triple = std::array<chart_id, 3>;

// Unvalidated atlas presentation, as read from a file. A transition
// (U, V) lists the images of the V-coordinates as series in the
// U-coordinates, base coordinates first. All charts share one table.
struct atlas_data {
    std::string name;
    table_ptr table;
    std::vector<chart_id> charts;
    std::vector<chart_pair> overlaps;
    std::vector<chart_triple> triples;
    std::map<chart_pair, std::vector<graded_series>> transitions;
};

// A Z2^n-manifold presented by charts over abstract symbols, declared
// overlaps and triple overlaps, and transition morphisms. The convention is
// the sign rule of the shared table.
class atlas
{
public:
    // Throws malformed_atlas for combinatorial defects and degree_mismatch
    // for transitions that do not respect the grading.
    explicit atlas(atlas_data data);

    const std::string &name() const noexcept
    {
        return m_name;
    }
    const table_ptr &table() const noexcept
    {
        return m_table;
    }
    unsigned arity() const noexcept
    {
        return m_table->arity();
    }
    sign_rule convention() const noexcept
    {
        return m_table->rule();
    }
    const std::vector<chart_id> &charts() const noexcept
    {
        return m_charts;
    }
    const std::vector<chart_pair> &overlaps() const noexcept
    {
        return m_overlaps;
    }
    const std::vector<chart_triple> &triples() const noexcept
    {
        return m_triples;
    }
    const std::map<chart_pair, morphism> &declared() const noexcept
    {
        return m_transitions;
    }
    std::size_t chart_index(const chart_id &c) const;
    bool has_overlap(const chart_id &a, const chart_id &b) const;

    // The transition a -> b truncated at cap: the declared one, or the
    // order-by-order inverse of the declared b -> a.
    morphism transition(const chart_id &a, const chart_id &b, cap_t cap) const;

    // The same coordinate data reinterpreted under another sign rule.
    atlas with_convention(sign_rule rule) const;
    atlas_data data() const;

private:
    std::string m_name;
    table_ptr m_table;
    std::vector<chart_id> m_charts;
    std::vector<chart_pair> m_overlaps;
    std::vector<chart_triple> m_triples;
    std::map<chart_pair, morphism> m_transitions;
};

// For every declared triple (U, V, W): compose(T_VW, T_UV) == T_UW mod
// J^{cap+1}; for every overlap declared in both orientations: the two
// transitions are mutually inverse mod J^{cap+1}. Failing coordinates are
// listed with their residual (composite minus direct).
report check_cocycle(const atlas &a, unsigned cap);

// Reinterprets commutative transition data over Z2^n-commutative
// generators in canonical order under `convention`. No signs are inserted.
// Throws grading_violation when a transition term has the wrong degree.
atlas superize(const atlas_data &commutative_data, sign_rule convention);

// Derivation of a fixed degree, determined by the images of the
// coordinates of a table (base coordinates first). Applied with the
// graded Leibniz rule d(ab) = d(a) b + sign(deg d, deg a) a d(b).
struct derivation {
    degree deg;
    std::vector<graded_series> images;

    graded_series apply(const graded_series &f) const;
};

// Tangent functor for n = 1: (x, xi) -> (x, xi, dx, dxi) with degrees
// (0,0), (0,1), (1,0), (1,1); transitions lifted by the de Rham
// differential of degree (1,0).
atlas tangent_lift(const atlas &a);

// Table of the lift: same base names; formal generators xi.., dx.., dxi..
table_ptr tangent_table(const variable_table &t);
// Embeds a series over the n = 1 table into the lifted table.
graded_series tangent_embed(const graded_series &f, const table_ptr &lifted);
// The differential d on the lifted table.
derivation tangent_differential(const table_ptr &lifted, std::size_t base_count, std::size_t formal_count);

} // namespace zsuper

#endif
