#ifndef ZSUPER_SPLITTING_HPP
#define ZSUPER_SPLITTING_HPP

#include <map>
#include <string>
#include <vector>

#include <zsuper/atlas.hpp>
#include <zsuper/base_polynomial.hpp>
#include <zsuper/graded_series.hpp>
#include <zsuper/morphism.hpp>
#include <zsuper/report.hpp>

namespace zsuper
{

struct solver_options {
    // Maximal total degree of the base-polynomial coefficients of unknowns.
    unsigned degree_bound = 3;
    // Unknowns are ordered by chart (this order; empty means declaration
    // order), then coordinate, then monomial. Free unknowns are set to 0,
    // so permuting the charts may select another valid solution.
    std::vector<chart_id> chart_order;
};

// Per chart, the images phi_U(x^i) of the base coordinates: degree-0
// series over the chart with epsilon part x^i, truncated at `order`.
struct embedding_family {
    unsigned order = 0;
    std::map<chart_id, std::vector<graded_series>> images;

    // phi_U as a morphism of the chart to itself (formal generators fixed).
    morphism as_morphism(const chart_id &chart, const table_ptr &table) const;
};

// Cech cochain with values in derivations sum_i w^i d/dx^i whose
// coefficients are degree-0 series of formal order exactly `order`.
// 1-cochains are keyed by ordered overlaps (U, V): w^j is the coefficient of
// d/dx_V^j, written in U-coordinates. 0-cochains are keyed by (U).
struct cech_cochain {
    unsigned cech_degree = 1;
    unsigned order = 0;
    std::map<std::vector<chart_id>, std::vector<graded_series>> components;

    bool is_zero() const;
    // The derivation of component `key` applied to a base polynomial f in
    // the coordinates of the last chart of `key`; the result is over the
    // first chart.
    graded_series apply(const atlas &a, const std::vector<chart_id> &key, const base_polynomial &f) const;
};

embedding_family identity_embedding(const atlas &a);

// Re-truncates the images one order higher (no consistency yet).
embedding_family extend_phi(const embedding_family &phi);

// omega_UV^j = phi_U(x_V^j) - T_UV^* phi_V(x_V^j) on every declared overlap,
// where phi_U(x_V^j) substitutes phi_U into the base map of T_UV. Throws
// inconsistent_family when a term of order < raw.order survives.
cech_cochain mismatch_cocycle(const embedding_family &raw, const atlas &a);

// eta with T_UV^*(eta_V^j) - sum_i (d b^j / d x_U^i) eta_U^i = omega_UV^j on
// every overlap, coefficients of base degree <= options.degree_bound.
// Throws unsolvable_at_bound.
cech_cochain coboundary_solve(const atlas &a, const cech_cochain &omega, const solver_options &options);

// phi'_U = phi_U + eta_U.
embedding_family apply_correction(const embedding_family &raw, const cech_cochain &eta);

// Chart-wise embeddings phi with epsilon o phi = id, consistent on every
// overlap mod J^{k+1}. Requires check_cocycle(a, k) to pass.
embedding_family build_phi(const atlas &a, unsigned k, const solver_options &options);

// Overlap consistency of a family: one line per overlap.
report check_embedding(const atlas &a, const embedding_family &phi);

// Chart-wise morphisms Phi_U from the split model of linearize(a) to the
// atlas. Each Phi_U is given by the images of the split-model coordinates
// as series in the atlas chart coordinates (the pullback is the algebra
// morphism from split-model functions to atlas functions).
struct splitting_iso {
    unsigned order = 0;
    std::map<chart_id, morphism> maps;
};

splitting_iso build_splitting_iso(const atlas &a, unsigned k, const solver_options &options);

// Unitality, epsilon o Phi = id on base coordinates, degree preservation,
// multiplicativity on random section pairs, invertible linear part and
// intertwining T_UV^* Phi_V^* = Phi_U^* S_UV^* on every overlap, mod J^{k+1}.
report verify_splitting(const atlas &a, const splitting_iso &iso, unsigned k);

// The identity family, as a (generally invalid) candidate splitting.
splitting_iso identity_splitting(const atlas &a, unsigned k);

} // namespace zsuper

#endif
