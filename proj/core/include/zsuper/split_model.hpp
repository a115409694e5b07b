#ifndef ZSUPER_SPLIT_MODEL_HPP
#define ZSUPER_SPLIT_MODEL_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <zsuper/atlas.hpp>
#include <zsuper/base_polynomial.hpp>
#include <zsuper/degree.hpp>
#include <zsuper/poly_matrix.hpp>
#include <zsuper/variable_table.hpp>

namespace zsuper
{

// Transition data of a Z2^n \ {0}-graded vector bundle over one overlap:
// the base coordinate change (images of the target base coordinates) and,
// per nonzero degree, the matrix taking source fiber coordinates to target
// ones (rows: target, columns: source).
struct bundle_transition {
    std::vector<base_polynomial> base_map;
    std::map<degree, poly_matrix> blocks;

    friend bool operator==(const bundle_transition &, const bundle_transition &) = default;
};

struct graded_bundle {
    std::string name;
    // Fiber coordinates are the formal generators; ranks per sector follow.
    table_ptr table;
    std::vector<chart_id> charts;
    std::vector<chart_pair> overlaps;
    std::vector<chart_triple> triples;
    std::map<chart_pair, bundle_transition> transitions;

    std::vector<unsigned> ranks() const
    {
        return table->sector_ranks();
    }
};

bool blocks_equal(const graded_bundle &a, const graded_bundle &b);

// Shapes of the blocks and the commutative cocycle condition on every
// declared triple. Throws cocycle_failure / malformed_atlas.
void validate_bundle(const graded_bundle &b);

// Atlas of the split Z2^n-manifold: transitions linear in the formal
// generators. Throws non_invertible_linear_part for a block whose
// determinant is not a nonzero constant, cocycle_failure for inconsistent
// blocks.
atlas split_atlas(const graded_bundle &b);

// Base map and |mu| = 1 blocks of one transition.
bundle_transition linear_part(const morphism &m);

// J/J^2 of an atlas. Requires check_cocycle(a, 2) to pass (cocycle_failure
// otherwise).
graded_bundle linearize(const atlas &a);

// Number of monomials of order k in generators with ranks q (indexed like
// enumerate_nonzero_degrees(n)): at most one factor per odd generator,
// any multiplicity for even ones.
std::uint64_t monomial_count(unsigned n, std::span<const unsigned> q, unsigned k);

} // namespace zsuper

#endif
