#ifndef ZSUPER_TESTS_RANDOM_OBJECTS_HPP
#define ZSUPER_TESTS_RANDOM_OBJECTS_HPP

#include <random>

#include <zsuper/morphism.hpp>
#include <zsuper/sampling.hpp>

namespace testgen
{

// Random table: arity n, p base coordinates, q formal generators with
// random nonzero degrees (declaration order shuffled).
zsuper::table_ptr random_table(std::mt19937_64 &rng, unsigned n, std::size_t p, std::size_t q, zsuper::sign_rule rule);

// Random series of arbitrary (mixed) degree.
zsuper::graded_series random_series(const zsuper::table_ptr &t, std::mt19937_64 &rng, unsigned max_order);

// Random homogeneous series of a random degree.
zsuper::graded_series random_homogeneous(const zsuper::table_ptr &t, std::mt19937_64 &rng, unsigned max_order);

// Random self-morphism of a table with polynomial images: affine invertible
// base map plus nilpotent terms, unimodular-triangular linear blocks plus
// higher-order terms. Always invertible mod any J^{k+1}.
zsuper::morphism random_morphism(const zsuper::table_ptr &t, std::mt19937_64 &rng, unsigned max_order);

} // namespace testgen

#endif
