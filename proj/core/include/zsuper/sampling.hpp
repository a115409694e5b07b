#ifndef ZSUPER_SAMPLING_HPP
#define ZSUPER_SAMPLING_HPP

#include <random>

#include <zsuper/degree.hpp>
#include <zsuper/graded_series.hpp>
#include <zsuper/variable_table.hpp>

namespace zsuper
{

struct sample_shape {
    unsigned max_order = 3;
    unsigned max_terms = 3;
    unsigned base_degree = 1;
    int coefficient_range = 3;
};

// Random series, homogeneous of degree d, with terms of J-order <= max_order
// and small integer base coefficients. May be zero when no monomial of
// degree d fits.
graded_series random_homogeneous(const table_ptr &table, std::mt19937_64 &rng, const degree &d,
                                 const sample_shape &shape);

} // namespace zsuper

#endif
