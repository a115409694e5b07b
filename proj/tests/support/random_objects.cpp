#include "random_objects.hpp"

#include <algorithm>

namespace testgen
{

using namespace zsuper;

table_ptr random_table(std::mt19937_64 &rng, unsigned n, std::size_t p, std::size_t q, sign_rule rule)
{
    const auto degrees = enumerate_nonzero_degrees(n);
    std::uniform_int_distribution<std::size_t> pick(0, degrees.size() - 1);
    std::vector<std::string> base;
    for (std::size_t i = 0; i < p; ++i) {
        base.push_back("x" + std::to_string(i + 1));
    }
    std::vector<formal_variable> formal;
    for (std::size_t a = 0; a < q; ++a) {
        formal.push_back({"z" + std::to_string(a + 1), degrees[pick(rng)]});
    }
    return make_table(n, std::move(base), std::move(formal), rule);
}

graded_series random_series(const table_ptr &t, std::mt19937_64 &rng, unsigned max_order)
{
    graded_series out(t);
    std::uniform_int_distribution<int> parts(1, 3);
    const auto count = parts(rng);
    for (int i = 0; i < count; ++i) {
        out += random_homogeneous(t, rng, max_order);
    }
    return out;
}

graded_series random_homogeneous(const table_ptr &t, std::mt19937_64 &rng, unsigned max_order)
{
    auto degrees = enumerate_nonzero_degrees(t->arity());
    degrees.push_back(degree::zero(t->arity()));
    std::uniform_int_distribution<std::size_t> pick(0, degrees.size() - 1);
    return zsuper::random_homogeneous(t, rng, degrees[pick(rng)], sample_shape{max_order, 3, 2, 4});
}

morphism random_morphism(const table_ptr &t, std::mt19937_64 &rng, unsigned max_order)
{
    const auto p = t->base_count();
    const auto q = t->formal_count();
    std::uniform_int_distribution<int> small(-2, 2);
    std::vector<graded_series> images;
    // Base: x_j + c_j + (x_{j-1}) + nilpotent degree-0 terms (triangular, so
    // the linear part stays invertible).
    for (std::size_t j = 0; j < p; ++j) {
        auto s = graded_series::base_variable(t, j);
        s += graded_series::constant(t, small(rng));
        if (j > 0) {
            s += graded_series::base_variable(t, j - 1).scaled(small(rng));
        }
        auto nil = zsuper::random_homogeneous(t, rng, degree::zero(t->arity()), sample_shape{max_order, 2, 1, 3});
        s += nil - nil.truncate(1);
        images.push_back(std::move(s));
    }
    // Formal: unit-triangular within each sector, plus higher-order terms.
    for (std::size_t b = 0; b < q; ++b) {
        const auto d = t->formal_degree(b);
        auto s = graded_series::generator(t, b);
        if (small(rng) < 0) {
            s = s.scaled(-1);
        }
        for (std::size_t c = b + 1; c < q; ++c) {
            if (t->formal_degree(c) == d && small(rng) > 0) {
                exponents e(p, 0u);
                if (p > 0) {
                    e[0] = 1u;
                }
                s += graded_series::generator(t, c).times_base(base_polynomial::monomial(e, small(rng)));
            }
        }
        auto hi = zsuper::random_homogeneous(t, rng, d, sample_shape{max_order, 2, 1, 3});
        s += hi - hi.truncate(1);
        images.push_back(std::move(s));
    }
    return morphism(t, t, std::move(images));
}

} // namespace testgen
