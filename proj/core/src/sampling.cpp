#include <zsuper/sampling.hpp>

#include <vector>

namespace zsuper
{

graded_series random_homogeneous(const table_ptr &table, std::mt19937_64 &rng, const degree &d,
                                 const sample_shape &shape)
{
    std::vector<monomial> candidates;
    for (unsigned k = 0; k <= shape.max_order; ++k) {
        for (auto &mu : monomials_of_order(*table, k)) {
            if (mu.deg(*table) == d) {
                candidates.push_back(std::move(mu));
            }
        }
    }
    graded_series out(table);
    if (candidates.empty()) {
        return out;
    }
    const auto p = table->base_count();
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    std::uniform_int_distribution<int> coeff(-shape.coefficient_range, shape.coefficient_range);
    std::uniform_int_distribution<unsigned> count(1, std::max(1u, shape.max_terms));
    std::uniform_int_distribution<unsigned> bdeg(0, shape.base_degree);
    std::uniform_int_distribution<std::size_t> var(0, p == 0u ? 0u : p - 1);

    const auto n = count(rng);
    for (unsigned t = 0; t < n; ++t) {
        exponents e(p, 0u);
        if (p != 0u) {
            const auto total = bdeg(rng);
            for (unsigned i = 0; i < total; ++i) {
                ++e[var(rng)];
            }
        }
        int c = coeff(rng);
        if (c == 0) {
            c = 1;
        }
        out.add_term(candidates[pick(rng)], base_polynomial::monomial(e, c));
    }
    return out;
}

} // namespace zsuper
