#include <zsuper/split_model.hpp>

#include <zsuper/errors.hpp>
#include <zsuper/linear_solve.hpp>

namespace zsuper
{

namespace
{

std::string pair_label(const chart_pair &p)
{
    return p.first + " -> " + p.second;
}

// Inverse of an affine base map with polynomial-invertible blocks.
bundle_transition invert_transition(const bundle_transition &t, std::size_t p)
{
    dense_matrix A(p, std::vector<rational>(p, rational(0)));
    std::vector<rational> c(p);
    for (std::size_t j = 0; j < p; ++j) {
        const auto deg = t.base_map[j].degree();
        if (deg && *deg > 1u) {
            throw base_map_not_supported("bundle base map is not affine");
        }
        c[j] = t.base_map[j].constant_term();
        for (std::size_t i = 0; i < p; ++i) {
            exponents e(p, 0u);
            e[i] = 1u;
            A[j][i] = t.base_map[j].coefficient(e);
        }
    }
    const auto inv = invert(A);
    if (!inv) {
        throw non_invertible_linear_part("bundle base map is singular");
    }
    bundle_transition out;
    for (std::size_t i = 0; i < p; ++i) {
        base_polynomial poly(p);
        for (std::size_t j = 0; j < p; ++j) {
            poly += (base_polynomial::variable(p, j) - base_polynomial::constant(p, c[j])) * (*inv)[i][j];
        }
        out.base_map.push_back(std::move(poly));
    }
    for (const auto &[d, block] : t.blocks) {
        out.blocks.emplace(d, block.inverse().compose(out.base_map));
    }
    return out;
}

bundle_transition oriented(const graded_bundle &b, const chart_id &u, const chart_id &v)
{
    if (const auto it = b.transitions.find({u, v}); it != b.transitions.end()) {
        return it->second;
    }
    if (const auto it = b.transitions.find({v, u}); it != b.transitions.end()) {
        return invert_transition(it->second, b.table->base_count());
    }
    throw malformed_atlas("no bundle transition between " + u + " and " + v);
}

} // namespace

bool blocks_equal(const graded_bundle &a, const graded_bundle &b)
{
    return same_table(a.table, b.table) && a.charts == b.charts && a.overlaps == b.overlaps
           && a.triples == b.triples && a.transitions == b.transitions;
}

void validate_bundle(const graded_bundle &b)
{
    if (!b.table) {
        throw malformed_atlas("bundle without a variable table");
    }
    const auto &t = *b.table;
    const auto p = t.base_count();
    auto has_overlap = [&](const chart_id &u, const chart_id &v) {
        for (const auto &[a, c] : b.overlaps) {
            if ((a == u && c == v) || (a == v && c == u)) {
                return true;
            }
        }
        return false;
    };
    for (const auto &[key, tr] : b.transitions) {
        if (!has_overlap(key.first, key.second)) {
            throw malformed_atlas("bundle transition " + pair_label(key) + " without a declared overlap");
        }
        if (tr.base_map.size() != p) {
            throw malformed_atlas("bundle transition " + pair_label(key) + " has the wrong number of base images");
        }
        for (const auto &poly : tr.base_map) {
            if (poly.nvars() != p) {
                throw malformed_atlas("bundle transition " + pair_label(key) + " base image over wrong variables");
            }
        }
        for (const auto &d : enumerate_nonzero_degrees(t.arity())) {
            const auto rank = t.sector(d).size();
            const auto it = tr.blocks.find(d);
            if (rank == 0u) {
                if (it != tr.blocks.end() && (it->second.rows() != 0u || it->second.cols() != 0u)) {
                    throw malformed_atlas("block for empty sector " + d.to_string() + " in " + pair_label(key));
                }
                continue;
            }
            if (it == tr.blocks.end()) {
                throw malformed_atlas("missing block " + d.to_string() + " in " + pair_label(key));
            }
            if (it->second.rows() != rank || it->second.cols() != rank || it->second.nvars() != p) {
                throw malformed_atlas("block " + d.to_string() + " in " + pair_label(key) + " must be "
                                      + std::to_string(rank) + "x" + std::to_string(rank));
            }
        }
    }
    for (const auto &[u, v] : b.overlaps) {
        if (b.transitions.count({u, v}) == 0u && b.transitions.count({v, u}) == 0u) {
            throw malformed_atlas("bundle overlap " + u + " " + v + " has no transition");
        }
    }
    for (const auto &[u, v, w] : b.triples) {
        const auto t_uv = oriented(b, u, v);
        const auto t_vw = oriented(b, v, w);
        const auto t_uw = oriented(b, u, w);
        const std::string label = u + " " + v + " " + w;
        for (std::size_t j = 0; j < p; ++j) {
            if (t_vw.base_map[j].compose(t_uv.base_map) != t_uw.base_map[j]) {
                throw cocycle_failure("bundle base maps violate the cocycle condition on " + label);
            }
        }
        for (const auto &[d, m_uw] : t_uw.blocks) {
            if (m_uw.rows() == 0u) {
                continue;
            }
            if (t_vw.blocks.at(d).compose(t_uv.base_map) * t_uv.blocks.at(d) != m_uw) {
                throw cocycle_failure("bundle block " + d.to_string() + " violates the cocycle condition on " + label);
            }
        }
    }
}

atlas split_atlas(const graded_bundle &b)
{
    validate_bundle(b);
    const auto &table = b.table;
    const auto p = table->base_count();
    atlas_data out;
    out.name = b.name;
    out.table = table;
    out.charts = b.charts;
    out.overlaps = b.overlaps;
    out.triples = b.triples;
    for (const auto &[key, tr] : b.transitions) {
        std::vector<graded_series> images;
        for (std::size_t j = 0; j < p; ++j) {
            images.push_back(graded_series::from_base(table, tr.base_map[j]));
        }
        std::vector<graded_series> formal(table->formal_count(), graded_series(table));
        for (const auto &[d, block] : tr.blocks) {
            if (block.rows() == 0u) {
                continue;
            }
            if (!block.has_polynomial_inverse()) {
                throw non_invertible_linear_part("block " + d.to_string() + " of " + pair_label(key)
                                                 + " does not have a nonzero constant determinant");
            }
            const auto idx = table->sector(d);
            for (std::size_t r = 0; r < idx.size(); ++r) {
                for (std::size_t c = 0; c < idx.size(); ++c) {
                    formal[idx[r]] += graded_series::generator(table, idx[c]).times_base(block(r, c));
                }
            }
        }
        images.insert(images.end(), formal.begin(), formal.end());
        out.transitions.emplace(key, std::move(images));
    }
    return atlas(std::move(out));
}

bundle_transition linear_part(const morphism &m)
{
    bundle_transition out;
    out.base_map = m.base_map();
    for (auto &[d, block] : m.linear_blocks()) {
        if (block.rows() != 0u) {
            out.blocks.emplace(d, block);
        }
    }
    return out;
}

graded_bundle linearize(const atlas &a)
{
    const auto check = check_cocycle(a, 2);
    if (!check.passed()) {
        throw cocycle_failure("linearize requires an atlas passing the cocycle check at cap 2:\n" + check.to_text());
    }
    graded_bundle out;
    out.name = a.name();
    out.table = a.table();
    out.charts = a.charts();
    out.overlaps = a.overlaps();
    out.triples = a.triples();
    for (const auto &[key, m] : a.declared()) {
        out.transitions.emplace(key, linear_part(m));
    }
    return out;
}

std::uint64_t monomial_count(unsigned n, std::span<const unsigned> q, unsigned k)
{
    const auto sectors = enumerate_nonzero_degrees(n);
    if (q.size() != sectors.size()) {
        throw arity_mismatch("rank tuple needs " + std::to_string(sectors.size()) + " entries for n = "
                             + std::to_string(n));
    }
    // Coefficients of prod_odd (1+t)^r * prod_even (1-t)^(-r), up to t^k.
    std::vector<std::uint64_t> poly(k + 1, 0u);
    poly[0] = 1u;
    for (std::size_t s = 0; s < sectors.size(); ++s) {
        const bool odd = parity(sectors[s]) == 1;
        for (unsigned g = 0; g < q[s]; ++g) {
            if (odd) {
                // multiply by (1 + t)
                for (unsigned i = k; i > 0; --i) {
                    poly[i] += poly[i - 1];
                }
            } else {
                // multiply by 1/(1 - t)
                for (unsigned i = 1; i <= k; ++i) {
                    poly[i] += poly[i - 1];
                }
            }
        }
    }
    return poly[k];
}

} // namespace zsuper
