#include <zsuper/splitting.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

#include <zsuper/errors.hpp>
#include <zsuper/linear_solve.hpp>
#include <zsuper/sampling.hpp>
#include <zsuper/split_model.hpp>

namespace zsuper
{

namespace
{

struct overlap_map {
    chart_id u;
    chart_id v;
    morphism t;
};

std::vector<overlap_map> overlap_maps(const atlas &a, unsigned cap)
{
    std::vector<overlap_map> out;
    for (const auto &[u, v] : a.overlaps()) {
        out.push_back({u, v, a.transition(u, v, cap)});
    }
    return out;
}

std::vector<chart_id> ordered_charts(const atlas &a, const solver_options &options)
{
    if (options.chart_order.empty()) {
        return a.charts();
    }
    auto given = options.chart_order;
    auto expected = a.charts();
    std::sort(given.begin(), given.end());
    std::sort(expected.begin(), expected.end());
    if (given != expected) {
        throw malformed_atlas("chart order must list every chart exactly once");
    }
    return options.chart_order;
}

std::string coordinate_label(const variable_table &t, std::size_t i)
{
    return (i < t.base_count() ? t.base_names()[i] : t.formal()[i - t.base_count()].name) + "'";
}

monomial unit_monomial(std::size_t q, std::size_t a)
{
    std::vector<std::uint32_t> e(q, 0u);
    e[a] = 1u;
    return monomial(std::move(e));
}

std::vector<monomial> monomials_of_degree(const variable_table &t, unsigned m, const degree &d)
{
    std::vector<monomial> out;
    for (auto &mu : monomials_of_order(t, m)) {
        if (mu.deg(t) == d) {
            out.push_back(std::move(mu));
        }
    }
    return out;
}

// Rows of a linear system keyed by (overlap, coordinate slot, formal
// monomial, base monomial), i.e. one equation per coefficient.
using equation_key = std::tuple<std::size_t, std::size_t, monomial, exponents>;

struct equation_builder {
    std::map<equation_key, sparse_row> rows;
    std::map<equation_key, rational> rhs;

    void add_column(std::size_t overlap, std::size_t slot, std::size_t col, const graded_series &s, int sign)
    {
        for (const auto &[mu, poly] : s.terms()) {
            for (const auto &[alpha, c] : poly.terms()) {
                auto &entry = rows[{overlap, slot, mu, alpha}][col];
                entry += sign > 0 ? c : rational(-c);
            }
        }
    }

    void add_rhs(std::size_t overlap, std::size_t slot, const graded_series &s)
    {
        for (const auto &[mu, poly] : s.terms()) {
            for (const auto &[alpha, c] : poly.terms()) {
                rhs[{overlap, slot, mu, alpha}] += c;
                rows[{overlap, slot, mu, alpha}];
            }
        }
    }

    std::optional<std::vector<rational>> solve(std::size_t unknowns) const
    {
        linear_system sys(unknowns);
        for (const auto &[key, row] : rows) {
            sparse_row clean;
            for (const auto &[col, c] : row) {
                if (c != 0) {
                    clean.emplace(col, c);
                }
            }
            const auto it = rhs.find(key);
            const rational b = it == rhs.end() ? rational(0) : it->second;
            if (clean.empty() && b == 0) {
                continue;
            }
            sys.add_equation(std::move(clean), b);
        }
        return sys.solve();
    }
};

cech_cochain mismatch_with(const embedding_family &raw, const atlas &a, const std::vector<overlap_map> &maps)
{
    const auto m = raw.order;
    const auto &table = a.table();
    cech_cochain out;
    out.cech_degree = 1;
    out.order = m;
    for (const auto &ov : maps) {
        const auto phi_u = raw.as_morphism(ov.u, table);
        const auto base = ov.t.base_map();
        const auto &phi_v = raw.images.at(ov.v);
        std::vector<graded_series> w;
        for (std::size_t j = 0; j < base.size(); ++j) {
            auto diff = phi_u.pullback(graded_series::from_base(table, base[j]), m) - ov.t.pullback(phi_v[j], m);
            const auto ord = diff.order();
            if (!ord.is_infinite() && ord.value() < m) {
                throw inconsistent_family("embeddings disagree on " + ov.u + " " + ov.v + " at order "
                                          + ord.to_string() + " in " + coordinate_label(*table, j) + ": "
                                          + diff.to_string());
            }
            w.push_back(diff.with_cap(m));
        }
        out.components.emplace(std::vector<chart_id>{ov.u, ov.v}, std::move(w));
    }
    return out;
}

cech_cochain solve_with(const atlas &a, const cech_cochain &omega, const solver_options &options,
                        const std::vector<overlap_map> &maps)
{
    const auto m = omega.order;
    const auto &table = a.table();
    const auto p = table->base_count();
    const auto charts = ordered_charts(a, options);

    cech_cochain eta;
    eta.cech_degree = 0;
    eta.order = m;
    for (const auto &c : charts) {
        eta.components.emplace(std::vector<chart_id>{c}, std::vector<graded_series>(p, graded_series(table, m)));
    }
    if (omega.is_zero()) {
        return eta;
    }

    const auto monos = monomials_of_degree(*table, m, degree::zero(table->arity()));
    const auto basemons = base_monomials_up_to(p, options.degree_bound);
    const auto per_coord = monos.size() * basemons.size();
    const auto per_chart = p * per_coord;
    auto unknown_term = [&](std::size_t col) {
        const auto rest = col % per_coord;
        return graded_series::term(table, monos[rest / basemons.size()],
                                   base_polynomial::monomial(basemons[rest % basemons.size()]), m);
    };

    equation_builder eq;
    for (std::size_t o = 0; o < maps.size(); ++o) {
        const auto &ov = maps[o];
        const auto base = ov.t.base_map();
        for (std::size_t ci = 0; ci < charts.size(); ++ci) {
            const bool is_u = charts[ci] == ov.u;
            const bool is_v = charts[ci] == ov.v;
            if (!is_u && !is_v) {
                continue;
            }
            for (std::size_t i = 0; i < p; ++i) {
                for (std::size_t r = 0; r < per_coord; ++r) {
                    const auto col = ci * per_chart + i * per_coord + r;
                    const auto t = unknown_term(col);
                    if (is_v) {
                        eq.add_column(o, i, col, ov.t.pullback(t, m).order_part(m), +1);
                    }
                    if (is_u) {
                        for (std::size_t j = 0; j < p; ++j) {
                            const auto db = base[j].derivative(i);
                            if (!db.is_zero()) {
                                eq.add_column(o, j, col, t.times_base(db), -1);
                            }
                        }
                    }
                }
            }
        }
        const auto &w = omega.components.at({ov.u, ov.v});
        for (std::size_t j = 0; j < p; ++j) {
            eq.add_rhs(o, j, w[j]);
        }
    }

    const auto sol = eq.solve(charts.size() * per_chart);
    if (!sol) {
        throw unsolvable_at_bound(options.degree_bound,
                                  "no coboundary for the embedding mismatch at order " + std::to_string(m));
    }
    for (std::size_t col = 0; col < sol->size(); ++col) {
        if ((*sol)[col] == 0) {
            continue;
        }
        const auto ci = col / per_chart;
        const auto i = (col % per_chart) / per_coord;
        eta.components.at({charts[ci]})[i] += unknown_term(col).scaled((*sol)[col]);
    }
    return eta;
}

// T^*(Phi_V^y) - Phi_U^*(S^y), truncated at cap.
graded_series intertwining_residual(const morphism &t, const morphism &s, const morphism &phi_u, const morphism &phi_v,
                                    std::size_t y, unsigned cap)
{
    return t.pullback(phi_v.images()[y], cap) - phi_u.pullback(s.images()[y], cap);
}

} // namespace

morphism embedding_family::as_morphism(const chart_id &chart, const table_ptr &table) const
{
    auto imgs = images.at(chart);
    for (std::size_t b = 0; b < table->formal_count(); ++b) {
        imgs.push_back(graded_series::generator(table, b, order));
    }
    return morphism(table, table, std::move(imgs), order);
}

bool cech_cochain::is_zero() const
{
    return std::all_of(components.begin(), components.end(), [](const auto &kv) {
        return std::all_of(kv.second.begin(), kv.second.end(), [](const graded_series &s) { return s.is_zero(); });
    });
}

graded_series cech_cochain::apply(const atlas &a, const std::vector<chart_id> &key, const base_polynomial &f) const
{
    const auto &table = a.table();
    const auto &w = components.at(key);
    graded_series out(table, order);
    if (key.size() == 1u) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            out += w[i].times_base(f.derivative(i));
        }
        return out;
    }
    // Coefficients of d/dx_V^j live on U: evaluate d f / d x_V^j along the
    // base map of the transition U -> V.
    const auto base = a.transition(key.front(), key.back(), order).base_map();
    for (std::size_t j = 0; j < w.size(); ++j) {
        out += w[j].times_base(f.derivative(j).compose(base));
    }
    return out;
}

embedding_family identity_embedding(const atlas &a)
{
    embedding_family out;
    out.order = 0;
    const auto &table = a.table();
    for (const auto &c : a.charts()) {
        std::vector<graded_series> imgs;
        for (std::size_t i = 0; i < table->base_count(); ++i) {
            imgs.push_back(graded_series::base_variable(table, i, 0u));
        }
        out.images.emplace(c, std::move(imgs));
    }
    return out;
}

embedding_family extend_phi(const embedding_family &phi)
{
    embedding_family out;
    out.order = phi.order + 1;
    for (const auto &[c, imgs] : phi.images) {
        auto &dst = out.images[c];
        for (const auto &s : imgs) {
            dst.push_back(s.with_cap(out.order));
        }
    }
    return out;
}

cech_cochain mismatch_cocycle(const embedding_family &raw, const atlas &a)
{
    return mismatch_with(raw, a, overlap_maps(a, raw.order));
}

cech_cochain coboundary_solve(const atlas &a, const cech_cochain &omega, const solver_options &options)
{
    if (omega.cech_degree != 1u) {
        throw malformed_atlas("coboundary_solve expects a 1-cochain");
    }
    return solve_with(a, omega, options, overlap_maps(a, omega.order));
}

embedding_family apply_correction(const embedding_family &raw, const cech_cochain &eta)
{
    auto out = raw;
    for (auto &[c, imgs] : out.images) {
        const auto it = eta.components.find({c});
        if (it == eta.components.end()) {
            continue;
        }
        for (std::size_t i = 0; i < imgs.size(); ++i) {
            imgs[i] += it->second[i];
        }
    }
    return out;
}

embedding_family build_phi(const atlas &a, unsigned k, const solver_options &options)
{
    const auto check = check_cocycle(a, k);
    if (!check.passed()) {
        throw cocycle_failure("atlas fails the cocycle check at cap " + std::to_string(k) + ":\n" + check.to_text());
    }
    const auto maps = overlap_maps(a, k);
    auto phi = identity_embedding(a);
    for (unsigned m = 1; m <= k; ++m) {
        auto raw = extend_phi(phi);
        const auto omega = mismatch_with(raw, a, maps);
        if (omega.is_zero()) {
            phi = std::move(raw);
            continue;
        }
        phi = apply_correction(raw, solve_with(a, omega, options, maps));
        if (!mismatch_with(phi, a, maps).is_zero()) {
            throw inconsistent_family("corrected embeddings still disagree at order " + std::to_string(m));
        }
    }
    return phi;
}

report check_embedding(const atlas &a, const embedding_family &phi)
{
    report out;
    const auto maps = overlap_maps(a, phi.order);
    for (const auto &ov : maps) {
        const auto label = "embedding " + ov.u + " " + ov.v;
        try {
            embedding_family single = phi;
            const auto w = mismatch_with(single, a, {ov});
            const auto &comp = w.components.begin()->second;
            bool ok = true;
            for (std::size_t j = 0; j < comp.size(); ++j) {
                if (!comp[j].is_zero()) {
                    ok = false;
                    out.add(false, label + " " + coordinate_label(*a.table(), j), comp[j].to_string());
                }
            }
            if (ok) {
                out.add(true, label);
            }
        } catch (const inconsistent_family &e) {
            out.add(false, label, e.what());
        }
    }
    return out;
}

splitting_iso identity_splitting(const atlas &a, unsigned k)
{
    splitting_iso out;
    out.order = k;
    for (const auto &c : a.charts()) {
        out.maps.emplace(c, morphism::identity(a.table(), k));
    }
    return out;
}

splitting_iso build_splitting_iso(const atlas &a, unsigned k, const solver_options &options)
{
    const auto phi = build_phi(a, k, options);
    const auto split = split_atlas(linearize(a));
    const auto &table = a.table();
    const auto p = table->base_count();
    const auto q = table->formal_count();
    const auto charts = ordered_charts(a, options);
    const auto maps = overlap_maps(a, k);
    const auto smaps = overlap_maps(split, k);

    std::map<chart_id, std::vector<graded_series>> images;
    for (const auto &c : a.charts()) {
        auto imgs = phi.images.at(c);
        for (std::size_t b = 0; b < q; ++b) {
            imgs.push_back(graded_series::generator(table, b, k));
        }
        images.emplace(c, std::move(imgs));
    }
    auto as_map = [&](const chart_id &c) { return morphism(table, table, images.at(c), k); };

    // Per formal coordinate b of the split model: the matching entries of
    // the linear transition S_UV (coefficient of xi^b in S^y).
    const auto basemons = base_monomials_up_to(p, options.degree_bound);
    for (unsigned m = 2; m <= k; ++m) {
        struct unknown {
            std::size_t chart;
            std::size_t b;
            graded_series t;
        };
        std::vector<unknown> unknowns;
        for (std::size_t ci = 0; ci < charts.size(); ++ci) {
            for (std::size_t b = 0; b < q; ++b) {
                for (const auto &mu : monomials_of_degree(*table, m, table->formal_degree(b))) {
                    for (const auto &alpha : basemons) {
                        unknowns.push_back({ci, b, graded_series::term(table, mu, base_polynomial::monomial(alpha), m)});
                    }
                }
            }
        }

        equation_builder eq;
        for (std::size_t o = 0; o < maps.size(); ++o) {
            const auto &ov = maps[o];
            const auto &s = smaps[o].t;
            const auto phi_u = as_map(ov.u);
            const auto phi_v = as_map(ov.v);
            for (std::size_t y = 0; y < p + q; ++y) {
                const auto r = intertwining_residual(ov.t, s, phi_u, phi_v, y, m);
                const auto ord = r.order();
                if (!ord.is_infinite() && ord.value() < m) {
                    throw inconsistent_family("splitting does not intertwine " + ov.u + " " + ov.v + " at order "
                                              + ord.to_string() + " in " + coordinate_label(*table, y));
                }
                eq.add_rhs(o, y, -r);
            }
            for (std::size_t col = 0; col < unknowns.size(); ++col) {
                const auto &x = unknowns[col];
                if (charts[x.chart] == ov.v) {
                    eq.add_column(o, p + x.b, col, ov.t.pullback(x.t, m).order_part(m), +1);
                }
                if (charts[x.chart] == ov.u) {
                    const auto e_b = unit_monomial(q, x.b);
                    for (std::size_t y = 0; y < q; ++y) {
                        const auto c = s.formal_image(y).coefficient(e_b);
                        if (!c.is_zero()) {
                            eq.add_column(o, p + y, col, x.t.times_base(c), -1);
                        }
                    }
                }
            }
        }

        const auto sol = eq.solve(unknowns.size());
        if (!sol) {
            throw unsolvable_at_bound(options.degree_bound, "no splitting correction at order " + std::to_string(m));
        }
        for (std::size_t col = 0; col < unknowns.size(); ++col) {
            if ((*sol)[col] != 0) {
                const auto &x = unknowns[col];
                images.at(charts[x.chart])[p + x.b] += x.t.with_cap(k).scaled((*sol)[col]);
            }
        }
    }

    splitting_iso out;
    out.order = k;
    for (const auto &c : a.charts()) {
        out.maps.emplace(c, as_map(c));
    }
    const auto check = verify_splitting(a, out, k);
    if (!check.passed()) {
        throw inconsistent_family("constructed splitting fails verification:\n" + check.to_text());
    }
    return out;
}

report verify_splitting(const atlas &a, const splitting_iso &iso, unsigned k)
{
    report out;
    const auto &table = a.table();
    const auto p = table->base_count();
    const auto q = table->formal_count();

    std::optional<atlas> split;
    try {
        split = split_atlas(linearize(a));
    } catch (const error &e) {
        out.add(false, "split-model", e.what());
        return out;
    }

    std::mt19937_64 rng(0x5eedu);
    auto degrees = enumerate_nonzero_degrees(table->arity());
    degrees.insert(degrees.begin(), degree::zero(table->arity()));
    std::uniform_int_distribution<std::size_t> pick_degree(0, degrees.size() - 1);

    for (const auto &c : a.charts()) {
        const auto it = iso.maps.find(c);
        if (it == iso.maps.end()) {
            out.add(false, "chart " + c, "no morphism for this chart");
            continue;
        }
        const auto phi = it->second.with_cap(k);

        const bool unital = phi.pullback(graded_series::constant(table, 1), k) == graded_series::constant(table, 1);
        out.add(unital, "unital " + c, unital ? "" : "image of 1 is not 1");

        bool embedding = true;
        std::string detail;
        for (std::size_t i = 0; i < p; ++i) {
            if (phi.base_image(i).epsilon() != base_polynomial::variable(p, i)) {
                embedding = false;
                detail = "epsilon part of " + coordinate_label(*table, i) + " is "
                         + graded_series::from_base(table, phi.base_image(i).epsilon()).to_string();
            }
        }
        out.add(embedding, "embedding " + c, detail);

        bool degrees_ok = true;
        detail.clear();
        for (std::size_t y = 0; y < p + q; ++y) {
            const auto want = y < p ? degree::zero(table->arity()) : table->formal_degree(y - p);
            if (!phi.images()[y].is_homogeneous_of(want)) {
                degrees_ok = false;
                detail = "image of " + coordinate_label(*table, y) + " is not of degree " + want.to_string();
            }
        }

        bool multiplicative = true;
        std::string mdetail;
        for (int trial = 0; trial < 12; ++trial) {
            const auto d1 = degrees[pick_degree(rng)];
            const auto d2 = degrees[pick_degree(rng)];
            const unsigned o1 = k / 2;
            sample_shape s1{o1, 3, 1, 3};
            sample_shape s2{k - o1, 3, 1, 3};
            const auto f = random_homogeneous(table, rng, d1, s1);
            const auto g = random_homogeneous(table, rng, d2, s2);
            const auto pf = phi.pullback(f, k);
            const auto pg = phi.pullback(g, k);
            if (!pf.is_homogeneous_of(d1) || !pg.is_homogeneous_of(d2)) {
                degrees_ok = false;
                detail = "pullback of a section of degree " + d1.to_string() + " or " + d2.to_string()
                         + " is not homogeneous";
            }
            const auto lhs = phi.pullback((f * g).with_cap(k), k);
            const auto rhs = (pf * pg).truncate(k);
            if (!lhs.equal_mod(rhs, k)) {
                multiplicative = false;
                mdetail = "fails on f = " + f.to_string() + ", g = " + g.to_string();
            }
        }
        out.add(degrees_ok, "degree " + c, detail);
        out.add(multiplicative, "multiplicative " + c, mdetail);

        bool linear = true;
        detail.clear();
        for (const auto &[d, block] : phi.linear_blocks()) {
            if (block.rows() != 0u && !block.has_polynomial_inverse()) {
                linear = false;
                detail = "linear block " + d.to_string() + " is not invertible";
            }
        }
        out.add(linear, "linear-part " + c, detail);
    }

    const auto maps = overlap_maps(a, k);
    const auto smaps = overlap_maps(*split, k);
    for (std::size_t o = 0; o < maps.size(); ++o) {
        const auto &ov = maps[o];
        const auto label = "intertwining " + ov.u + " " + ov.v;
        const auto iu = iso.maps.find(ov.u);
        const auto iv = iso.maps.find(ov.v);
        if (iu == iso.maps.end() || iv == iso.maps.end()) {
            out.add(false, label, "missing chart morphism");
            continue;
        }
        bool ok = true;
        for (std::size_t y = 0; y < p + q; ++y) {
            const auto r = intertwining_residual(ov.t, smaps[o].t, iu->second, iv->second, y, k);
            if (!r.is_zero()) {
                ok = false;
                out.add(false, label + " " + coordinate_label(*table, y), r.to_string());
            }
        }
        if (ok) {
            out.add(true, label);
        }
    }
    return out;
}

} // namespace zsuper
