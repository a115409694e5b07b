#include <zsuper/atlas.hpp>

#include <algorithm>
#include <set>

#include <zsuper/errors.hpp>

namespace zsuper
{

namespace
{

std::string coordinate_label(const variable_table &t, std::size_t i)
{
    return (i < t.base_count() ? t.base_names()[i] : t.formal()[i - t.base_count()].name) + "'";
}

std::string pair_label(const chart_id &a, const chart_id &b)
{
    return a + " " + b;
}

} // namespace

atlas::atlas(atlas_data data)
    : m_name(std::move(data.name)), m_table(std::move(data.table)), m_charts(std::move(data.charts)),
      m_overlaps(std::move(data.overlaps)), m_triples(std::move(data.triples))
{
    if (!m_table) {
        throw malformed_atlas("atlas without a variable table");
    }
    if (m_charts.empty()) {
        throw malformed_atlas("atlas declares no charts");
    }
    std::set<chart_id> chart_set;
    for (const auto &c : m_charts) {
        if (!chart_set.insert(c).second) {
            throw malformed_atlas("chart '" + c + "' declared twice");
        }
    }
    auto require_chart = [&](const chart_id &c) {
        if (chart_set.count(c) == 0u) {
            throw malformed_atlas("unknown chart '" + c + "'");
        }
    };
    std::set<std::pair<chart_id, chart_id>> unordered;
    for (const auto &[a, b] : m_overlaps) {
        require_chart(a);
        require_chart(b);
        if (a == b) {
            throw malformed_atlas("overlap of chart '" + a + "' with itself");
        }
        if (!unordered.insert(std::minmax(a, b)).second) {
            throw malformed_atlas("overlap " + pair_label(a, b) + " declared twice");
        }
    }
    for (const auto &t : m_triples) {
        for (const auto &c : t) {
            require_chart(c);
        }
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
            throw malformed_atlas("triple " + t[0] + " " + t[1] + " " + t[2] + " repeats a chart");
        }
        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j) {
                if (!has_overlap(t[i], t[j])) {
                    throw malformed_atlas("triple " + t[0] + " " + t[1] + " " + t[2] + " needs overlap "
                                          + pair_label(t[i], t[j]));
                }
            }
        }
    }
    for (auto &[key, images] : data.transitions) {
        if (!has_overlap(key.first, key.second)) {
            throw malformed_atlas("transition " + key.first + " -> " + key.second + " without a declared overlap");
        }
        m_transitions.emplace(key, morphism(m_table, m_table, std::move(images)));
    }
    for (const auto &[a, b] : m_overlaps) {
        if (m_transitions.count({a, b}) == 0u && m_transitions.count({b, a}) == 0u) {
            throw malformed_atlas("overlap " + pair_label(a, b) + " has no transition");
        }
    }
}

std::size_t atlas::chart_index(const chart_id &c) const
{
    const auto it = std::find(m_charts.begin(), m_charts.end(), c);
    if (it == m_charts.end()) {
        throw malformed_atlas("unknown chart '" + c + "'");
    }
    return static_cast<std::size_t>(it - m_charts.begin());
}

bool atlas::has_overlap(const chart_id &a, const chart_id &b) const
{
    return std::any_of(m_overlaps.begin(), m_overlaps.end(), [&](const chart_pair &o) {
        return (o.first == a && o.second == b) || (o.first == b && o.second == a);
    });
}

morphism atlas::transition(const chart_id &a, const chart_id &b, cap_t cap) const
{
    if (a == b) {
        return morphism::identity(m_table, cap);
    }
    if (const auto it = m_transitions.find({a, b}); it != m_transitions.end()) {
        return it->second.with_cap(cap);
    }
    if (const auto it = m_transitions.find({b, a}); it != m_transitions.end()) {
        if (!cap) {
            throw malformed_atlas("transition " + a + " -> " + b + " is only available as an inverse, which needs a cap");
        }
        return invert_mod_order(it->second, *cap);
    }
    throw malformed_atlas("no transition between " + a + " and " + b);
}

atlas_data atlas::data() const
{
    atlas_data d;
    d.name = m_name;
    d.table = m_table;
    d.charts = m_charts;
    d.overlaps = m_overlaps;
    d.triples = m_triples;
    for (const auto &[key, m] : m_transitions) {
        d.transitions.emplace(key, m.images());
    }
    return d;
}

atlas atlas::with_convention(sign_rule rule) const
{
    auto d = data();
    auto table = m_table->with_rule(rule);
    for (auto &[key, images] : d.transitions) {
        for (auto &img : images) {
            img = img.rebind(table);
        }
    }
    d.table = std::move(table);
    return atlas(std::move(d));
}

report check_cocycle(const atlas &a, unsigned cap)
{
    report out;
    const auto &table = *a.table();
    auto compare = [&](const morphism &composite, const morphism &direct, const std::string &check) {
        bool ok = true;
        for (std::size_t i = 0; i < table.coordinate_count(); ++i) {
            const auto residual = (composite.images()[i] - direct.images()[i]).truncate(cap);
            if (!residual.is_zero()) {
                ok = false;
                out.add(false, check + " " + coordinate_label(table, i), residual.to_string());
            }
        }
        if (ok) {
            out.add(true, check);
        }
    };
    // Degree preservation is enforced when the atlas is built.
    for (const auto &[u, v] : a.overlaps()) {
        out.add(true, "graded " + u + " " + v);
    }
    for (const auto &[u, v] : a.overlaps()) {
        const auto &decl = a.declared();
        if (decl.count({u, v}) != 0u && decl.count({v, u}) != 0u) {
            const auto fwd = decl.at({u, v}).with_cap(cap);
            const auto bwd = decl.at({v, u}).with_cap(cap);
            const auto id = morphism::identity(a.table(), cap);
            compare(compose(bwd, fwd), id, "inverse " + u + " " + v);
            compare(compose(fwd, bwd), id, "inverse " + v + " " + u);
        }
    }
    for (const auto &[u, v, w] : a.triples()) {
        const auto t_uv = a.transition(u, v, cap);
        const auto t_vw = a.transition(v, w, cap);
        const auto t_uw = a.transition(u, w, cap);
        compare(compose(t_vw, t_uv), t_uw, "cocycle " + u + " " + v + " " + w);
    }
    return out;
}

atlas superize(const atlas_data &commutative_data, sign_rule convention)
{
    auto d = commutative_data;
    auto table = d.table->with_rule(convention);
    for (auto &[key, images] : d.transitions) {
        const auto &target = *table;
        if (images.size() != target.coordinate_count()) {
            throw arity_mismatch("transition " + key.first + " -> " + key.second + " has the wrong number of images");
        }
        for (std::size_t i = 0; i < images.size(); ++i) {
            const auto required = i < target.base_count() ? degree::zero(target.arity())
                                                           : target.formal_degree(i - target.base_count());
            if (!images[i].is_homogeneous_of(required)) {
                throw grading_violation("transition " + key.first + " -> " + key.second + ": image of "
                                        + coordinate_label(target, i) + " is not homogeneous of degree "
                                        + required.to_string());
            }
            images[i] = images[i].rebind(table);
        }
    }
    d.table = std::move(table);
    return atlas(std::move(d));
}

graded_series derivation::apply(const graded_series &f) const
{
    const auto &table = f.table();
    const auto p = table->base_count();
    const auto q = table->formal_count();
    if (images.size() != p + q) {
        throw arity_mismatch("derivation needs one image per coordinate");
    }
    graded_series out(table, f.cap());
    for (const auto &[mu, coeff] : f.terms()) {
        std::vector<std::size_t> word;
        for (std::size_t a = 0; a < q; ++a) {
            word.insert(word.end(), mu[a], a);
        }
        auto word_product = [&](std::size_t replaced) {
            auto prod = graded_series::constant(table, 1, f.cap());
            for (std::size_t t = 0; t < word.size(); ++t) {
                prod = prod * (t == replaced ? images[p + word[t]] : graded_series::generator(table, word[t], f.cap()));
            }
            return prod;
        };
        // d(P) xi^mu, with d(P) = sum_j dP/dx_j d(x_j).
        const auto plain = word_product(word.size());
        for (std::size_t j = 0; j < p; ++j) {
            const auto dp = coeff.derivative(j);
            if (!dp.is_zero()) {
                out += graded_series::from_base(table, dp, f.cap()) * images[j] * plain;
            }
        }
        // P d(xi^mu), signs from the degree of the prefix passed by d.
        auto prefix = degree::zero(table->arity());
        for (std::size_t t = 0; t < word.size(); ++t) {
            const int s = commutation_sign(table->rule(), deg, prefix);
            auto term = word_product(t).times_base(coeff);
            out += s < 0 ? -term : term;
            prefix += table->formal_degree(word[t]);
        }
    }
    return out;
}

table_ptr tangent_table(const variable_table &t)
{
    if (t.arity() != 1u) {
        throw arity_mismatch("tangent lift requires arity 1, got " + std::to_string(t.arity()));
    }
    std::vector<formal_variable> formal;
    for (const auto &v : t.formal()) {
        formal.push_back({v.name, degree{0, 1}});
    }
    for (const auto &x : t.base_names()) {
        formal.push_back({"d" + x, degree{1, 0}});
    }
    for (const auto &v : t.formal()) {
        formal.push_back({"d" + v.name, degree{1, 1}});
    }
    const auto rule = t.rule() == sign_rule::commutative ? sign_rule::commutative : sign_rule::scalar_product;
    return make_table(2, t.base_names(), std::move(formal), rule);
}

graded_series tangent_embed(const graded_series &f, const table_ptr &lifted)
{
    graded_series out(lifted, f.cap());
    const auto q = f.table()->formal_count();
    for (const auto &[mu, c] : f.terms()) {
        std::vector<std::uint32_t> e(lifted->formal_count(), 0u);
        for (std::size_t a = 0; a < q; ++a) {
            e[a] = mu[a];
        }
        out.add_term(monomial(std::move(e)), c);
    }
    return out;
}

derivation tangent_differential(const table_ptr &lifted, std::size_t base_count, std::size_t formal_count)
{
    derivation d{degree{1, 0}, {}};
    for (std::size_t j = 0; j < base_count; ++j) {
        d.images.push_back(graded_series::generator(lifted, formal_count + j));
    }
    for (std::size_t a = 0; a < formal_count; ++a) {
        d.images.push_back(graded_series::generator(lifted, formal_count + base_count + a));
    }
    for (std::size_t j = 0; j < base_count + formal_count; ++j) {
        d.images.emplace_back(lifted);
    }
    return d;
}

atlas tangent_lift(const atlas &a)
{
    const auto &old = *a.table();
    const auto lifted = tangent_table(old);
    const auto p = old.base_count();
    const auto q = old.formal_count();
    const auto d = tangent_differential(lifted, p, q);

    atlas_data out;
    out.name = a.name() + "_tangent";
    out.table = lifted;
    out.charts = a.charts();
    out.overlaps = a.overlaps();
    out.triples = a.triples();
    for (const auto &[key, m] : a.declared()) {
        std::vector<graded_series> embedded;
        for (const auto &img : m.images()) {
            embedded.push_back(tangent_embed(img, lifted));
        }
        // Target order: x.., xi.., dx.., dxi..
        std::vector<graded_series> images(embedded.begin(), embedded.end());
        for (std::size_t j = 0; j < p; ++j) {
            images.push_back(d.apply(embedded[j]));
        }
        for (std::size_t b = 0; b < q; ++b) {
            images.push_back(d.apply(embedded[p + b]));
        }
        out.transitions.emplace(key, std::move(images));
    }
    return atlas(std::move(out));
}

} // namespace zsuper
