#include <zsuper/morphism.hpp>

#include <string>

#include <zsuper/errors.hpp>
#include <zsuper/linear_solve.hpp>

namespace zsuper
{

namespace
{

std::string coordinate_name(const variable_table &t, std::size_t index)
{
    if (index < t.base_count()) {
        return t.base_names()[index];
    }
    return t.formal()[index - t.base_count()].name;
}

// Cache of powers of the images of a morphism, truncated at a common cap.
class power_cache
{
public:
    power_cache(const std::vector<graded_series> &images, cap_t cap) : m_cap(cap), m_powers(images.size())
    {
        m_images.reserve(images.size());
        for (const auto &img : images) {
            m_images.push_back(img.with_cap(cap));
        }
    }

    const graded_series &get(std::size_t i, unsigned e)
    {
        auto &cache = m_powers[i];
        if (cache.empty()) {
            cache.push_back(graded_series::constant(m_images[i].table(), 1, m_cap));
        }
        while (cache.size() <= e) {
            cache.push_back(cache.back() * m_images[i]);
        }
        return cache[e];
    }

private:
    std::vector<graded_series> m_images;
    cap_t m_cap;
    std::vector<std::vector<graded_series>> m_powers;
};

} // namespace

morphism::morphism(table_ptr source, table_ptr target, std::vector<graded_series> images, cap_t cap)
    : m_source(std::move(source)), m_target(std::move(target)), m_images(std::move(images)), m_cap(cap)
{
    if (!m_source || !m_target) {
        throw error("morphism requires source and target tables");
    }
    if (m_source->arity() != m_target->arity()) {
        throw arity_mismatch("morphism between tables of different arity");
    }
    const auto &tt = *m_target;
    if (m_images.size() != tt.coordinate_count()) {
        throw arity_mismatch("morphism needs " + std::to_string(tt.coordinate_count()) + " coordinate images, got "
                             + std::to_string(m_images.size()));
    }
    for (std::size_t i = 0; i < m_images.size(); ++i) {
        auto &img = m_images[i];
        if (!same_table(img.table(), m_source)) {
            throw table_mismatch("image of " + coordinate_name(tt, i) + " is not over the source table");
        }
        const auto required = i < tt.base_count() ? degree::zero(tt.arity()) : tt.formal_degree(i - tt.base_count());
        if (!img.is_homogeneous_of(required)) {
            std::string found;
            for (const auto &d : img.degrees()) {
                found += (found.empty() ? "" : " ") + d.to_string();
            }
            throw degree_mismatch("image of " + coordinate_name(tt, i) + " must have degree " + required.to_string()
                                  + " but has terms of degree " + found);
        }
        img = img.with_cap(min_cap(img.cap(), m_cap));
    }
}

morphism morphism::identity(table_ptr table, cap_t cap)
{
    std::vector<graded_series> images;
    for (std::size_t j = 0; j < table->base_count(); ++j) {
        images.push_back(graded_series::base_variable(table, j, cap));
    }
    for (std::size_t a = 0; a < table->formal_count(); ++a) {
        images.push_back(graded_series::generator(table, a, cap));
    }
    return morphism(table, table, std::move(images), cap);
}

graded_series morphism::pullback(const graded_series &f) const
{
    return pullback(f, std::nullopt);
}

graded_series morphism::pullback(const graded_series &f, cap_t cap) const
{
    if (!same_table(f.table(), m_target)) {
        throw table_mismatch("pullback of a series that is not over the target table");
    }
    const cap_t out_cap = min_cap(min_cap(m_cap, f.cap()), cap);
    const auto p = m_target->base_count();
    const auto q = m_target->formal_count();
    power_cache powers(m_images, out_cap);
    graded_series out(m_source, out_cap);

    for (const auto &[mu, coeff] : f.terms()) {
        // Formal images have J-order >= 1.
        if (out_cap && mu.order() > *out_cap) {
            break;
        }
        // Ordered product of the formal images, in canonical target order.
        auto formal = graded_series::constant(m_source, 1, out_cap);
        for (std::size_t a = 0; a < q && !formal.is_zero(); ++a) {
            if (mu[a] != 0u) {
                formal = formal * powers.get(p + a, mu[a]);
            }
        }
        if (formal.is_zero()) {
            continue;
        }
        // coeff(s^1, ..., s^p): degree-0 images are central.
        graded_series base(m_source, out_cap);
        for (const auto &[e, c] : coeff.terms()) {
            auto t = graded_series::constant(m_source, c, out_cap);
            for (std::size_t j = 0; j < p; ++j) {
                if (e[j] != 0u) {
                    t = t * powers.get(j, e[j]);
                }
            }
            base += t;
        }
        out += base * formal;
    }
    return out;
}

morphism morphism::with_cap(cap_t cap) const
{
    return morphism(m_source, m_target, m_images, cap);
}

bool morphism::equal_mod(const morphism &other, unsigned k) const
{
    if (!same_table(m_source, other.m_source) || !same_table(m_target, other.m_target)) {
        return false;
    }
    for (std::size_t i = 0; i < m_images.size(); ++i) {
        if (!m_images[i].equal_mod(other.m_images[i], k)) {
            return false;
        }
    }
    return true;
}

std::vector<base_polynomial> morphism::base_map() const
{
    std::vector<base_polynomial> out;
    for (std::size_t j = 0; j < m_target->base_count(); ++j) {
        out.push_back(m_images[j].epsilon());
    }
    return out;
}

std::map<degree, poly_matrix> morphism::linear_blocks() const
{
    std::map<degree, poly_matrix> out;
    const auto &st = *m_source;
    const auto &tt = *m_target;
    for (const auto &d : enumerate_nonzero_degrees(tt.arity())) {
        const auto rows = tt.sector(d);
        const auto cols = st.sector(d);
        if (rows.empty() && cols.empty()) {
            continue;
        }
        poly_matrix block(rows.size(), cols.size(), st.base_count());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const auto &img = formal_image(rows[r]);
            for (std::size_t c = 0; c < cols.size(); ++c) {
                std::vector<std::uint32_t> e(st.formal_count(), 0u);
                e[cols[c]] = 1u;
                block(r, c) = img.coefficient(monomial(std::move(e)));
            }
        }
        out.emplace(d, std::move(block));
    }
    return out;
}

bool operator==(const morphism &a, const morphism &b)
{
    return same_table(a.m_source, b.m_source) && same_table(a.m_target, b.m_target) && a.m_images == b.m_images;
}

morphism compose(const morphism &outer, const morphism &inner)
{
    if (!same_table(inner.target(), outer.source())) {
        throw table_mismatch("compose: inner target is not the outer source");
    }
    const cap_t cap = min_cap(outer.cap(), inner.cap());
    std::vector<graded_series> images;
    images.reserve(outer.images().size());
    for (const auto &img : outer.images()) {
        images.push_back(inner.pullback(img, cap));
    }
    return morphism(inner.source(), outer.target(), std::move(images), cap);
}

morphism invert_mod_order(const morphism &m, unsigned k)
{
    const auto &S = m.source();
    const auto &T = m.target();
    if (S->base_count() != T->base_count() || S->sector_ranks() != T->sector_ranks()) {
        throw non_invertible_linear_part("source and target have different dimensions");
    }
    const auto p = S->base_count();

    // Affine base map x_T = A x_S + c.
    const auto bmap = m.base_map();
    dense_matrix A(p, std::vector<rational>(p, rational(0)));
    std::vector<rational> c(p);
    for (std::size_t j = 0; j < p; ++j) {
        const auto deg = bmap[j].degree();
        if (deg && *deg > 1u) {
            throw base_map_not_supported("base image of " + T->base_names()[j] + " is not affine in the base coordinates");
        }
        c[j] = bmap[j].constant_term();
        for (std::size_t i = 0; i < p; ++i) {
            exponents e(p, 0u);
            e[i] = 1u;
            A[j][i] = bmap[j].coefficient(e);
        }
    }
    const auto Ainv = invert(A);
    if (!Ainv) {
        throw non_invertible_linear_part("linear part of the base map is singular");
    }

    // R = exact inverse of the leading part P = (A x + c, L(x) xi); R is a
    // morphism T -> S.
    std::vector<base_polynomial> r_base;
    for (std::size_t i = 0; i < p; ++i) {
        base_polynomial poly(p);
        for (std::size_t j = 0; j < p; ++j) {
            auto shifted = base_polynomial::variable(p, j) - base_polynomial::constant(p, c[j]);
            poly += shifted * (*Ainv)[i][j];
        }
        r_base.push_back(std::move(poly));
    }
    std::vector<graded_series> r_images;
    for (const auto &poly : r_base) {
        r_images.push_back(graded_series::from_base(T, poly, k));
    }
    std::vector<graded_series> r_formal(S->formal_count(), graded_series(T, k));
    const auto blocks = m.linear_blocks();
    for (const auto &[d, block] : blocks) {
        if (!block.has_polynomial_inverse()) {
            throw non_invertible_linear_part("linear part in sector " + d.to_string()
                                             + " does not have a nonzero constant determinant");
        }
        const auto inv = block.inverse().compose(r_base);
        const auto src = S->sector(d);
        const auto tgt = T->sector(d);
        for (std::size_t i = 0; i < src.size(); ++i) {
            for (std::size_t r = 0; r < tgt.size(); ++r) {
                r_formal[src[i]] += graded_series::generator(T, tgt[r], k).times_base(inv(i, r));
            }
        }
    }
    r_images.insert(r_images.end(), r_formal.begin(), r_formal.end());
    const morphism R(T, S, std::move(r_images), k);

    // Q = m - P, the part of m of J-order >= 2 (over S).
    std::vector<graded_series> q_images;
    for (std::size_t j = 0; j < p; ++j) {
        q_images.push_back(m.base_image(j) - graded_series::from_base(S, bmap[j]));
    }
    for (std::size_t b = 0; b < T->formal_count(); ++b) {
        auto img = m.formal_image(b);
        q_images.push_back(img - img.order_part(1));
    }

    // Fixed point G = R o (w - Q o G); each step gains one J-adic order.
    morphism G = R;
    for (unsigned iter = 0; iter <= k + 1; ++iter) {
        std::vector<graded_series> v_images;
        for (std::size_t i = 0; i < T->coordinate_count(); ++i) {
            auto w = i < p ? graded_series::base_variable(T, i, k) : graded_series::generator(T, i - p, k);
            v_images.push_back(w - G.pullback(q_images[i], k));
        }
        const morphism V(T, T, std::move(v_images), k);
        auto next = compose(R, V);
        if (next == G) {
            break;
        }
        G = std::move(next);
    }
    return G;
}

} // namespace zsuper
