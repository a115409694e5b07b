#ifndef ZSUPER_MORPHISM_HPP
#define ZSUPER_MORPHISM_HPP

#include <cstddef>
#include <map>
#include <vector>

#include <zsuper/base_polynomial.hpp>
#include <zsuper/degree.hpp>
#include <zsuper/graded_series.hpp>
#include <zsuper/poly_matrix.hpp>
#include <zsuper/variable_table.hpp>

namespace zsuper
{

// Superdomain morphism source -> target, determined by the images of the
// target coordinates as series over the source: first the base
// coordinates (degree 0), then the formal generators (each homogeneous of
// the generator's degree). Pullback acts contravariantly on functions.
class morphism
{
public:
    // Validating constructor (make_morphism). Throws degree_mismatch when an
    // image is not homogeneous of the required degree, arity_mismatch when
    // the tables disagree on n or the image count is wrong.
    morphism(table_ptr source, table_ptr target, std::vector<graded_series> images, cap_t cap = std::nullopt);

    static morphism identity(table_ptr table, cap_t cap = std::nullopt);

    const table_ptr &source() const noexcept
    {
        return m_source;
    }
    const table_ptr &target() const noexcept
    {
        return m_target;
    }
    cap_t cap() const noexcept
    {
        return m_cap;
    }
    const std::vector<graded_series> &images() const noexcept
    {
        return m_images;
    }
    const graded_series &base_image(std::size_t j) const
    {
        return m_images.at(j);
    }
    const graded_series &formal_image(std::size_t b) const
    {
        return m_images.at(m_target->base_count() + b);
    }

    // f over target -> f over source. Truncated at min(cap(), f.cap()).
    graded_series pullback(const graded_series &f) const;
    // Same, additionally truncated at `cap`.
    graded_series pullback(const graded_series &f, cap_t cap) const;

    morphism with_cap(cap_t cap) const;
    bool equal_mod(const morphism &other, unsigned k) const;

    // epsilon parts of the base images, as polynomials in the source base
    // coordinates.
    std::vector<base_polynomial> base_map() const;
    // |mu| = 1 part of the formal images, one block per nonzero degree that
    // occurs in either table: rows are target generators, columns source
    // generators of that degree.
    std::map<degree, poly_matrix> linear_blocks() const;

    // Images are compared, caps are not.
    friend bool operator==(const morphism &a, const morphism &b);

private:
    table_ptr m_source;
    table_ptr m_target;
    std::vector<graded_series> m_images;
    cap_t m_cap;
};

inline morphism make_morphism(table_ptr source, table_ptr target, std::vector<graded_series> images,
                              cap_t cap = std::nullopt)
{
    return morphism(std::move(source), std::move(target), std::move(images), cap);
}

// The composite source(inner) -> target(outer): its images are the inner
// pullbacks of the outer images. Requires inner.target == outer.source.
morphism compose(const morphism &outer, const morphism &inner);

// g with compose(g, m) = compose(m, g) = identity mod J^{k+1}. The base
// map of m must be affine with invertible linear part; the formal linear
// part must have constant nonzero determinant in every sector.
morphism invert_mod_order(const morphism &m, unsigned k);

} // namespace zsuper

#endif
