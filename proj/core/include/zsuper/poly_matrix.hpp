#ifndef ZSUPER_POLY_MATRIX_HPP
#define ZSUPER_POLY_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include <zsuper/base_polynomial.hpp>

namespace zsuper
{

// Dense matrix with base_polynomial entries; used for the sector blocks of
// linear transition data.
class poly_matrix
{
public:
    poly_matrix(std::size_t rows, std::size_t cols, std::size_t nvars);

    static poly_matrix identity(std::size_t n, std::size_t nvars);

    std::size_t rows() const noexcept
    {
        return m_rows;
    }
    std::size_t cols() const noexcept
    {
        return m_cols;
    }
    std::size_t nvars() const noexcept
    {
        return m_nvars;
    }
    base_polynomial &operator()(std::size_t r, std::size_t c)
    {
        return m_entries[r * m_cols + c];
    }
    const base_polynomial &operator()(std::size_t r, std::size_t c) const
    {
        return m_entries[r * m_cols + c];
    }

    friend poly_matrix operator*(const poly_matrix &a, const poly_matrix &b);
    friend bool operator==(const poly_matrix &, const poly_matrix &) = default;

    base_polynomial determinant() const;
    poly_matrix adjugate() const;
    // The inverse is polynomial iff the determinant is a nonzero constant.
    bool has_polynomial_inverse() const;
    poly_matrix inverse() const;

    // Substitutes the base variables of every entry.
    poly_matrix compose(std::span<const base_polynomial> subs) const;

private:
    poly_matrix minor(std::size_t row, std::size_t col) const;

    std::size_t m_rows;
    std::size_t m_cols;
    std::size_t m_nvars;
    std::vector<base_polynomial> m_entries;
};

} // namespace zsuper

#endif
