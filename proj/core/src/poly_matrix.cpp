#include <zsuper/poly_matrix.hpp>

#include <zsuper/errors.hpp>

namespace zsuper
{

poly_matrix::poly_matrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : m_rows(rows), m_cols(cols), m_nvars(nvars), m_entries(rows * cols, base_polynomial(nvars))
{
}

poly_matrix poly_matrix::identity(std::size_t n, std::size_t nvars)
{
    poly_matrix m(n, n, nvars);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = base_polynomial::constant(nvars, 1);
    }
    return m;
}

poly_matrix operator*(const poly_matrix &a, const poly_matrix &b)
{
    if (a.m_cols != b.m_rows || a.m_nvars != b.m_nvars) {
        throw error("matrix dimensions do not match");
    }
    poly_matrix out(a.m_rows, b.m_cols, a.m_nvars);
    for (std::size_t i = 0; i < a.m_rows; ++i) {
        for (std::size_t j = 0; j < b.m_cols; ++j) {
            auto &acc = out(i, j);
            for (std::size_t k = 0; k < a.m_cols; ++k) {
                if (!a(i, k).is_zero() && !b(k, j).is_zero()) {
                    acc += a(i, k) * b(k, j);
                }
            }
        }
    }
    return out;
}

poly_matrix poly_matrix::minor(std::size_t row, std::size_t col) const
{
    poly_matrix out(m_rows - 1, m_cols - 1, m_nvars);
    for (std::size_t i = 0, oi = 0; i < m_rows; ++i) {
        if (i == row) {
            continue;
        }
        for (std::size_t j = 0, oj = 0; j < m_cols; ++j) {
            if (j == col) {
                continue;
            }
            out(oi, oj++) = (*this)(i, j);
        }
        ++oi;
    }
    return out;
}

// Cofactor expansion along the first row; blocks are tiny.
base_polynomial poly_matrix::determinant() const
{
    if (m_rows != m_cols) {
        throw error("determinant of a non-square matrix");
    }
    if (m_rows == 0u) {
        return base_polynomial::constant(m_nvars, 1);
    }
    if (m_rows == 1u) {
        return (*this)(0, 0);
    }
    base_polynomial det(m_nvars);
    for (std::size_t j = 0; j < m_cols; ++j) {
        if ((*this)(0, j).is_zero()) {
            continue;
        }
        auto term = (*this)(0, j) * minor(0, j).determinant();
        if (j % 2u == 0u) {
            det += term;
        } else {
            det -= term;
        }
    }
    return det;
}

poly_matrix poly_matrix::adjugate() const
{
    if (m_rows != m_cols) {
        throw error("adjugate of a non-square matrix");
    }
    poly_matrix out(m_rows, m_cols, m_nvars);
    if (m_rows == 1u) {
        out(0, 0) = base_polynomial::constant(m_nvars, 1);
        return out;
    }
    for (std::size_t i = 0; i < m_rows; ++i) {
        for (std::size_t j = 0; j < m_cols; ++j) {
            auto c = minor(i, j).determinant();
            out(j, i) = (i + j) % 2u == 0u ? c : -c;
        }
    }
    return out;
}

bool poly_matrix::has_polynomial_inverse() const
{
    if (m_rows != m_cols) {
        return false;
    }
    const auto det = determinant();
    return !det.is_zero() && det.is_constant();
}

poly_matrix poly_matrix::inverse() const
{
    if (!has_polynomial_inverse()) {
        throw non_invertible_linear_part("matrix determinant is not a nonzero constant");
    }
    const rational inv_det = 1 / determinant().constant_term();
    auto adj = adjugate();
    for (auto &e : adj.m_entries) {
        e *= inv_det;
    }
    return adj;
}

poly_matrix poly_matrix::compose(std::span<const base_polynomial> subs) const
{
    const std::size_t target_vars = subs.empty() ? m_nvars : subs.front().nvars();
    poly_matrix out(m_rows, m_cols, target_vars);
    for (std::size_t i = 0; i < m_entries.size(); ++i) {
        out.m_entries[i] = m_entries[i].compose(subs);
    }
    return out;
}

} // namespace zsuper
