#include <zsuper/linear_solve.hpp>

#include <zsuper/errors.hpp>

namespace zsuper
{

void linear_system::add_equation(sparse_row row, const rational &rhs)
{
    for (auto it = row.begin(); it != row.end();) {
        if (it->first >= m_unknowns) {
            throw error("equation refers to an unknown out of range");
        }
        it = it->second == 0 ? row.erase(it) : std::next(it);
    }
    if (row.empty() && rhs == 0) {
        return;
    }
    m_rows.push_back(std::move(row));
    m_rhs.push_back(rhs);
}

std::optional<std::vector<rational>> linear_system::solve() const
{
    auto rows = m_rows;
    auto rhs = m_rhs;
    std::vector<bool> is_pivot(rows.size(), false);
    std::vector<std::pair<std::size_t, std::size_t>> pivots; // (column, row)

    for (std::size_t col = 0; col < m_unknowns; ++col) {
        std::size_t prow = rows.size();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!is_pivot[r] && rows[r].count(col) != 0u) {
                prow = r;
                break;
            }
        }
        if (prow == rows.size()) {
            continue;
        }
        const rational inv = 1 / rows[prow].at(col);
        for (auto &[c, v] : rows[prow]) {
            v *= inv;
        }
        rhs[prow] *= inv;
        is_pivot[prow] = true;
        pivots.emplace_back(col, prow);

        const auto &pivot_row = rows[prow];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == prow) {
                continue;
            }
            const auto it = rows[r].find(col);
            if (it == rows[r].end()) {
                continue;
            }
            const rational factor = it->second;
            for (const auto &[c, v] : pivot_row) {
                auto &entry = rows[r][c];
                entry -= factor * v;
                if (entry == 0) {
                    rows[r].erase(c);
                }
            }
            rhs[r] -= factor * rhs[prow];
        }
    }

    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!is_pivot[r] && rows[r].empty() && rhs[r] != 0) {
            return std::nullopt;
        }
    }
    std::vector<rational> solution(m_unknowns, rational(0));
    for (const auto &[col, row] : pivots) {
        solution[col] = rhs[row];
    }
    return solution;
}

std::optional<dense_matrix> invert(const dense_matrix &m)
{
    const auto n = m.size();
    for (const auto &row : m) {
        if (row.size() != n) {
            throw error("matrix inverse requires a square matrix");
        }
    }
    // Gauss-Jordan on [m | I].
    dense_matrix a(n, std::vector<rational>(2 * n, rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = m[i][j];
        }
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a[p][col] == 0) {
            ++p;
        }
        if (p == n) {
            return std::nullopt;
        }
        std::swap(a[p], a[col]);
        const rational inv = 1 / a[col][col];
        for (auto &v : a[col]) {
            v *= inv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) {
                continue;
            }
            const rational f = a[r][col];
            for (std::size_t j = 0; j < 2 * n; ++j) {
                a[r][j] -= f * a[col][j];
            }
        }
    }
    dense_matrix out(n, std::vector<rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out[i][j] = a[i][n + j];
        }
    }
    return out;
}

} // namespace zsuper
