#ifndef ZSUPER_LINEAR_SOLVE_HPP
#define ZSUPER_LINEAR_SOLVE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include <zsuper/rational.hpp>

namespace zsuper
{

using sparse_row = std::map<std::size_t, rational>;

// Sparse affine system A c = b over Q. Columns are unknowns in a fixed
// order; elimination pivots on the lowest-index available column, so the
// solution (with free unknowns set to 0) depends only on that order.
class linear_system
{
public:
    explicit linear_system(std::size_t unknowns) : m_unknowns(unknowns) {}

    std::size_t unknowns() const noexcept
    {
        return m_unknowns;
    }
    std::size_t equations() const noexcept
    {
        return m_rows.size();
    }

    // Adds sum_j row[j] c_j = rhs. Empty rows with rhs 0 are dropped.
    void add_equation(sparse_row row, const rational &rhs);

    // nullopt when inconsistent.
    std::optional<std::vector<rational>> solve() const;

private:
    std::size_t m_unknowns;
    std::vector<sparse_row> m_rows;
    std::vector<rational> m_rhs;
};

using dense_matrix = std::vector<std::vector<rational>>;

// Inverse of a square rational matrix; nullopt if singular.
std::optional<dense_matrix> invert(const dense_matrix &m);

} // namespace zsuper

#endif
