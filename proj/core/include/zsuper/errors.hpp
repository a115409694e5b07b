#ifndef ZSUPER_ERRORS_HPP
#define ZSUPER_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zsuper
{

// Base class of every error raised by the library.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Degrees (or tables) of different arity n were mixed.
class arity_mismatch : public error
{
public:
    using error::error;
};

// Two objects live over different variable tables.
class table_mismatch : public error
{
public:
    using error::error;
};

class unknown_variable : public error
{
public:
    using error::error;
};

// An expression or transition does not respect the Z2^n grading.
class grading_violation : public error
{
public:
    using error::error;
};

// A coordinate image is not homogeneous of the degree of its coordinate.
class degree_mismatch : public grading_violation
{
public:
    using grading_violation::grading_violation;
};

class non_invertible_linear_part : public error
{
public:
    using error::error;
};

// The base map is outside the supported class (affine-invertible epsilon part).
class base_map_not_supported : public error
{
public:
    using error::error;
};

class malformed_atlas : public error
{
public:
    using error::error;
};

class cocycle_failure : public error
{
public:
    using error::error;
};

// A chart-wise family that should be consistent to some order is not.
class inconsistent_family : public error
{
public:
    using error::error;
};

// The affine system for a correction has no solution with base-polynomial
// coefficients of degree <= bound.
class unsolvable_at_bound : public error
{
public:
    explicit unsolvable_at_bound(unsigned bound, const std::string &what)
        : error("unsolvable at degree bound D=" + std::to_string(bound) + ": " + what), m_bound(bound)
    {
    }
    unsigned bound() const noexcept
    {
        return m_bound;
    }

private:
    unsigned m_bound;
};

class syntax_error : public error
{
public:
    syntax_error(std::size_t line, std::size_t column, std::string token, const std::string &msg)
        : error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg
                + (token.empty() ? std::string{} : " near '" + token + "'")),
          m_line(line), m_column(column), m_token(std::move(token))
    {
    }
    std::size_t line() const noexcept
    {
        return m_line;
    }
    std::size_t column() const noexcept
    {
        return m_column;
    }
    const std::string &token() const noexcept
    {
        return m_token;
    }

private:
    std::size_t m_line;
    std::size_t m_column;
    std::string m_token;
};

} // namespace zsuper

#endif
