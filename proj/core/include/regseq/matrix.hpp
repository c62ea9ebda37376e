#pragma once

/**
 * @file matrix.hpp
 * @brief Small dense matrices over exact rationals.
 *
 * Matrices are immutable values in practice: every operation returns a new
 * matrix, so they are safe to share across threads. No rounding happens
 * anywhere.
 */

#include "regseq/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace regseq::exact {

struct DimensionMismatch : std::invalid_argument {
    DimensionMismatch(const std::string& op,
                      std::size_t lr, std::size_t lc,
                      std::size_t rr, std::size_t rc);
    std::size_t lhs_rows, lhs_cols, rhs_rows, rhs_cols;
};

class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix row_vector(std::vector<Rational> entries);
    static Matrix col_vector(std::vector<Rational> entries);
    /// e_i as a d-dimensional column (0-based index).
    static Matrix unit_col(std::size_t dim, std::size_t i);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const Rational& s) const;
    Matrix operator-() const { return *this * Rational(-1); }

    bool operator==(const Matrix& o) const;

    Rational trace() const;
    Matrix transpose() const;

    /// Max absolute column sum (the 1-norm induced on column actions).
    Rational induced_one_norm() const;

    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> e_;
};

/// Exact product. Throws DimensionMismatch naming both shapes.
Matrix mat_mul(const Matrix& a, const Matrix& b);

/// Kronecker product: block (i,j) of the result is a(i,j)*b.
Matrix kron(const Matrix& a, const Matrix& b);

/// Row rank by exact fraction-free elimination.
std::size_t rank(const Matrix& m);

} // namespace regseq::exact
