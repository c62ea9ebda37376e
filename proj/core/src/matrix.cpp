#include "regseq/matrix.hpp"

#include <sstream>
#include <utility>

namespace regseq::exact {

namespace {
std::string shape(std::size_t r, std::size_t c) {
    return std::to_string(r) + "x" + std::to_string(c);
}
} // namespace

DimensionMismatch::DimensionMismatch(const std::string& op,
                                     std::size_t lr, std::size_t lc,
                                     std::size_t rr, std::size_t rc)
    : std::invalid_argument(op + ": incompatible shapes " + shape(lr, lc) +
                            " and " + shape(rr, rc)),
      lhs_rows(lr), lhs_cols(lc), rhs_rows(rr), rhs_cols(rc) {}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("Matrix: ragged initializer rows");
        e_.insert(e_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Matrix Matrix::row_vector(std::vector<Rational> entries) {
    Matrix m;
    m.rows_ = 1;
    m.cols_ = entries.size();
    m.e_ = std::move(entries);
    return m;
}

Matrix Matrix::col_vector(std::vector<Rational> entries) {
    Matrix m;
    m.rows_ = entries.size();
    m.cols_ = 1;
    m.e_ = std::move(entries);
    return m;
}

Matrix Matrix::unit_col(std::size_t dim, std::size_t i) {
    Matrix m(dim, 1);
    m.at(i, 0) = Rational(1);
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("add", rows_, cols_, o.rows_, o.cols_);
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("sub", rows_, cols_, o.rows_, o.cols_);
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const { return mat_mul(*this, o); }

Matrix Matrix::operator*(const Rational& s) const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

Rational Matrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace: non-square matrix");
    Rational t;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Rational Matrix::induced_one_norm() const {
    Rational best;
    for (std::size_t j = 0; j < cols_; ++j) {
        Rational s;
        for (std::size_t i = 0; i < rows_; ++i) s += abs(at(i, j));
        if (s > best) best = s;
    }
    return best;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? ", " : "") << at(i, j).to_string();
        os << "]";
    }
    os << "]";
    return os.str();
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("mat_mul", a.rows(), a.cols(), b.rows(), b.cols());
    Matrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rational& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r.at(i * b.rows() + k, j * b.cols() + l) = aij * b.at(k, l);
        }
    return r;
}

std::size_t rank(const Matrix& m) {
    Matrix w = m;
    std::size_t rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < w.cols() && row < w.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < w.rows() && w.at(pivot, col).is_zero()) ++pivot;
        if (pivot == w.rows()) continue;
        for (std::size_t j = 0; j < w.cols(); ++j)
            std::swap(w.at(row, j), w.at(pivot, j));
        for (std::size_t i = row + 1; i < w.rows(); ++i) {
            if (w.at(i, col).is_zero()) continue;
            const Rational f = w.at(i, col) / w.at(row, col);
            for (std::size_t j = col; j < w.cols(); ++j)
                w.at(i, j) -= f * w.at(row, j);
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace regseq::exact
