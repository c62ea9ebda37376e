#pragma once

/**
 * @file polynomial.hpp
 * @brief Polynomials with exact rational coefficients.
 *
 * Carrier for characteristic polynomials and certified root work: exact
 * division, gcd, square-free decomposition, and sign evaluation at rational
 * points.
 */

#include "regseq/matrix.hpp"
#include "regseq/rational.hpp"

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace regseq::exact {

class Polynomial {
public:
    Polynomial() = default;  // zero polynomial
    /// Coefficients in ascending order (c0 + c1 x + ...); trailing zeros trimmed.
    explicit Polynomial(std::vector<Rational> ascending);

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial({Rational(1)}); }

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == Rational(1); }

    const Rational& coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational evaluate(const Rational& x) const;
    std::complex<long double> evaluate(std::complex<long double> x) const;
    /// p(M) for square M (Cayley-Hamilton checks).
    Matrix evaluate(const Matrix& m) const;

    Polynomial derivative() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& s) const;
    bool operator==(const Polynomial& o) const { return c_ == o.c_; }

    /// Exact Euclidean division; returns (quotient, remainder).
    std::pair<Polynomial, Polynomial> divide(const Polynomial& divisor) const;

    /// Leading coefficient scaled to 1.
    Polynomial monic() const;

    std::string to_string(const std::string& var = "x") const;

private:
    std::vector<Rational> c_;
};

/// Monic gcd over the rationals.
Polynomial poly_gcd(Polynomial a, Polynomial b);

/// Yun square-free decomposition: list of (factor, multiplicity) with the
/// factors pairwise coprime and square-free; product of factor^mult equals
/// the monic part of p.
std::vector<std::pair<Polynomial, int>> square_free_decomposition(const Polynomial& p);

/// Monic characteristic polynomial det(xI - M) by the Faddeev-LeVerrier
/// recursion over exact rationals. Pre: square, dim <= 16.
Polynomial char_poly(const Matrix& m);

} // namespace regseq::exact
