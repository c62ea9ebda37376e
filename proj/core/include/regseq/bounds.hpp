#pragma once

/**
 * @file bounds.hpp
 * @brief The two enumeration pipelines bracketing the growth exponent of
 *        sum |eta|, plus the Renyi dimension estimates.
 *
 * Lower bound: for each level n, accumulate A = sum over b < 2^n of
 * D_b (x) B_b exactly in dyadic arithmetic (depth-first over the 2^n digit
 * words), then certify the dominant eigenvalue of the 4x4 matrix A and
 * report log_{2^n} rho(A).
 *
 * Upper bound: ||R_n||_abs = sum over r < 2^n of |a_r| + |b_r| where
 * (a_r, b_r) is the coefficient pair with eta(2^n m + r) =
 * a_r eta(m) + b_r eta(m+1) -- the first column of B_r. Enumerated
 * depth-first with exact integer accumulators.
 *
 * Both kernels parallelize over digit-word prefixes with exact associative
 * merging, so results are bit-identical for any worker count.
 */

#include "regseq/dyadic.hpp"
#include "regseq/matrix.hpp"
#include "regseq/rational.hpp"
#include "regseq/sign_rep.hpp"

#include <cstdint>
#include <utility>

namespace regseq::bounds {

using exact::DyadicScalar;
using exact::Matrix;
using exact::Rational;

struct LowerRow {
    unsigned n = 0;
    Rational rho_lo, rho_hi;  // certified enclosure of rho(A), width <= 1e-12 rel
    double rho = 0.0;
    double log_value = 0.0;   // log_{2^n} rho(A)
    bool dominant_ok = false; // unique simple dominant eigenvalue, real positive
    bool rho_gt_2 = false;    // certified rho(A) > 2
    double second_modulus = 0.0;
    std::int64_t wall_ms = 0;
};

/// One row of the lower-bound table. Pre: 1 <= n <= 25.
/// threads = 0 means hardware concurrency.
LowerRow lower_bound_row(unsigned n, unsigned threads = 0);

/// The exact 4x4 accumulation sum over b < 2^n of D_b (x) B_b behind
/// lower_bound_row; equals the sum matrix of the Kronecker product of the
/// sign representation with the lifted eta representation.
Matrix lower_bound_sum_matrix(unsigned n, unsigned threads = 0);

struct CoefficientPair {
    DyadicScalar a, b;  // eta(2^n m + r) = a*eta(m) + b*eta(m+1)
};

/// Pre: 1 <= n <= 30, 0 <= r < 2^n.
CoefficientPair coefficient_pair(unsigned n, std::uint64_t r);

struct UpperRow {
    unsigned n = 0;
    DyadicScalar norm;        // ||R_n||_abs, exact
    double norm_float = 0.0;
    double log_value = 0.0;   // log_{2^n} ||R_n||_abs
    std::int64_t wall_ms = 0;
};

/// One row of the upper-bound table. Pre: 1 <= n <= 30.
UpperRow rn_abs_norm(unsigned n, unsigned threads = 0);

/// The 2^n x 2 coefficient matrix, row r = coefficient_pair(n, r).
/// Pre: n <= 12 (materialization bound).
Matrix r_matrix(unsigned n);

struct CorrelationDimensionReport {
    double value = 0.0;        // = closed_form
    double closed_form = 0.0;  // 1 - log2 of the certified dominant root
    double empirical = 0.0;    // 1 - slope of successive block-sum differences
};

/// Correlation dimension of the Thue-Morse spectral measure, computed two
/// ways and cross-checked to 1e-6 (throws std::runtime_error on
/// disagreement).
CorrelationDimensionReport correlation_dimension_report();
double correlation_dimension();

struct InformationDimension {
    double estimate = 0.0;
    double tail_bound = 0.0;  // certified truncation error bound
};

/// Information dimension from the truncated Dirichlet series
/// 2 + (2/ln 2) sum_{m=1}^{N} eta(m)/m with an Abel-summation tail bound.
/// Pre: 10^3 <= n_trunc <= 2^24.
InformationDimension information_dimension(std::uint64_t n_trunc);

} // namespace regseq::bounds
