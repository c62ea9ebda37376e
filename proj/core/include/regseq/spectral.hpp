#pragma once

/**
 * @file spectral.hpp
 * @brief Eigenvalues of small exact matrices, dominance verification, and
 *        joint-spectral-radius bounds.
 *
 * Eigenvalues come from the exact characteristic polynomial: multiplicities
 * via exact square-free decomposition, roots of the square-free factors via
 * closed forms (degree <= 2) or Aberth iteration on an exactly rescaled
 * polynomial. The dominant real root can additionally be enclosed by exact
 * rational bisection, which is what the table pipelines certify against.
 */

#include "regseq/linrep.hpp"
#include "regseq/matrix.hpp"
#include "regseq/polynomial.hpp"

#include <complex>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace regseq::spectral {

using exact::Matrix;
using exact::Polynomial;
using exact::Rational;

struct RootFindingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EigenValue {
    std::complex<double> value;
    int multiplicity = 1;
    /// Set when the root came out of a linear factor, hence is exactly known.
    std::optional<Rational> exact;
};

struct EigenSet {
    std::vector<EigenValue> roots;  // multiplicities sum to the degree/dimension
    double tolerance = 1e-10;
    double max_residual = 0.0;

    double spectral_radius() const;
};

/// All complex roots of p with algebraic multiplicities.
EigenSet poly_roots(const Polynomial& p);

/// Eigenvalues of a square matrix. Pre: dim <= 8.
EigenSet eigenvalues(const Matrix& m);

/// Certified enclosure of a simple real root near seed: exact sign-change
/// bisection down to relative width rel_width. Empty when no sign change
/// brackets the seed (e.g. even multiplicity).
struct RealRootEnclosure {
    Rational lo, hi;
    double mid() const { return ((lo + hi) * Rational(1, 2)).to_double(); }
};
std::optional<RealRootEnclosure> refine_real_root(const Polynomial& p, double seed,
                                                  double rel_width = 1e-13);

struct DominanceReport {
    double rho = 0.0;
    bool unique_dominant = false;  // a single positive real value of maximal modulus
    int algebraic_mult = 0;
    int geometric_mult = 0;
    double jsr_lower = 0.0;
    double jsr_upper = 0.0;
    bool dumas_applicable = false;  // unique_dominant && alg == geo && rho > jsr_upper
    double second_modulus = 0.0;    // largest modulus outside the dominant value
    Polynomial characteristic;      // exact
};

/// Joint-spectral-radius bounds from products up to length L:
/// upper = min over l <= L of max ||P||_1^(1/l) (induced 1-norm, exact max),
/// lower = max over l <= L of max rho(P)^(1/l).
/// Pre: square matrices of equal dimension; |mats|^L <= 10^6.
std::pair<double, double> jsr_bounds(const std::vector<Matrix>& mats, unsigned depth);

/// Dominance report for m = sum of digit_mats (verified exactly).
DominanceReport dominance(const Matrix& m, const std::vector<Matrix>& digit_mats,
                          unsigned jsr_depth = 1);

/// Growth exponent log_radix(rho(sum matrix)) plus the hypothesis report.
std::pair<double, DominanceReport> dumas_exponent(const linrep::LinearRep& rep,
                                                  unsigned jsr_depth = 1);

} // namespace regseq::spectral
