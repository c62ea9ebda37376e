#pragma once

/**
 * @file linrep.hpp
 * @brief Linear representations of k-regular sequences.
 *
 * A representation holds an initial row vector, one square digit matrix per
 * base-k digit, and a final column vector; evaluation multiplies the digit
 * matrices of n (most significant digit leftmost) between the two vectors.
 * On top of that sit exact block/partial sums, the radix power-lift, and
 * the Kronecker point-wise product.
 */

#include "regseq/matrix.hpp"
#include "regseq/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace regseq::linrep {

using exact::Matrix;
using exact::Rational;

struct DigitString {
    unsigned radix = 2;
    std::vector<unsigned> digits;  // most significant first; empty for n = 0
    bool padded = false;
};

/// Base-k digits of n without leading zeros; empty for n = 0. Pre: k >= 2.
DigitString digits(std::uint64_t n, unsigned radix);

struct ValidationReport {
    bool shapes_ok = false;
    bool leading_zero_invariant = false;  // initial * A_0 == initial
    std::string detail;
};

class LinearRep {
public:
    /// Throws std::invalid_argument when shapes are inconsistent.
    LinearRep(unsigned radix, Matrix initial, std::vector<Matrix> digit_mats, Matrix final_col);
    /// Final vector defaults to e_1.
    LinearRep(unsigned radix, Matrix initial, std::vector<Matrix> digit_mats);

    unsigned radix() const { return radix_; }
    std::size_t dim() const { return initial_.cols(); }
    const Matrix& initial() const { return initial_; }
    const Matrix& digit_mat(std::size_t b) const { return mats_.at(b); }
    const std::vector<Matrix>& digit_mats() const { return mats_; }
    const Matrix& final_col() const { return final_; }

    /// Sum of all digit matrices.
    Matrix sum_matrix() const;

private:
    unsigned radix_;
    Matrix initial_;
    std::vector<Matrix> mats_;
    Matrix final_;
};

ValidationReport validate(const LinearRep& rep);

/// Exact f(n) = initial * A_{i_s} ... A_{i_0} * final (empty product for n = 0).
Rational evaluate(const LinearRep& rep, std::uint64_t n);

/// Exact sum over the full digit block [0, k^j): initial * (sum A_b)^j * final.
/// Pre: leading-zero invariant holds (padding must not change values).
Rational block_sum(const LinearRep& rep, unsigned j);

/// Exact sum over m = 0..x. Uses the digit-recursive prefix decomposition
/// when the leading-zero invariant holds, the naive scan otherwise.
Rational partial_sum(const LinearRep& rep, std::uint64_t x);
/// Always-available term-by-term engine (independent oracle for the above).
Rational partial_sum_naive(const LinearRep& rep, std::uint64_t x);

/// Representation of the point-wise product f*g: Kronecker products of the
/// initial vectors, the matching digit matrices, and the final vectors.
/// Pre: equal radix.
LinearRep kronecker(const LinearRep& f, const LinearRep& g);

/// Same sequence over radix k^n: digit matrix b is the product of the n
/// base-k digit matrices of b, padded with leading zeros to exactly n digits.
LinearRep power_lift(const LinearRep& rep, unsigned n);

// Built-in representations.
LinearRep rep_eta();          // Thue-Morse autocorrelation, dim 2, radix 2
LinearRep rep_eta_shift();    // eta(m+1): same matrices, final = e_2
LinearRep rep_thue_morse();   // dim 1: A_0 = (1), A_1 = (-1)
LinearRep rep_t_eta();        // t(m)*eta(m), dim 2
LinearRep rep_eta_squared();  // eta^2 via the Kronecker square
LinearRep rep_eta_pair();     // eta(m)*eta(m+1)
LinearRep rep_one(unsigned radix);  // constant 1

} // namespace regseq::linrep
