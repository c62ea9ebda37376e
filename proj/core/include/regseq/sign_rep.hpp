#pragma once

/**
 * @file sign_rep.hpp
 * @brief Sign matrices D_b and the +/-1 sign sequences f^(n).
 *
 * Two sign-selection rules appear here. sign_matrix keeps one signed unit
 * per ROW of its input (row i is (sgn(b_i1), 0) when |b_i1| > |b_i2|, else
 * (0, sgn(b_i2))). The digit matrices D_b of the level-n sign sequence use
 * the COLUMN analog of the same rule on the lifted eta digit matrix B_b
 * (column j keeps the sign of its larger-magnitude entry, lower row on
 * ties): with one nonzero per column, the standard row-vector evaluation
 * starting from (1, -1) keeps both pair components in {-1, +1}, and this
 * is the variant that reproduces the reference exponent table. The two
 * rules are transposes of each other, reflecting the row/column duality of
 * the evaluation conventions.
 */

#include "regseq/linrep.hpp"
#include "regseq/matrix.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace regseq::bounds {

using exact::Matrix;
using linrep::LinearRep;

struct SignMatrix {
    std::array<std::array<int, 2>, 2> d{};  // entries in {-1, 0, +1}

    bool operator==(const SignMatrix&) const = default;
    Matrix to_matrix() const;
};

/// Row-rule sign matrix of a 2x2 rational matrix. Throws std::domain_error
/// on a zero row (a zero sign row would break the +/-1 structure).
SignMatrix sign_matrix(const Matrix& b);

/// D_b for level n: column-rule sign matrix of the product of the n base-2
/// digit matrices of b (padded with leading zeros to exactly n bits).
/// Pre: 1 <= n <= 30, b < 2^n.
SignMatrix sign_digit_matrix(unsigned n, std::uint64_t b);

/// f^(n): lazily evaluated, values in {-1, +1}. Pre: 1 <= n <= 25.
class SignSequence {
public:
    explicit SignSequence(unsigned n);
    unsigned level() const { return n_; }
    /// f^(n)(m). Throws std::runtime_error if a pair component ever leaves
    /// {-1, +1} (not expected; reported rather than assumed away).
    int value(std::uint64_t m) const;

private:
    unsigned n_;
    std::vector<SignMatrix> table_;  // materialized for n <= 12
};

/// Materialized linear representation of f^(n) (radix 2^n, initial (1, -1),
/// digit matrices D_b, final e_1). Pre: 1 <= n <= 12; use SignSequence
/// beyond that.
LinearRep sign_rep(unsigned n);

} // namespace regseq::bounds
