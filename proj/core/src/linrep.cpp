#include "regseq/linrep.hpp"

#include <stdexcept>

namespace regseq::linrep {

DigitString digits(std::uint64_t n, unsigned radix) {
    if (radix < 2) throw std::invalid_argument("digits: radix must be >= 2");
    DigitString out;
    out.radix = radix;
    while (n > 0) {
        out.digits.push_back(static_cast<unsigned>(n % radix));
        n /= radix;
    }
    std::reverse(out.digits.begin(), out.digits.end());
    return out;
}

LinearRep::LinearRep(unsigned radix, Matrix initial, std::vector<Matrix> digit_mats,
                     Matrix final_col)
    : radix_(radix), initial_(std::move(initial)), mats_(std::move(digit_mats)),
      final_(std::move(final_col)) {
    if (radix_ < 2) throw std::invalid_argument("LinearRep: radix must be >= 2");
    if (mats_.size() != radix_)
        throw std::invalid_argument("LinearRep: expected " + std::to_string(radix_) +
                                    " digit matrices, got " + std::to_string(mats_.size()));
    const std::size_t d = initial_.cols();
    if (d == 0 || initial_.rows() != 1)
        throw std::invalid_argument("LinearRep: initial must be a 1xd row vector");
    for (const auto& m : mats_)
        if (m.rows() != d || m.cols() != d)
            throw std::invalid_argument("LinearRep: digit matrices must be " +
                                        std::to_string(d) + "x" + std::to_string(d));
    if (final_.rows() != d || final_.cols() != 1)
        throw std::invalid_argument("LinearRep: final must be a dx1 column vector");
}

LinearRep::LinearRep(unsigned radix, Matrix initial, std::vector<Matrix> digit_mats)
    : LinearRep(radix, initial, std::move(digit_mats),
                Matrix::unit_col(initial.cols(), 0)) {}

Matrix LinearRep::sum_matrix() const {
    Matrix s = mats_[0];
    for (std::size_t b = 1; b < mats_.size(); ++b) s = s + mats_[b];
    return s;
}

ValidationReport validate(const LinearRep& rep) {
    ValidationReport r;
    r.shapes_ok = true;  // the constructor enforces shapes
    r.leading_zero_invariant = (rep.initial() * rep.digit_mat(0)) == rep.initial();
    if (!r.leading_zero_invariant)
        r.detail = "initial * A_0 != initial; leading-zero padding changes values";
    return r;
}

Rational evaluate(const LinearRep& rep, std::uint64_t n) {
    Matrix row = rep.initial();
    const DigitString ds = digits(n, rep.radix());
    for (unsigned d : ds.digits) row = row * rep.digit_mat(d);
    return (row * rep.final_col()).at(0, 0);
}

Rational block_sum(const LinearRep& rep, unsigned j) {
    if (!validate(rep).leading_zero_invariant)
        throw std::invalid_argument(
            "block_sum: representation lacks the leading-zero invariant "
            "(initial * A_0 != initial), so padded digit strings change values "
            "and the block formula does not apply");
    Matrix row = rep.initial();
    const Matrix sum = rep.sum_matrix();
    for (unsigned i = 0; i < j; ++i) row = row * sum;
    return (row * rep.final_col()).at(0, 0);
}

Rational partial_sum_naive(const LinearRep& rep, std::uint64_t x) {
    Rational acc;
    for (std::uint64_t m = 0; m <= x; ++m) acc += evaluate(rep, m);
    return acc;
}

namespace {

// Prefix decomposition over padded digit strings of the length of x:
// walk the digits of x most significant first, keeping S = sum over all
// strings lexicographically below the current prefix and P = product along
// the prefix itself. Sound only under the leading-zero invariant.
Rational partial_sum_digits(const LinearRep& rep, std::uint64_t x) {
    const unsigned k = rep.radix();
    std::vector<Matrix> below(k + 1);  // below[j] = A_0 + ... + A_{j-1}
    below[0] = Matrix(rep.dim(), rep.dim());
    for (unsigned b = 0; b < k; ++b) below[b + 1] = below[b] + rep.digit_mat(b);
    const Matrix& all = below[k];

    Matrix sum(1, rep.dim());
    Matrix prefix = rep.initial();
    for (unsigned d : digits(x, k).digits) {
        sum = sum * all + prefix * below[d];
        prefix = prefix * rep.digit_mat(d);
    }
    return ((sum + prefix) * rep.final_col()).at(0, 0);
}

} // namespace

Rational partial_sum(const LinearRep& rep, std::uint64_t x) {
    if (validate(rep).leading_zero_invariant) return partial_sum_digits(rep, x);
    return partial_sum_naive(rep, x);
}

LinearRep kronecker(const LinearRep& f, const LinearRep& g) {
    if (f.radix() != g.radix())
        throw std::invalid_argument("kronecker: radix mismatch (" +
                                    std::to_string(f.radix()) + " vs " +
                                    std::to_string(g.radix()) + ")");
    std::vector<Matrix> mats;
    mats.reserve(f.radix());
    for (unsigned b = 0; b < f.radix(); ++b)
        mats.push_back(exact::kron(f.digit_mat(b), g.digit_mat(b)));
    return LinearRep(f.radix(), exact::kron(f.initial(), g.initial()), std::move(mats),
                     exact::kron(f.final_col(), g.final_col()));
}

LinearRep power_lift(const LinearRep& rep, unsigned n) {
    if (n == 0) throw std::invalid_argument("power_lift: n must be >= 1");
    const unsigned k = rep.radix();
    std::uint64_t count = 1;
    for (unsigned i = 0; i < n; ++i) {
        count *= k;
        if (count > (1u << 20))
            throw std::invalid_argument("power_lift: k^n digit matrices exceed the "
                                        "materialization budget (2^20)");
    }
    // Digit matrix b is the product over the base-k digits of b padded with
    // leading zeros to exactly n digits, most significant leftmost.
    std::vector<Matrix> mats;
    mats.reserve(count);
    for (std::uint64_t b = 0; b < count; ++b) {
        std::vector<unsigned> ds(n, 0);
        std::uint64_t v = b;
        for (unsigned i = 0; i < n; ++i) {
            ds[n - 1 - i] = static_cast<unsigned>(v % k);
            v /= k;
        }
        Matrix prod = Matrix::identity(rep.dim());
        for (unsigned d : ds) prod = prod * rep.digit_mat(d);
        mats.push_back(std::move(prod));
    }
    return LinearRep(static_cast<unsigned>(count), rep.initial(), std::move(mats),
                     rep.final_col());
}

LinearRep rep_eta() {
    const Rational h(1, 2);
    Matrix a0{{Rational(1), -h}, {Rational(0), -h}};
    Matrix a1{{-h, Rational(0)}, {-h, Rational(1)}};
    return LinearRep(2, Matrix::row_vector({Rational(1), Rational(-1, 3)}), {a0, a1});
}

LinearRep rep_eta_shift() {
    LinearRep base = rep_eta();
    return LinearRep(2, base.initial(), base.digit_mats(), Matrix::unit_col(2, 1));
}

LinearRep rep_thue_morse() {
    return LinearRep(2, Matrix::row_vector({Rational(1)}),
                     {Matrix{{Rational(1)}}, Matrix{{Rational(-1)}}});
}

LinearRep rep_t_eta() {
    const Rational h(1, 2);
    Matrix a0{{Rational(1), -h}, {Rational(0), -h}};
    Matrix a1{{h, Rational(0)}, {h, Rational(-1)}};
    return LinearRep(2, Matrix::row_vector({Rational(1), Rational(-1, 3)}), {a0, a1});
}

LinearRep rep_eta_squared() { return kronecker(rep_eta(), rep_eta()); }

LinearRep rep_eta_pair() { return kronecker(rep_eta(), rep_eta_shift()); }

LinearRep rep_one(unsigned radix) {
    std::vector<Matrix> mats(radix, Matrix{{Rational(1)}});
    return LinearRep(radix, Matrix::row_vector({Rational(1)}), std::move(mats));
}

} // namespace regseq::linrep
