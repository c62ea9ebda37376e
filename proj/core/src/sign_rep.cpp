#include "regseq/sign_rep.hpp"

#include "detail/mat2.hpp"

#include <stdexcept>

namespace regseq::bounds {

using exact::Rational;

Matrix SignMatrix::to_matrix() const {
    Matrix m(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m.at(i, j) = Rational(d[i][j]);
    return m;
}

SignMatrix sign_matrix(const Matrix& b) {
    if (b.rows() != 2 || b.cols() != 2)
        throw std::invalid_argument("sign_matrix: expected a 2x2 matrix, got " +
                                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    SignMatrix s;
    for (int i = 0; i < 2; ++i) {
        const Rational& l = b.at(i, 0);
        const Rational& r = b.at(i, 1);
        if (l.is_zero() && r.is_zero())
            throw std::domain_error("sign_matrix: zero row " + std::to_string(i + 1) +
                                    " would produce a zero sign row");
        if (abs(l) > abs(r)) s.d[i][0] = l.sign();
        else s.d[i][1] = r.sign();
    }
    return s;
}

namespace {

SignMatrix sign_from_cols(const detail::Mat2& m) {
    const detail::Sign2 s = detail::sign_cols(m);
    SignMatrix out;
    out.d = {{{s.d11, s.d12}, {s.d21, s.d22}}};
    return out;
}

} // namespace

SignMatrix sign_digit_matrix(unsigned n, std::uint64_t b) {
    if (n < 1 || n > 30) throw std::invalid_argument("sign_digit_matrix: n out of [1,30]");
    if (b >> n) throw std::invalid_argument("sign_digit_matrix: digit out of range");
    return sign_from_cols(detail::word_product(b, n));
}

SignSequence::SignSequence(unsigned n) : n_(n) {
    if (n < 1 || n > 25) throw std::invalid_argument("SignSequence: n out of [1,25]");
    if (n <= 12) {
        table_.reserve(std::size_t{1} << n);
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b)
            table_.push_back(sign_digit_matrix(n, b));
    }
}

int SignSequence::value(std::uint64_t m) const {
    // Standard evaluation: the pair (f, f_2) starts at (1, -1) and is
    // right-multiplied by D_b per base-2^n digit, most significant first.
    // One nonzero per column keeps both components in {-1, +1}.
    int f = 1, f2 = -1;
    if (m == 0) return f;
    const unsigned bits = 64 - static_cast<unsigned>(__builtin_clzll(m));
    const unsigned ndigits = (bits + n_ - 1) / n_;
    for (unsigned i = ndigits; i-- > 0;) {
        const std::uint64_t b = (m >> (i * n_)) & ((std::uint64_t{1} << n_) - 1);
        const SignMatrix d = table_.empty() ? sign_digit_matrix(n_, b) : table_[b];
        const int nf = f * d.d[0][0] + f2 * d.d[1][0];
        const int nf2 = f * d.d[0][1] + f2 * d.d[1][1];
        f = nf;
        f2 = nf2;
        if ((f != 1 && f != -1) || (f2 != 1 && f2 != -1))
            throw std::runtime_error("SignSequence: pair left {-1,+1} at level " +
                                     std::to_string(n_) + ", m = " + std::to_string(m));
    }
    return f;
}

LinearRep sign_rep(unsigned n) {
    if (n < 1 || n > 12)
        throw std::invalid_argument("sign_rep: materialization is limited to n <= 12; "
                                    "use SignSequence for larger levels");
    std::vector<Matrix> mats;
    mats.reserve(std::size_t{1} << n);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b)
        mats.push_back(sign_digit_matrix(n, b).to_matrix());
    return LinearRep(1u << n, Matrix::row_vector({Rational(1), Rational(-1)}),
                     std::move(mats));
}

} // namespace regseq::bounds
