#include "regseq/bounds.hpp"

#include "detail/mat2.hpp"
#include "regseq/linrep.hpp"
#include "regseq/polynomial.hpp"
#include "regseq/sequences.hpp"
#include "regseq/spectral.hpp"

#include <array>
#include <cassert>
#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

namespace regseq::bounds {

using detail::Mat2;
using exact::Polynomial;

namespace {

constexpr unsigned kSplitDepth = 8;  // 2^8 subtrees per table level

unsigned resolve_threads(unsigned threads) {
    if (threads != 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

mpz_class int128_to_mpz(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                              : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class out;
    mpz_mul_2exp(out.get_mpz_t(), hi.get_mpz_t(), 64);
    out += static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFull);
    return neg ? mpz_class(-out) : out;
}

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

// ---- lower-bound kernel -------------------------------------------------

// 4x4 accumulator of numerators at exponent n.
struct Acc4 {
    std::array<__int128, 16> v{};

    void add(const detail::Sign2& s, const Mat2& b) {
        // D (x) B with D having exactly one signed unit per row.
        const std::array<std::int64_t, 4> bn{b.a, b.b, b.c, b.d};
        const int d[2][2] = {{s.d11, s.d12}, {s.d21, s.d22}};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                if (d[i][j] == 0) continue;
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l) {
                        const std::int64_t term = bn[k * 2 + l];
                        v[(2 * i + k) * 4 + (2 * j + l)] += d[i][j] > 0 ? term : -term;
                    }
            }
    }

    void merge(const Acc4& o) {
        for (int i = 0; i < 16; ++i) v[i] += o.v[i];
    }
};

void lower_leaf(const Mat2& b, Acc4* acc) {
#ifndef NDEBUG
    // Column sums of B_b stay <= 1 (numerators <= 2^exp): the induced-norm
    // invariant behind the JSR <= 2 guard.
    const std::int64_t cap = std::int64_t{1} << b.exp2;
    assert(std::abs(b.a) + std::abs(b.c) <= cap);
    assert(std::abs(b.b) + std::abs(b.d) <= cap);
#endif
    acc->add(detail::sign_cols(b), b);
}

void lower_walk(const Mat2& b, unsigned remaining, Acc4* acc) {
    if (remaining == 0) {
        lower_leaf(b, acc);
        return;
    }
    lower_walk(detail::mul(b, detail::kEtaA0), remaining - 1, acc);
    lower_walk(detail::mul(b, detail::kEtaA1), remaining - 1, acc);
}

// ---- upper-bound kernel -------------------------------------------------

struct Pair64 {
    std::int64_t a, b;  // first column of B_w over 2^depth
};

inline Pair64 pair_step(const Pair64& p, bool bit) {
    // New most-significant digit d: pair <- A_d * pair (column action).
    return bit ? Pair64{-p.a, -p.a + 2 * p.b} : Pair64{2 * p.a - p.b, -p.b};
}

void upper_walk(const Pair64& p, unsigned remaining, unsigned depth,
                unsigned __int128* acc) {
    if (remaining == 0) {
        const std::int64_t aa = p.a < 0 ? -p.a : p.a;
        const std::int64_t ab = p.b < 0 ? -p.b : p.b;
        assert(aa + ab <= (std::int64_t{1} << depth));
        *acc += static_cast<unsigned __int128>(aa + ab);
        return;
    }
    upper_walk(pair_step(p, false), remaining - 1, depth + 1, acc);
    upper_walk(pair_step(p, true), remaining - 1, depth + 1, acc);
}

} // namespace

Matrix lower_bound_sum_matrix(unsigned n, unsigned threads) {
    if (n < 1 || n > 25)
        throw std::invalid_argument("lower_bound_sum_matrix: n out of [1,25]");
    Acc4 total;
    const unsigned split = std::min(kSplitDepth, n);
    const std::uint64_t prefixes = std::uint64_t{1} << split;
    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(threads), prefixes));
    std::vector<Acc4> parts(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            const std::uint64_t lo = prefixes * w / workers;
            const std::uint64_t hi = prefixes * (w + 1) / workers;
            for (std::uint64_t q = lo; q < hi; ++q)
                lower_walk(detail::word_product(q, split), n - split, &parts[w]);
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& p : parts) total.merge(p);

    mpz_class den(1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), n);
    Matrix a(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            a.at(i, j) = Rational(int128_to_mpz(total.v[i * 4 + j]), den);
    return a;
}

LowerRow lower_bound_row(unsigned n, unsigned threads) {
    if (n < 1 || n > 25) throw std::invalid_argument("lower_bound_row: n out of [1,25]");
    const auto start = std::chrono::steady_clock::now();
    const Matrix a = lower_bound_sum_matrix(n, threads);

    LowerRow row;
    row.n = n;
    const Polynomial p = exact::char_poly(a);
    const spectral::EigenSet eig = spectral::poly_roots(p);
    row.rho = eig.spectral_radius();

    const double tol = 1e-8 * std::max(1.0, row.rho);
    int dominant_count = 0;
    const spectral::EigenValue* dom = nullptr;
    for (const auto& ev : eig.roots) {
        if (std::abs(ev.value) >= row.rho - tol) {
            ++dominant_count;
            dom = &ev;
        } else {
            row.second_modulus = std::max(row.second_modulus, std::abs(ev.value));
        }
    }
    row.dominant_ok = dominant_count == 1 && dom && dom->multiplicity == 1 &&
                      std::abs(dom->value.imag()) <= tol && dom->value.real() > 0;

    if (const auto enc = spectral::refine_real_root(p, row.rho, 1e-13)) {
        row.rho_lo = enc->lo;
        row.rho_hi = enc->hi;
        const Rational mid = (enc->lo + enc->hi) * Rational(1, 2);
        row.rho = mid.to_double();
        row.log_value = exact::log2_rational(mid) / n;
        row.rho_gt_2 = enc->lo > Rational(2);
    } else {
        // No certified enclosure (dominant value not a simple real root,
        // as at the degenerate low levels); report the numeric value, use
        // its dyadic embedding as the statistic, and withhold the checks.
        row.dominant_ok = false;
        row.rho_lo = row.rho_hi = Rational::from_double(row.rho);
        row.log_value = std::log2(row.rho) / n;
        row.rho_gt_2 = false;
    }
    row.wall_ms = elapsed_ms(start);
    return row;
}

CoefficientPair coefficient_pair(unsigned n, std::uint64_t r) {
    if (n < 1 || n > 30) throw std::invalid_argument("coefficient_pair: n out of [1,30]");
    if (r >> n) throw std::invalid_argument("coefficient_pair: r out of [0, 2^n)");
    const Mat2 b = detail::word_product(r, n);
    return {DyadicScalar(b.a, n).normalized(), DyadicScalar(b.c, n).normalized()};
}

UpperRow rn_abs_norm(unsigned n, unsigned threads) {
    if (n < 1 || n > 30) throw std::invalid_argument("rn_abs_norm: n out of [1,30]");
    const auto start = std::chrono::steady_clock::now();

    const unsigned split = std::min(kSplitDepth, n);
    const std::uint64_t prefixes = std::uint64_t{1} << split;
    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(threads), prefixes));
    std::vector<unsigned __int128> parts(workers, 0);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            const std::uint64_t lo = prefixes * w / workers;
            const std::uint64_t hi = prefixes * (w + 1) / workers;
            for (std::uint64_t q = lo; q < hi; ++q) {
                // Suffix word q (the low split bits); its pair is the first
                // column of the padded product.
                const Mat2 b = detail::word_product(q, split);
                upper_walk(Pair64{b.a, b.c}, n - split, split, &parts[w]);
            }
        });
    }
    for (auto& t : pool) t.join();
    unsigned __int128 acc = 0;
    for (const auto& p : parts) acc += p;

    UpperRow row;
    row.n = n;
    row.norm = DyadicScalar::from_int128(static_cast<__int128>(acc), n).normalized();
    const Rational exact_norm = row.norm.to_rational();
    row.norm_float = exact_norm.to_double();
    row.log_value = exact::log2_rational(exact_norm) / n;
    row.wall_ms = elapsed_ms(start);
    return row;
}

Matrix r_matrix(unsigned n) {
    if (n < 1 || n > 12) throw std::invalid_argument("r_matrix: n out of [1,12]");
    Matrix r(std::size_t{1} << n, 2);
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
        const CoefficientPair p = coefficient_pair(n, i);
        r.at(i, 0) = p.a.to_rational();
        r.at(i, 1) = p.b.to_rational();
    }
    return r;
}

CorrelationDimensionReport correlation_dimension_report() {
    CorrelationDimensionReport out;

    // Closed form: the quadratic x^2 - x/2 - 1 divides the characteristic
    // polynomial of the eta^2 sum matrix exactly; its positive root is the
    // growth ratio of the block sums.
    const linrep::LinearRep sq = linrep::rep_eta_squared();
    const Polynomial p = exact::char_poly(sq.sum_matrix());
    const Polynomial quad({Rational(-1), Rational(-1, 2), Rational(1)});
    const auto [quot, rem] = p.divide(quad);
    if (!rem.is_zero())
        throw std::runtime_error("correlation_dimension: x^2 - x/2 - 1 does not divide "
                                 "the eta^2 characteristic polynomial");
    const double seed = (1.0 + std::sqrt(17.0)) / 4.0;
    const auto enc = spectral::refine_real_root(quad, seed, 1e-14);
    if (!enc) throw std::runtime_error("correlation_dimension: root refinement failed");
    out.closed_form = 1.0 - exact::log2_rational((enc->lo + enc->hi) * Rational(1, 2));

    // Empirical: successive differences of the exact block sums
    // S'(n) = sum_{m < 2^n} eta^2(m) cancel the additive constant, so the
    // difference ratio converges to the dominant root at rate (beta/alpha)^n.
    const Rational s38 = linrep::block_sum(sq, 38);
    const Rational s39 = linrep::block_sum(sq, 39);
    const Rational s40 = linrep::block_sum(sq, 40);
    out.empirical = 1.0 - exact::log2_rational((s40 - s39) / (s39 - s38));

    if (std::abs(out.closed_form - out.empirical) > 1e-6)
        throw std::runtime_error("correlation_dimension: closed form and empirical slope "
                                 "disagree beyond 1e-6");
    out.value = out.closed_form;
    return out;
}

double correlation_dimension() { return correlation_dimension_report().value; }

InformationDimension information_dimension(std::uint64_t n_trunc) {
    if (n_trunc < 1000)
        throw std::invalid_argument("information_dimension: truncation below 10^3");
    if (n_trunc > (std::uint64_t{1} << 24))
        throw std::invalid_argument("information_dimension: truncation beyond 2^24");

    const seq::EtaTable t(n_trunc);
    const double scale = std::ldexp(3.0, static_cast<int>(t.exp2()));
    double sum = 0.0, comp = 0.0;  // Kahan
    for (std::uint64_t m = 1; m <= n_trunc; ++m) {
        const double term = (static_cast<double>(t.scaled(m)) / scale) /
                            static_cast<double>(m);
        const double y = term - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }

    InformationDimension out;
    const double two_over_ln2 = 2.0 / std::numbers::ln2;
    out.estimate = 2.0 + two_over_ln2 * sum;
    // Abel summation against E(x) = sum_{m<=x} eta(m), |E| <= C:
    // |sum_{m>N} eta(m)/m| <= 2C/(N+1).
    out.tail_bound =
        two_over_ln2 * 2.0 * seq::kEtaPartialSumBound / static_cast<double>(n_trunc + 1);
    return out;
}

} // namespace regseq::bounds
