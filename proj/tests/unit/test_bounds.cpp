#include "regseq/bounds.hpp"

#include "regseq/linrep.hpp"
#include "regseq/sequences.hpp"
#include "regseq/spectral.hpp"

#include <doctest.h>

#include <cmath>

using namespace regseq::bounds;
using regseq::exact::Matrix;
using regseq::exact::Rational;
using regseq::linrep::LinearRep;

namespace {
Rational r(long n, long d = 1) { return Rational(n, d); }
}

TEST_CASE("row-rule sign matrix") {
    const Matrix a0{{r(1), r(-1, 2)}, {r(0), r(-1, 2)}};
    SignMatrix s = sign_matrix(a0);
    CHECK(s.d == std::array<std::array<int, 2>, 2>{{{1, 0}, {0, -1}}});

    const Matrix a0sq{{r(1), r(-1, 4)}, {r(0), r(1, 4)}};
    s = sign_matrix(a0sq);
    CHECK(s.d == std::array<std::array<int, 2>, 2>{{{1, 0}, {0, 1}}});

    // tie in a row takes the second branch
    const Matrix tie{{r(1, 2), r(-1, 2)}, {r(1), r(0)}};
    s = sign_matrix(tie);
    CHECK(s.d[0] == std::array<int, 2>{0, -1});
    CHECK(s.d[1] == std::array<int, 2>{1, 0});

    CHECK_THROWS_AS(sign_matrix(Matrix{{r(0), r(0)}, {r(1), r(0)}}), std::domain_error);
    CHECK_THROWS_AS(sign_matrix(Matrix(3, 3)), std::invalid_argument);
}

TEST_CASE("sign digit matrices and the sign representation agree") {
    for (unsigned n : {1u, 2u, 3u, 6u}) {
        const LinearRep rep = sign_rep(n);
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b)
            CHECK(sign_digit_matrix(n, b).to_matrix() == rep.digit_mat(b));
    }
    CHECK_THROWS_AS(sign_digit_matrix(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(sign_rep(13), std::invalid_argument);
}

TEST_CASE("sign sequences take only the values +/-1") {
    for (unsigned n = 1; n <= 6; ++n) {
        const SignSequence f(n);
        const LinearRep rep = sign_rep(n);
        for (std::uint64_t m = 0; m <= 2000; ++m) {
            const int v = f.value(m);
            CHECK((v == 1 || v == -1));
            CHECK(regseq::linrep::evaluate(rep, m) == Rational(v));
        }
    }
    // lazy path beyond the materialization bound
    const SignSequence f14(14);
    for (std::uint64_t m = 0; m <= 500; ++m) {
        const int v = f14.value(m * 977 + 3);
        CHECK((v == 1 || v == -1));
    }
}

TEST_CASE("sign sequence marker values") {
    for (unsigned n = 1; n <= 19; ++n) {
        const SignSequence f(n);
        CHECK(f.value(0) == 1);
        CHECK(f.value(5) == (n % 2 ? -1 : 1));
    }
}

TEST_CASE("lower-bound rows match the reference exponents") {
    const LowerRow r3 = lower_bound_row(3, 2);
    CHECK(std::abs(r3.log_value - 0.565666799497928) <= 1e-9);
    CHECK(r3.dominant_ok);
    CHECK(r3.rho_gt_2);

    const LowerRow r10 = lower_bound_row(10, 2);
    CHECK(std::abs(r10.log_value - 0.617611929153285) <= 1e-9);
    CHECK(r10.dominant_ok);
    CHECK(r10.rho_gt_2);

    CHECK_THROWS_AS(lower_bound_row(26), std::invalid_argument);
    CHECK_THROWS_AS(lower_bound_row(0), std::invalid_argument);
}

TEST_CASE("degenerate low levels emit rows with the checks withheld") {
    // n = 1 has the dominant pair +/-sqrt(2); n = 2 also lacks a unique
    // simple dominant root. Rows come out anyway, flagged false.
    const LowerRow r1 = lower_bound_row(1, 1);
    CHECK_FALSE(r1.dominant_ok);
    CHECK_FALSE(r1.rho_gt_2);
    CHECK(r1.rho == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    const LowerRow r2 = lower_bound_row(2, 1);
    CHECK_FALSE(r2.dominant_ok);
    CHECK(r2.rho == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("lower-bound sum matrix equals the Kronecker construction") {
    for (unsigned n : {1u, 2u, 4u, 6u, 8u}) {
        const LinearRep prod = regseq::linrep::kronecker(
            sign_rep(n), regseq::linrep::power_lift(regseq::linrep::rep_eta(), n));
        CHECK(lower_bound_sum_matrix(n) == prod.sum_matrix());
    }
}

TEST_CASE("coefficient pairs") {
    const CoefficientPair p21 = coefficient_pair(2, 1);
    CHECK(p21.a.to_rational() == r(-1, 4));
    CHECK(p21.b.to_rational() == r(1, 4));
    const CoefficientPair p22 = coefficient_pair(2, 2);
    CHECK(p22.a.to_rational() == r(-1, 2));
    CHECK(p22.b.to_rational() == r(-1, 2));
    for (unsigned n : {1u, 3u, 7u, 20u}) {
        const CoefficientPair p = coefficient_pair(n, 0);
        CHECK(p.a.to_rational() == r(1));
        CHECK(p.b.to_rational() == r(0));
    }
    CHECK_THROWS_AS(coefficient_pair(2, 4), std::invalid_argument);
}

TEST_CASE("coefficient pairs reproduce eta on arithmetic progressions") {
    const regseq::seq::EtaTable t(1u << 12);
    for (unsigned n = 1; n <= 6; ++n) {
        for (std::uint64_t rr = 0; rr < (std::uint64_t{1} << n); ++rr) {
            const CoefficientPair p = coefficient_pair(n, rr);
            const Rational a = p.a.to_rational(), b = p.b.to_rational();
            CHECK(abs(a) + abs(b) <= r(1));
            for (std::uint64_t m = 0; m <= 40; ++m)
                CHECK(t.value((m << n) + rr) == a * t.value(m) + b * t.value(m + 1));
        }
    }
}

TEST_CASE("upper-bound norms, exact small values") {
    CHECK(rn_abs_norm(1).norm.to_rational() == r(2));
    CHECK(rn_abs_norm(2).norm.to_rational() == r(3));
    CHECK(rn_abs_norm(3).norm.to_rational() == r(5));
    CHECK(rn_abs_norm(4).norm.to_rational() == r(15, 2));
    CHECK(rn_abs_norm(1).log_value == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(rn_abs_norm(31), std::invalid_argument);
}

TEST_CASE("r_matrix ties the engines together") {
    // rows of the materialized matrix
    const Matrix r2 = r_matrix(2);
    CHECK(r2.at(0, 0) == r(1));
    CHECK(r2.at(0, 1) == r(0));
    CHECK(r2.at(1, 0) == r(-1, 4));
    CHECK(r2.at(1, 1) == r(1, 4));
    CHECK(r2.at(2, 0) == r(-1, 2));
    CHECK(r2.at(2, 1) == r(-1, 2));
    CHECK(r2.at(3, 0) == r(1, 4));
    CHECK(r2.at(3, 1) == r(-1, 4));

    const Matrix r1 = r_matrix(1);
    CHECK(r1.at(1, 0) == r(-1, 2));
    CHECK(r1.at(1, 1) == r(-1, 2));

    // row r = first column of the lifted digit matrix B_r
    for (unsigned n : {1u, 2u, 5u, 10u}) {
        const LinearRep lift = regseq::linrep::power_lift(regseq::linrep::rep_eta(), n);
        const Matrix rm = r_matrix(n);
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
            CHECK(rm.at(b, 0) == lift.digit_mat(b).at(0, 0));
            CHECK(rm.at(b, 1) == lift.digit_mat(b).at(1, 0));
        }
    }

    // column-wise absolute sum equals the enumerated norm, exactly
    for (unsigned n = 1; n <= 12; ++n) {
        const Matrix rm = r_matrix(n);
        Rational sum;
        for (std::size_t i = 0; i < rm.rows(); ++i)
            sum += abs(rm.at(i, 0)) + abs(rm.at(i, 1));
        CHECK(sum == rn_abs_norm(n).norm.to_rational());
    }
}

TEST_CASE("table monotonicity in the tested ranges") {
    double prev = 0.0;
    for (unsigned n = 3; n <= 10; ++n) {
        const double v = lower_bound_row(n, 2).log_value;
        CHECK(v > prev);
        prev = v;
    }
    prev = 2.0;
    for (unsigned n = 2; n <= 12; ++n) {
        const double v = rn_abs_norm(n, 2).log_value;
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("determinism across worker counts") {
    const Matrix a1 = lower_bound_sum_matrix(10, 1);
    CHECK(lower_bound_sum_matrix(10, 2) == a1);
    CHECK(lower_bound_sum_matrix(10, 8) == a1);
    const Rational n16 = rn_abs_norm(16, 1).norm.to_rational();
    CHECK(rn_abs_norm(16, 2).norm.to_rational() == n16);
    CHECK(rn_abs_norm(16, 8).norm.to_rational() == n16);
}

TEST_CASE("sign twists lower-bound the absolute sums") {
    const regseq::seq::EtaTable t(1u << 14);
    for (unsigned n : {1u, 3u, 6u}) {
        const SignSequence f(n);
        Rational twisted, absolute;
        for (std::uint64_t m = 0; m <= (1u << 14); ++m) {
            twisted += Rational(f.value(m)) * t.value(m);
            absolute += abs(t.value(m));
            CHECK(abs(twisted) <= absolute);
        }
    }
}

TEST_CASE("correlation dimension") {
    const CorrelationDimensionReport rep = correlation_dimension_report();
    CHECK(std::abs(rep.value - 0.64298136) <= 1e-6);
    CHECK(std::abs(rep.closed_form - rep.empirical) <= 1e-6);

    // consistency with the growth exponent of the squared sequence
    const auto [expnt, dom] = regseq::spectral::dumas_exponent(
        regseq::linrep::power_lift(regseq::linrep::rep_eta_squared(), 2), 1);
    CHECK(std::abs((1.0 - expnt) - rep.value) <= 1e-9);
}

TEST_CASE("information dimension tail behavior") {
    const auto d3 = information_dimension(1000);
    const auto d4 = information_dimension(10000);
    const auto d5 = information_dimension(100000);
    const auto d6 = information_dimension(200000);
    CHECK(std::abs(information_dimension(2000).estimate - d3.estimate) <= d3.tail_bound);
    CHECK(std::abs(information_dimension(20000).estimate - d4.estimate) <= d4.tail_bound);
    CHECK(std::abs(d6.estimate - d5.estimate) <= d5.tail_bound);
    CHECK(d4.tail_bound < d3.tail_bound);
    CHECK(d5.tail_bound < d4.tail_bound);
    CHECK_THROWS_AS(information_dimension(999), std::invalid_argument);
}
