#include "regseq/spectral.hpp"

#include "regseq/linrep.hpp"

#include <doctest.h>

#include <cmath>

using namespace regseq::spectral;
using regseq::exact::Matrix;
using regseq::exact::Polynomial;
using regseq::exact::Rational;
using regseq::linrep::LinearRep;

namespace {
Rational r(long n, long d = 1) { return Rational(n, d); }

const EigenValue* find_root(const EigenSet& e, double value) {
    for (const auto& ev : e.roots)
        if (std::abs(ev.value - std::complex<double>(value, 0)) < 1e-8) return &ev;
    return nullptr;
}
}

TEST_CASE("eigenvalues of small exact matrices") {
    const EigenSet s = eigenvalues(Matrix{{r(1, 2), r(-1, 2)}, {r(-1, 2), r(1, 2)}});
    REQUIRE(s.roots.size() == 2);
    CHECK(find_root(s, 0.0));
    CHECK(find_root(s, 1.0));
    CHECK(find_root(s, 1.0)->exact.has_value());

    const EigenSet t = eigenvalues(Matrix::identity(4) * r(2));
    REQUIRE(t.roots.size() == 1);
    CHECK(t.roots[0].multiplicity == 4);
    CHECK(*t.roots[0].exact == r(2));

    const EigenSet u = eigenvalues(Matrix{{r(3, 2), r(-1, 2)}, {r(1, 2), r(-3, 2)}});
    REQUIRE(u.roots.size() == 2);
    const double s2 = std::sqrt(2.0);
    CHECK(find_root(u, s2));
    CHECK(find_root(u, -s2));
    CHECK(u.spectral_radius() == doctest::Approx(s2).epsilon(1e-12));

    int mult = 0;
    for (const auto& ev : eigenvalues(Matrix::identity(5)).roots) mult += ev.multiplicity;
    CHECK(mult == 5);
    CHECK_THROWS_AS(eigenvalues(Matrix(9, 9)), std::invalid_argument);
}

TEST_CASE("complex roots via Aberth") {
    // x^4 + 1: all roots on the unit circle, none real
    const EigenSet s = poly_roots(Polynomial({r(1), r(0), r(0), r(0), r(1)}));
    REQUIRE(s.roots.size() == 4);
    for (const auto& ev : s.roots) {
        CHECK(std::abs(std::abs(ev.value) - 1.0) < 1e-12);
        CHECK(std::abs(ev.value.imag()) > 0.5);
    }
}

TEST_CASE("refine_real_root certifies enclosures") {
    // x^2 - x/2 - 1: positive root (1 + sqrt 17)/4
    const Polynomial quad({r(-1), r(-1, 2), r(1)});
    const double seed = (1.0 + std::sqrt(17.0)) / 4.0;
    const auto enc = refine_real_root(quad, seed, 1e-13);
    REQUIRE(enc.has_value());
    CHECK(quad.evaluate(enc->lo).sign() != quad.evaluate(enc->hi).sign());
    CHECK((enc->hi - enc->lo) < Rational::from_double(1e-12));
    CHECK(enc->mid() == doctest::Approx(seed).epsilon(1e-12));
}

TEST_CASE("jsr bounds") {
    const LinearRep t4 = regseq::linrep::power_lift(regseq::linrep::rep_t_eta(), 2);
    const auto [lo, hi] = jsr_bounds(t4.digit_mats(), 1);
    CHECK(lo == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(hi == doctest::Approx(1.0).epsilon(1e-12));

    const auto [ilo, ihi] = jsr_bounds({Matrix::identity(3)}, 2);
    CHECK(ilo == doctest::Approx(1.0));
    CHECK(ihi == doctest::Approx(1.0));

    const auto [elo, ehi] = jsr_bounds(regseq::linrep::rep_eta().digit_mats(), 1);
    CHECK(ehi == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(elo <= ehi);

    // deeper products never worsen the bounds
    const auto mats = regseq::linrep::rep_eta().digit_mats();
    double prev_lo = 0.0, prev_hi = 1e300;
    for (unsigned depth = 1; depth <= 5; ++depth) {
        const auto [l, h] = jsr_bounds(mats, depth);
        CHECK(l >= prev_lo - 1e-12);
        CHECK(h <= prev_hi + 1e-12);
        prev_lo = l;
        prev_hi = h;
    }

    CHECK_THROWS_WITH_AS(jsr_bounds(std::vector<Matrix>(10, Matrix::identity(2)), 7),
                         doctest::Contains("budget"), std::invalid_argument);
}

TEST_CASE("dominance reports") {
    const LinearRep t4 = regseq::linrep::power_lift(regseq::linrep::rep_t_eta(), 2);
    const DominanceReport rep = dominance(t4.sum_matrix(), t4.digit_mats(), 1);
    CHECK(rep.rho == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(rep.unique_dominant);
    CHECK(rep.algebraic_mult == 2);
    CHECK(rep.geometric_mult == 2);
    CHECK(rep.jsr_upper == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.dumas_applicable);

    const LinearRep t2 = regseq::linrep::rep_t_eta();
    const DominanceReport bad = dominance(t2.sum_matrix(), t2.digit_mats(), 1);
    CHECK_FALSE(bad.unique_dominant);
    CHECK_FALSE(bad.dumas_applicable);

    const Matrix half = Matrix::identity(2) * r(1, 2);
    const DominanceReport id = dominance(Matrix::identity(2), {half, half}, 1);
    CHECK(id.rho == doctest::Approx(1.0));
    CHECK(id.algebraic_mult == 2);
    CHECK(id.geometric_mult == 2);
    CHECK(id.jsr_upper == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(id.dumas_applicable);

    CHECK_THROWS_AS(dominance(Matrix::identity(2), {half}, 1), std::invalid_argument);
}

TEST_CASE("dumas exponents") {
    const auto [te, trep] =
        dumas_exponent(regseq::linrep::power_lift(regseq::linrep::rep_t_eta(), 2), 1);
    CHECK(te == 0.5);  // exact: log2(2)/log2(4)
    CHECK(trep.dumas_applicable);

    const auto [se, srep] =
        dumas_exponent(regseq::linrep::power_lift(regseq::linrep::rep_eta_squared(), 2), 1);
    CHECK(std::abs(se - 0.357018636) <= 1e-9);
    CHECK(srep.dumas_applicable);

    const auto [oe, orep] = dumas_exponent(regseq::linrep::rep_one(2), 1);
    CHECK(oe == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eta^2 sum matrix: certified dominant root") {
    const Matrix s = regseq::linrep::rep_eta_squared().sum_matrix();
    const Polynomial p = regseq::exact::char_poly(s);
    // x^2 - x/2 - 1 divides the characteristic polynomial exactly
    const Polynomial quad({r(-1), r(-1, 2), r(1)});
    const auto [q, rem] = p.divide(quad);
    CHECK(rem.is_zero());

    const double alpha = (1.0 + std::sqrt(17.0)) / 4.0;
    CHECK(poly_roots(p).spectral_radius() == doctest::Approx(alpha).epsilon(1e-10));
}
