#include "regseq/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace regseq::spectral {

using std::complex;

double EigenSet::spectral_radius() const {
    double r = 0.0;
    for (const auto& ev : roots) r = std::max(r, std::abs(ev.value));
    return r;
}

namespace {

// p(2^t y) / 2^(t*deg): exact rescaling keeping the polynomial monic.
Polynomial rescale(const Polynomial& p, int t) {
    std::vector<Rational> c(p.coeffs());
    const std::size_t d = c.size() - 1;
    for (std::size_t i = 0; i < d; ++i) {
        mpz_class den(1);
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(),
                     static_cast<mp_bitcnt_t>(t) * (d - i));
        c[i] = c[i] / Rational(den);
    }
    return Polynomial(std::move(c));
}

std::vector<complex<long double>> aberth(const Polynomial& q, double* max_residual) {
    const int d = q.degree();
    std::vector<long double> c(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i)
        c[static_cast<std::size_t>(i)] =
            static_cast<long double>(q.coeff(static_cast<std::size_t>(i)).to_double());

    const auto eval = [&](complex<long double> z, complex<long double>* deriv) {
        complex<long double> v(0, 0), dv(0, 0);
        for (int i = d; i >= 0; --i) {
            dv = dv * z + v;
            v = v * z + c[static_cast<std::size_t>(i)];
        }
        *deriv = dv;
        return v;
    };

    std::vector<complex<long double>> z(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        const long double ang = 2.0L * 3.14159265358979323846L * (i + 0.35L) / d;
        z[static_cast<std::size_t>(i)] = complex<long double>(0.7L * std::cos(ang),
                                                              0.7L * std::sin(ang));
    }

    for (int iter = 0; iter < 400; ++iter) {
        long double worst = 0.0L;
        for (int i = 0; i < d; ++i) {
            complex<long double> dv;
            const complex<long double> v = eval(z[i], &dv);
            if (std::abs(v) == 0.0L) continue;
            complex<long double> w = dv == complex<long double>(0, 0)
                                         ? complex<long double>(1e-20L, 0)
                                         : v / dv;
            complex<long double> s(0, 0);
            for (int j = 0; j < d; ++j)
                if (j != i) s += 1.0L / (z[i] - z[j]);
            const complex<long double> corr = w / (1.0L - w * s);
            z[i] -= corr;
            worst = std::max(worst, std::abs(corr) / std::max(1e-30L, std::abs(z[i])));
        }
        if (worst < 1e-19L) break;
    }

    long double res = 0.0L;
    for (int i = 0; i < d; ++i) {
        complex<long double> dv;
        res = std::max(res, std::abs(eval(z[i], &dv)));
    }
    *max_residual = static_cast<double>(res);
    if (res > 1e-9) {
        std::ostringstream os;
        os << "root finder did not converge: residual " << static_cast<double>(res)
           << " on degree " << d << " factor";
        throw RootFindingError(os.str());
    }
    return z;
}

// Roots of one square-free factor (exact where the degree permits).
void factor_roots(const Polynomial& f, int mult, EigenSet* out) {
    const int d = f.degree();
    if (d <= 0) return;
    if (d == 1) {
        // c0 + c1 x = 0
        const Rational r = -(f.coeff(0) / f.coeff(1));
        out->roots.push_back({complex<double>(r.to_double(), 0.0), mult, r});
        return;
    }
    if (d == 2) {
        const Rational a = f.coeff(2), b = f.coeff(1), c = f.coeff(0);
        const Rational disc = b * b - a * c * Rational(4);
        if (disc.sign() >= 0) {
            const double sd = std::sqrt(disc.to_double());
            const double ad = a.to_double(), bd = b.to_double();
            if (disc.is_zero()) {
                const Rational r = -(b / (a * Rational(2)));
                out->roots.push_back({complex<double>(r.to_double(), 0.0), 2 * mult, r});
            } else if (mpz_perfect_square_p(disc.num().get_mpz_t()) &&
                       mpz_perfect_square_p(disc.den().get_mpz_t())) {
                mpz_class sn, sdm;
                mpz_sqrt(sn.get_mpz_t(), disc.num().get_mpz_t());
                mpz_sqrt(sdm.get_mpz_t(), disc.den().get_mpz_t());
                const Rational root_disc(sn, sdm);
                const Rational two_a = a * Rational(2);
                for (const Rational& r : {(-b - root_disc) / two_a, (-b + root_disc) / two_a})
                    out->roots.push_back({complex<double>(r.to_double(), 0.0), mult, r});
            } else {
                out->roots.push_back({complex<double>((-bd - sd) / (2 * ad), 0.0), mult, {}});
                out->roots.push_back({complex<double>((-bd + sd) / (2 * ad), 0.0), mult, {}});
            }
        } else {
            const double sd = std::sqrt(-disc.to_double());
            const double ad = a.to_double(), bd = b.to_double();
            out->roots.push_back(
                {complex<double>(-bd / (2 * ad), -sd / (2 * ad)), mult, {}});
            out->roots.push_back(
                {complex<double>(-bd / (2 * ad), sd / (2 * ad)), mult, {}});
        }
        return;
    }

    const Polynomial monic = f.monic();
    double worst = 0.0;
    for (int i = 0; i < d; ++i) {
        const Rational& c = monic.coeff(static_cast<std::size_t>(i));
        if (!c.is_zero()) worst = std::max(worst, exact::log2_rational(abs(c)) / (d - i));
    }
    const int t = std::max(0, static_cast<int>(std::ceil(worst)) + 1);
    const Polynomial scaled = rescale(monic, t);
    double residual = 0.0;
    const auto zs = aberth(scaled, &residual);
    out->max_residual = std::max(out->max_residual, residual);
    const double factor = std::ldexp(1.0, t);
    for (const auto& z : zs)
        out->roots.push_back({complex<double>(static_cast<double>(z.real()) * factor,
                                              static_cast<double>(z.imag()) * factor),
                              mult,
                              {}});
}

} // namespace

EigenSet poly_roots(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("poly_roots: zero polynomial");
    EigenSet out;
    for (const auto& [factor, mult] : square_free_decomposition(p))
        factor_roots(factor, mult, &out);

    // Merge near-coincident numeric roots (distinct square-free factors never
    // share roots; this only collapses Aberth output inside one factor).
    std::vector<EigenValue> merged;
    for (const auto& ev : out.roots) {
        bool absorbed = false;
        for (auto& m : merged) {
            const double scale = std::max({1.0, std::abs(m.value), std::abs(ev.value)});
            if (!m.exact && !ev.exact && std::abs(m.value - ev.value) <= out.tolerance * scale) {
                m.multiplicity += ev.multiplicity;
                absorbed = true;
                break;
            }
        }
        if (!absorbed) merged.push_back(ev);
    }
    out.roots = std::move(merged);
    return out;
}

EigenSet eigenvalues(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("eigenvalues: non-square matrix");
    if (m.rows() > 8) throw std::invalid_argument("eigenvalues: dimension > 8 unsupported");
    return poly_roots(char_poly(m));
}

std::optional<RealRootEnclosure> refine_real_root(const Polynomial& p, double seed,
                                                  double rel_width) {
    if (seed == 0.0 || !std::isfinite(seed)) return std::nullopt;
    const auto sign_at = [&](const Rational& x) { return p.evaluate(x).sign(); };

    double delta = 4e-12;
    Rational lo, hi;
    int slo = 0, shi = 0;
    for (; delta < 1e-3; delta *= 8) {
        lo = Rational::from_double(seed * (1 - delta));
        hi = Rational::from_double(seed * (1 + delta));
        if (lo > hi) std::swap(lo, hi);
        slo = sign_at(lo);
        shi = sign_at(hi);
        if (slo == 0) return RealRootEnclosure{lo, lo};
        if (shi == 0) return RealRootEnclosure{hi, hi};
        if (slo != shi) break;
    }
    if (slo == shi) return std::nullopt;

    const Rational half(1, 2);
    for (int i = 0; i < 200; ++i) {
        const Rational width = hi - lo;
        if ((abs(lo) * Rational::from_double(rel_width)) > width) break;
        const Rational mid = (lo + hi) * half;
        const int sm = sign_at(mid);
        if (sm == 0) return RealRootEnclosure{mid, mid};
        if (sm == slo) lo = mid; else hi = mid;
    }
    return RealRootEnclosure{lo, hi};
}

std::pair<double, double> jsr_bounds(const std::vector<Matrix>& mats, unsigned depth) {
    if (mats.empty()) throw std::invalid_argument("jsr_bounds: empty matrix family");
    const std::size_t dim = mats[0].rows();
    for (const auto& m : mats)
        if (!m.is_square() || m.rows() != dim)
            throw std::invalid_argument("jsr_bounds: matrices must be square of equal size");
    if (depth == 0) throw std::invalid_argument("jsr_bounds: depth must be >= 1");
    double budget = 1.0;
    for (unsigned l = 0; l < depth; ++l) budget *= static_cast<double>(mats.size());
    if (budget > 1e6) {
        std::ostringstream os;
        os << "jsr_bounds: " << mats.size() << "^" << depth << " = " << budget
           << " products exceed the 10^6 budget";
        throw std::invalid_argument(os.str());
    }

    // Depth-first over products so only O(depth) matrices are live.
    std::vector<Rational> max_norm(depth + 1);
    std::vector<double> max_rho(depth + 1, 0.0);
    std::vector<Matrix> stack;
    stack.push_back(Matrix::identity(dim));
    const auto walk = [&](auto&& self, unsigned level) -> void {
        if (level == depth) return;
        for (const auto& a : mats) {
            Matrix prod = stack.back() * a;
            const Rational norm = prod.induced_one_norm();
            if (norm > max_norm[level + 1]) max_norm[level + 1] = norm;
            max_rho[level + 1] =
                std::max(max_rho[level + 1], eigenvalues(prod).spectral_radius());
            stack.push_back(std::move(prod));
            self(self, level + 1);
            stack.pop_back();
        }
    };
    walk(walk, 0);

    double upper = std::numeric_limits<double>::infinity();
    double lower = 0.0;
    for (unsigned l = 1; l <= depth; ++l) {
        if (max_norm[l].sign() > 0)
            upper = std::min(upper, std::exp2(exact::log2_rational(max_norm[l]) / l));
        else
            upper = 0.0;  // every length-l product is zero
        lower = std::max(lower, std::pow(max_rho[l], 1.0 / l));
    }
    return {lower, upper};
}

DominanceReport dominance(const Matrix& m, const std::vector<Matrix>& digit_mats,
                          unsigned jsr_depth) {
    if (digit_mats.empty())
        throw std::invalid_argument("dominance: empty digit matrix family");
    Matrix sum(m.rows(), m.cols());
    for (const auto& a : digit_mats) sum = sum + a;
    if (!(sum == m))
        throw std::invalid_argument("dominance: matrix is not the sum of the digit matrices");

    DominanceReport rep;
    rep.characteristic = char_poly(m);
    const EigenSet eig = poly_roots(rep.characteristic);
    rep.rho = eig.spectral_radius();

    const double tol = 1e-8 * std::max(1.0, rep.rho);
    const EigenValue* dom = nullptr;
    int dominant_count = 0;
    for (const auto& ev : eig.roots) {
        if (std::abs(ev.value) >= rep.rho - tol) {
            ++dominant_count;
            dom = &ev;
        } else {
            rep.second_modulus = std::max(rep.second_modulus, std::abs(ev.value));
        }
    }
    rep.unique_dominant = dominant_count == 1 && dom && std::abs(dom->value.imag()) <= tol &&
                          dom->value.real() > 0;
    if (dom) rep.algebraic_mult = dom->multiplicity;

    if (rep.unique_dominant) {
        if (dom->exact) {
            // Exact rank of m - rho*I over the rationals.
            Matrix shifted = m;
            for (std::size_t i = 0; i < m.rows(); ++i) shifted.at(i, i) -= *dom->exact;
            rep.geometric_mult = static_cast<int>(m.rows() - exact::rank(shifted));
        } else {
            // Pivoted double elimination with a 1e-9 relative threshold.
            const std::size_t d = m.rows();
            std::vector<std::vector<double>> w(d, std::vector<double>(d));
            double scale = 0.0;
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) {
                    w[i][j] = m.at(i, j).to_double() - (i == j ? dom->value.real() : 0.0);
                    scale = std::max(scale, std::abs(w[i][j]));
                }
            const double thresh = 1e-9 * std::max(1.0, scale);
            std::size_t rank = 0;
            for (std::size_t col = 0, row = 0; col < d && row < d; ++col) {
                std::size_t piv = row;
                for (std::size_t i = row + 1; i < d; ++i)
                    if (std::abs(w[i][col]) > std::abs(w[piv][col])) piv = i;
                if (std::abs(w[piv][col]) <= thresh) continue;
                std::swap(w[piv], w[row]);
                for (std::size_t i = row + 1; i < d; ++i) {
                    const double f = w[i][col] / w[row][col];
                    for (std::size_t j = col; j < d; ++j) w[i][j] -= f * w[row][j];
                }
                ++row;
                ++rank;
            }
            rep.geometric_mult = static_cast<int>(d - rank);
        }
    }

    const auto [lo, hi] = jsr_bounds(digit_mats, jsr_depth);
    rep.jsr_lower = lo;
    rep.jsr_upper = hi;
    rep.dumas_applicable = rep.unique_dominant &&
                           rep.algebraic_mult == rep.geometric_mult &&
                           rep.rho > rep.jsr_upper;
    return rep;
}

std::pair<double, DominanceReport> dumas_exponent(const linrep::LinearRep& rep,
                                                  unsigned jsr_depth) {
    DominanceReport report = dominance(rep.sum_matrix(), rep.digit_mats(), jsr_depth);
    double log2_rho = 0.0;
    bool have = false;
    for (const auto& ev : poly_roots(report.characteristic).roots) {
        if (ev.exact && std::abs(std::abs(ev.value) - report.rho) <= 1e-12 * report.rho &&
            ev.exact->sign() > 0) {
            log2_rho = exact::log2_rational(*ev.exact);
            have = true;
            break;
        }
    }
    if (!have) {
        if (const auto enc = refine_real_root(report.characteristic, report.rho))
            log2_rho = exact::log2_rational((enc->lo + enc->hi) * Rational(1, 2));
        else
            log2_rho = std::log2(report.rho);
    }
    const double exponent = log2_rho / std::log2(static_cast<double>(rep.radix()));
    return {exponent, report};
}

} // namespace regseq::spectral
