#include "regseq/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace regseq::exact {

Polynomial::Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Polynomial::coeff(std::size_t i) const {
    static const Rational kZero;
    return i < c_.size() ? c_[i] : kZero;
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::complex<long double> Polynomial::evaluate(std::complex<long double> x) const {
    std::complex<long double> acc(0.0L, 0.0L);
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * x + static_cast<long double>(c_[i].to_double());
    return acc;
}

Matrix Polynomial::evaluate(const Matrix& m) const {
    if (!m.is_square()) throw std::invalid_argument("Polynomial::evaluate: non-square matrix");
    Matrix acc(m.rows(), m.cols());
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * m;
        for (std::size_t d = 0; d < m.rows(); ++d) acc.at(d, d) += c_[i];
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Rational& s) const {
    std::vector<Rational> r(c_);
    for (auto& c : r) c *= s;
    return Polynomial(std::move(r));
}

std::pair<Polynomial, Polynomial> Polynomial::divide(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
    Polynomial rem = *this;
    std::vector<Rational> q;
    const int dd = divisor.degree();
    if (rem.degree() >= dd) q.assign(rem.degree() - dd + 1, Rational());
    while (!rem.is_zero() && rem.degree() >= dd) {
        const int shift = rem.degree() - dd;
        const Rational f = rem.c_.back() / divisor.c_.back();
        q[shift] = f;
        for (int i = 0; i <= dd; ++i)
            rem.c_[shift + i] -= f * divisor.c_[i];
        while (!rem.c_.empty() && rem.c_.back().is_zero()) rem.c_.pop_back();
    }
    return {Polynomial(std::move(q)), rem};
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return *this * c_.back().reciprocal();
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << (c_[i].sign() > 0 ? " + " : " - ");
        else if (c_[i].sign() < 0) os << "-";
        first = false;
        const Rational a = abs(c_[i]);
        if (i == 0 || !(a == Rational(1))) os << a.to_string();
        if (i > 0) {
            if (!(a == Rational(1))) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.divide(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

std::vector<std::pair<Polynomial, int>> square_free_decomposition(const Polynomial& p) {
    std::vector<std::pair<Polynomial, int>> out;
    if (p.degree() <= 0) return out;
    // Yun's algorithm over a field of characteristic zero.
    Polynomial f = p.monic();
    Polynomial fp = f.derivative();
    Polynomial a = poly_gcd(f, fp);
    Polynomial b = f.divide(a).first;
    Polynomial c = fp.divide(a).first;
    Polynomial d = c - b.derivative();
    for (int mult = 1; b.degree() > 0; ++mult) {
        Polynomial g = poly_gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, mult);
        b = b.divide(g).first;
        c = d.divide(g).first;
        d = c - b.derivative();
    }
    return out;
}

Polynomial char_poly(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("char_poly: non-square matrix");
    const std::size_t d = m.rows();
    if (d == 0) return Polynomial::one();
    if (d > 16) throw std::invalid_argument("char_poly: dimension > 16 unsupported");

    // Faddeev-LeVerrier: M_1 = A, c_{d-1} = -tr M_1,
    // M_{k+1} = A (M_k + c_{d-k} I), c_{d-k-1} = -tr(M_{k+1}) / (k+1).
    std::vector<Rational> c(d + 1);
    c[d] = Rational(1);
    Matrix mk = m;
    c[d - 1] = -mk.trace();
    for (std::size_t k = 1; k < d; ++k) {
        Matrix shifted = mk;
        for (std::size_t i = 0; i < d; ++i) shifted.at(i, i) += c[d - k];
        mk = m * shifted;
        c[d - k - 1] = -(mk.trace() / Rational(static_cast<long>(k + 1)));
    }
    return Polynomial(std::move(c));
}

} // namespace regseq::exact
