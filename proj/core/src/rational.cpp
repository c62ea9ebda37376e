#include "regseq/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace regseq::exact {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpq_class& q) : v_(q) {
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    mpq_t q;
    mpq_init(q);
    const std::string buf(s);
    if (mpq_set_str(q, buf.c_str(), 10) != 0) {
        mpq_clear(q);
        throw std::invalid_argument("Rational: cannot parse '" + buf + "'");
    }
    if (mpz_sgn(mpq_denref(q)) == 0) {
        mpq_clear(q);
        throw std::domain_error("Rational: zero denominator in '" + buf + "'");
    }
    mpq_canonicalize(q);
    Rational r{mpq_class(q)};
    mpq_clear(q);
    return r;
}

Rational Rational::from_double(double d) {
    if (!std::isfinite(d)) throw std::domain_error("Rational: non-finite double");
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), d);
    return Rational(q);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    return Rational(den(), num());
}

std::string Rational::to_string() const {
    std::string s = num().get_str();
    if (!is_integer()) {
        s += '/';
        s += den().get_str();
    }
    return s;
}

double log2_rational(const Rational& r) {
    if (r.sign() <= 0) throw std::domain_error("log2_rational: non-positive argument");
    signed long en = 0, ed = 0;
    const double mn = mpz_get_d_2exp(&en, r.num().get_mpz_t());
    const double md = mpz_get_d_2exp(&ed, r.den().get_mpz_t());
    return std::log2(mn) - std::log2(md) + static_cast<double>(en - ed);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

} // namespace regseq::exact
