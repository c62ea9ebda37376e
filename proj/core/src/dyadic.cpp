#include "regseq/dyadic.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace regseq::exact {

namespace {

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

bool mpz_to_int128(const mpz_class& z, __int128* out) {
    if (mpz_sizeinbase(z.get_mpz_t(), 2) > 126) return false;
    mpz_class a = ::abs(z);
    mpz_class hi = a >> 64;
    mpz_class lo = a - (hi << 64);
    unsigned __int128 u =
        (static_cast<unsigned __int128>(hi.get_ui()) << 64) | lo.get_ui();
    __int128 v = static_cast<__int128>(u);
    *out = sgn(z) < 0 ? -v : v;
    return true;
}

} // namespace

DyadicScalar DyadicScalar::from_int128(__int128 num, std::uint32_t exp2) {
    DyadicScalar d;
    d.n_ = num;
    d.e_ = exp2;
    return d;
}

DyadicScalar DyadicScalar::from_mpz(mpz_class num, std::uint32_t exp2) {
    DyadicScalar d;
    d.e_ = exp2;
    __int128 small = 0;
    if (mpz_to_int128(num, &small)) {
        d.n_ = small;
    } else {
        d.big_ = std::make_unique<mpz_class>(std::move(num));
    }
    return d;
}

DyadicScalar::DyadicScalar(const DyadicScalar& o) : n_(o.n_), e_(o.e_) {
    if (o.big_) big_ = std::make_unique<mpz_class>(*o.big_);
}

DyadicScalar& DyadicScalar::operator=(const DyadicScalar& o) {
    if (this == &o) return *this;
    n_ = o.n_;
    e_ = o.e_;
    big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
    return *this;
}

bool DyadicScalar::is_zero() const {
    return big_ ? sgn(*big_) == 0 : n_ == 0;
}

int DyadicScalar::sign() const {
    if (big_) return sgn(*big_);
    return n_ < 0 ? -1 : (n_ > 0 ? 1 : 0);
}

__int128 DyadicScalar::small_num() const {
    if (big_) throw std::logic_error("DyadicScalar: promoted value has no small numerator");
    return n_;
}

void DyadicScalar::promote() {
    if (!big_) big_ = std::make_unique<mpz_class>(int128_to_mpz(n_));
}

mpz_class DyadicScalar::num_as_mpz() const {
    return big_ ? *big_ : int128_to_mpz(n_);
}

DyadicScalar DyadicScalar::operator-() const {
    if (big_) return from_mpz(mpz_class(-*big_), e_);
    if (n_ == (static_cast<__int128>(1) << 126) * -2) {  // -2^127 cannot negate in place
        return from_mpz(-int128_to_mpz(n_), e_);
    }
    return from_int128(-n_, e_);
}

DyadicScalar DyadicScalar::operator+(const DyadicScalar& o) const {
    const std::uint32_t e = std::max(e_, o.e_);
    const std::uint32_t sa = e - e_, sb = e - o.e_;
    if (!big_ && !o.big_ && sa < 126 && sb < 126) {
        __int128 a = n_, b = o.n_, r = 0;
        bool ovf = sa ? __builtin_mul_overflow(a, static_cast<__int128>(1) << sa, &a) : false;
        ovf |= sb ? __builtin_mul_overflow(b, static_cast<__int128>(1) << sb, &b) : false;
        if (!ovf && !__builtin_add_overflow(a, b, &r)) return from_int128(r, e);
    }
    mpz_class a = num_as_mpz(), b = o.num_as_mpz();
    mpz_mul_2exp(a.get_mpz_t(), a.get_mpz_t(), sa);
    mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), sb);
    return from_mpz(a + b, e);
}

DyadicScalar DyadicScalar::operator*(const DyadicScalar& o) const {
    const std::uint64_t e = static_cast<std::uint64_t>(e_) + o.e_;
    if (e > 0xFFFFFFFFull) throw std::overflow_error("DyadicScalar: exponent overflow");
    if (!big_ && !o.big_) {
        __int128 r = 0;
        if (!__builtin_mul_overflow(n_, o.n_, &r))
            return from_int128(r, static_cast<std::uint32_t>(e));
    }
    return from_mpz(num_as_mpz() * o.num_as_mpz(), static_cast<std::uint32_t>(e));
}

bool DyadicScalar::operator==(const DyadicScalar& o) const {
    return (*this - o).is_zero();
}

bool DyadicScalar::operator<(const DyadicScalar& o) const {
    return (*this - o).sign() < 0;
}

DyadicScalar DyadicScalar::normalized() const {
    if (is_zero()) return DyadicScalar(0, 0);
    if (!big_) {
        __int128 n = n_;
        std::uint32_t e = e_;
        while (e > 0 && (n & 1) == 0) { n >>= 1; --e; }
        return from_int128(n, e);
    }
    mpz_class n = *big_;
    std::uint32_t e = e_;
    const mp_bitcnt_t twos = mpz_scan1(n.get_mpz_t(), 0);
    const mp_bitcnt_t drop = std::min<mp_bitcnt_t>(twos, e);
    mpz_fdiv_q_2exp(n.get_mpz_t(), n.get_mpz_t(), drop);
    e -= static_cast<std::uint32_t>(drop);
    return from_mpz(std::move(n), e);
}

Rational DyadicScalar::to_rational() const {
    mpz_class den(1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), e_);
    return Rational(num_as_mpz(), den);
}

std::ostream& operator<<(std::ostream& os, const DyadicScalar& d) {
    return os << d.to_string();
}

} // namespace regseq::exact
