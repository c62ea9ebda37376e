#pragma once

/**
 * @file dyadic.hpp
 * @brief Exact dyadic rational p/2^e with a fast 128-bit path.
 *
 * The numerator lives in a signed 128-bit integer; every operation is
 * overflow-checked and promotes the value to an arbitrary-precision
 * numerator instead of wrapping. Conversion to Rational is lossless.
 * Exponents are kept as-is during accumulation; normalize() restores the
 * minimal exponent on demand.
 */

#include "regseq/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

namespace regseq::exact {

class DyadicScalar {
public:
    DyadicScalar() = default;
    DyadicScalar(std::int64_t num) : n_(num) {}
    DyadicScalar(std::int64_t num, std::uint32_t exp2) : n_(num), e_(exp2) {}
    static DyadicScalar from_int128(__int128 num, std::uint32_t exp2);

    DyadicScalar(const DyadicScalar& o);
    DyadicScalar& operator=(const DyadicScalar& o);
    DyadicScalar(DyadicScalar&&) noexcept = default;
    DyadicScalar& operator=(DyadicScalar&&) noexcept = default;
    ~DyadicScalar() = default;

    bool is_promoted() const { return static_cast<bool>(big_); }
    bool is_zero() const;
    int sign() const;
    std::uint32_t exp2() const { return e_; }
    /// Numerator of the 128-bit path. Pre: !is_promoted().
    __int128 small_num() const;

    DyadicScalar operator-() const;
    DyadicScalar operator+(const DyadicScalar& o) const;
    DyadicScalar operator-(const DyadicScalar& o) const { return *this + (-o); }
    DyadicScalar operator*(const DyadicScalar& o) const;
    DyadicScalar& operator+=(const DyadicScalar& o) { return *this = *this + o; }
    DyadicScalar& operator*=(const DyadicScalar& o) { return *this = *this * o; }

    bool operator==(const DyadicScalar& o) const;
    bool operator<(const DyadicScalar& o) const;

    /// Minimal exponent form: numerator odd or zero (zero gets exponent 0).
    DyadicScalar normalized() const;

    Rational to_rational() const;
    double to_double() const { return to_rational().to_double(); }
    std::string to_string() const { return to_rational().to_string(); }

private:
    __int128 n_ = 0;
    std::uint32_t e_ = 0;
    std::unique_ptr<mpz_class> big_;  // engaged => numerator is *big_, n_ unused

    void promote();
    mpz_class num_as_mpz() const;
    static DyadicScalar from_mpz(mpz_class num, std::uint32_t exp2);
};

inline DyadicScalar abs(const DyadicScalar& d) { return d.sign() < 0 ? -d : d; }

std::ostream& operator<<(std::ostream& os, const DyadicScalar& d);

} // namespace regseq::exact
