#pragma once

// Internal fixed-size dyadic 2x2 kernel used by the enumeration pipelines:
// integer numerators over a shared power-of-two denominator. Products of
// the eta digit matrices at depth j have exponent exactly j and numerators
// bounded by 2^j, so int64 holds every value up to depth 62; the call sites
// cap the depth at 30 and assert the bound in debug builds.

#include <cassert>
#include <cstdint>

namespace regseq::detail {

struct Mat2 {
    std::int64_t a, b, c, d;  // [[a, b], [c, d]] / 2^exp2
    unsigned exp2;
};

// eta digit matrices with numerators over denominator 2.
inline constexpr Mat2 kEtaA0{2, -1, 0, -1, 1};
inline constexpr Mat2 kEtaA1{-1, 0, -1, 2, 1};

inline Mat2 mul(const Mat2& x, const Mat2& y) {
    Mat2 r{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
           x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d, x.exp2 + y.exp2};
    assert(r.exp2 <= 62);
    return r;
}

inline Mat2 identity() { return Mat2{1, 0, 0, 1, 0}; }

// Product A_{i_{len-1}} ... A_{i_0} over the bits of word (bit len-1 is the
// most significant digit and the leftmost factor).
inline Mat2 word_product(std::uint64_t word, unsigned len) {
    Mat2 m = identity();
    for (unsigned i = len; i-- > 0;) {
        const Mat2& f = (word >> i) & 1 ? kEtaA1 : kEtaA0;
        m = mul(m, f);
    }
    return m;
}

struct Sign2 {
    int d11, d12, d21, d22;
};

inline int sgn64(std::int64_t v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

inline std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

// Row rule: row i keeps the sign of its larger-magnitude entry, second
// entry on ties. Pre: no zero row.
inline Sign2 sign_rows(const Mat2& m) {
    assert(abs64(m.a) + abs64(m.b) > 0 && abs64(m.c) + abs64(m.d) > 0);
    Sign2 s{0, 0, 0, 0};
    if (abs64(m.a) > abs64(m.b)) s.d11 = sgn64(m.a); else s.d12 = sgn64(m.b);
    if (abs64(m.c) > abs64(m.d)) s.d21 = sgn64(m.c); else s.d22 = sgn64(m.d);
    return s;
}

// Column rule: column j keeps the sign of its larger-magnitude entry,
// second row on ties. One nonzero per column, so row-vector evaluation
// maps +/-1 pairs to +/-1 pairs. This is the variant that reproduces the
// reference exponent table. Pre: no zero column.
inline Sign2 sign_cols(const Mat2& m) {
    assert(abs64(m.a) + abs64(m.c) > 0 && abs64(m.b) + abs64(m.d) > 0);
    Sign2 s{0, 0, 0, 0};
    if (abs64(m.a) > abs64(m.c)) s.d11 = sgn64(m.a); else s.d21 = sgn64(m.c);
    if (abs64(m.b) > abs64(m.d)) s.d12 = sgn64(m.b); else s.d22 = sgn64(m.d);
    return s;
}

} // namespace regseq::detail
