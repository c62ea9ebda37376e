#include "regseq/sequences.hpp"

#include "regseq/sign_rep.hpp"

#include <bit>
#include <cassert>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace regseq::seq {

int thue_morse(std::uint64_t n) {
    return std::popcount(n) % 2 == 0 ? 1 : -1;
}

int paperfolding(std::uint64_t n, int value_at_zero) {
    if (n == 0) return value_at_zero;
    n >>= std::countr_zero(n);
    return (n & 3) == 1 ? 1 : -1;
}

int rudin_shapiro(std::uint64_t n) {
    return std::popcount(n & (n >> 1)) % 2 == 0 ? 1 : -1;
}

SequenceId SequenceId::sign(unsigned n) {
    if (n < 1 || n > 25) throw std::invalid_argument("SequenceId::sign: level out of [1,25]");
    return {SequenceTag::sign, n};
}

int automatic_value(const SequenceId& id, std::uint64_t n) {
    switch (id.tag) {
        case SequenceTag::thue_morse: return thue_morse(n);
        case SequenceTag::paperfolding: return paperfolding(n);
        case SequenceTag::rudin_shapiro: return rudin_shapiro(n);
        default:
            throw std::invalid_argument("automatic_value: sequence is not +/-1 automatic");
    }
}

namespace {

const Rational kOne(1);
const Rational kMinusThird(-1, 3);

} // namespace

Rational EtaCache::eta(std::uint64_t m) const {
    if (m == 0) return kOne;
    if (m == 1) return kMinusThird;
    {
        std::shared_lock lk(mu_);
        auto it = map_.find(m);
        if (it != map_.end()) return it->second;
    }
    // eta(2j) = eta(j); eta(2j+1) = -(eta(j) + eta(j+1))/2.
    Rational v;
    if (m % 2 == 0) {
        v = eta(m / 2);
    } else {
        const std::uint64_t j = m / 2;
        v = -(eta(j) + eta(j + 1)) * Rational(1, 2);
    }
    std::unique_lock lk(mu_);
    map_.emplace(m, v);
    return v;
}

std::size_t EtaCache::size() const {
    std::shared_lock lk(mu_);
    return map_.size();
}

void EtaCache::save_snapshot(const std::filesystem::path& p) const {
    std::ofstream os(p);
    if (!os) throw std::runtime_error("EtaCache: cannot open " + p.string() + " for writing");
    std::shared_lock lk(mu_);
    os << "etacache 1\n" << map_.size() << "\n";
    for (const auto& [m, v] : map_) os << m << " " << v.to_string() << "\n";
    if (!os) throw std::runtime_error("EtaCache: write failed for " + p.string());
}

void EtaCache::load_snapshot(const std::filesystem::path& p) {
    std::ifstream is(p);
    if (!is) throw std::runtime_error("EtaCache: cannot open " + p.string());
    std::string magic;
    int version = 0;
    std::size_t count = 0;
    is >> magic >> version >> count;
    if (magic != "etacache" || version != 1)
        throw std::runtime_error("EtaCache: unrecognized snapshot header in " + p.string());
    std::unordered_map<std::uint64_t, Rational> loaded;
    loaded.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::uint64_t m = 0;
        std::string val;
        if (!(is >> m >> val))
            throw std::runtime_error("EtaCache: truncated snapshot " + p.string());
        loaded.emplace(m, Rational::from_string(val));
    }
    // Spot-check: every entry whose recursion inputs are available must
    // reproduce from the recursion.
    const auto lookup = [&](std::uint64_t m, Rational* out) {
        if (m == 0) { *out = kOne; return true; }
        if (m == 1) { *out = kMinusThird; return true; }
        auto it = loaded.find(m);
        if (it == loaded.end()) return false;
        *out = it->second;
        return true;
    };
    for (const auto& [m, v] : loaded) {
        Rational expect;
        bool have = false;
        if (m == 0) { expect = kOne; have = true; }
        else if (m == 1) { expect = kMinusThird; have = true; }
        else if (m % 2 == 0) {
            have = lookup(m / 2, &expect);
        } else {
            Rational a, b;
            if (lookup(m / 2, &a) && lookup(m / 2 + 1, &b)) {
                expect = -(a + b) * Rational(1, 2);
                have = true;
            }
        }
        if (have && !(expect == v))
            throw std::runtime_error("EtaCache: snapshot entry for m = " + std::to_string(m) +
                                     " fails the recursion spot-check");
    }
    std::unique_lock lk(mu_);
    map_ = std::move(loaded);
}

Rational eta(std::uint64_t m) {
    static EtaCache cache;
    return cache.eta(m);
}

EtaTable::EtaTable(std::uint64_t x_max) : x_max_(x_max) {
    if (x_max > (std::uint64_t{1} << 24))
        throw std::invalid_argument("EtaTable: x_max exceeds the 2^24 scan budget");
    const std::uint64_t top = x_max + 1;  // need eta(x_max + 1) for pair sums
    exp2_ = top < 2 ? 1 : std::bit_width(top);
    q_.resize(top + 1);
    const std::int64_t scale = std::int64_t{3} << exp2_;
    q_[0] = static_cast<std::int32_t>(scale);
    if (top >= 1) q_[1] = static_cast<std::int32_t>(-(std::int64_t{1} << exp2_));
    for (std::uint64_t m = 2; m <= top; ++m) {
        if (m % 2 == 0) {
            q_[m] = q_[m / 2];
        } else {
            const std::int64_t s = std::int64_t{q_[m / 2]} + q_[m / 2 + 1];
            assert(s % 2 == 0);
            q_[m] = static_cast<std::int32_t>(-s / 2);
        }
    }
}

Rational EtaTable::value(std::uint64_t m) const {
    return Rational(mpz_class(q_[m]), mpz_class(std::int64_t{3} << exp2_));
}

double EtaTable::value_double(std::uint64_t m) const {
    return static_cast<double>(q_[m]) / std::ldexp(3.0, static_cast<int>(exp2_));
}

Rational abs_eta_partial_sum(std::uint64_t x) {
    const EtaTable t(x);
    std::int64_t acc = 0;
    for (std::uint64_t m = 0; m <= x; ++m)
        acc += std::abs(std::int64_t{t.scaled(m)});
    return Rational(mpz_class(acc), mpz_class(std::int64_t{3} << t.exp2()));
}

void twisted_sum_series(const std::function<int(std::uint64_t)>& twist,
                        std::uint64_t x_max,
                        const std::function<void(std::uint64_t, const Rational&)>& emit) {
    const EtaTable t(x_max);
    const mpz_class den(std::int64_t{3} << t.exp2());
    std::int64_t acc = 0;
    for (std::uint64_t x = 0; x <= x_max; ++x) {
        const int f = twist(x);
        if (f != 1 && f != -1)
            throw std::invalid_argument("twisted_sum_series: twist must be +/-1-valued");
        acc += f * std::int64_t{t.scaled(x)};
        emit(x, Rational(mpz_class(acc), den));
    }
}

namespace {

// eta twist: sum of eta(m)^2 at scale (3*2^e)^2, accumulated in 128 bits.
void eta_squared_series(std::uint64_t x_max,
                        const std::function<void(std::uint64_t, const Rational&)>& emit) {
    const EtaTable t(x_max);
    mpz_class den(std::int64_t{3} << t.exp2());
    den *= den;
    __int128 acc = 0;
    for (std::uint64_t x = 0; x <= x_max; ++x) {
        const __int128 q = t.scaled(x);
        acc += q * q;
        const std::uint64_t lo = static_cast<std::uint64_t>(acc & 0xFFFFFFFFFFFFFFFFull);
        const std::uint64_t hi = static_cast<std::uint64_t>(acc >> 64);
        mpz_class num(hi);
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), 64);
        num += lo;
        emit(x, Rational(num, den));
    }
}

} // namespace

void twisted_sum_series(const SequenceId& id, std::uint64_t x_max,
                        const std::function<void(std::uint64_t, const Rational&)>& emit) {
    switch (id.tag) {
        case SequenceTag::eta:
            eta_squared_series(x_max, emit);
            return;
        case SequenceTag::sign: {
            const bounds::SignSequence f(id.sign_level);
            twisted_sum_series([&](std::uint64_t m) { return f.value(m); }, x_max, emit);
            return;
        }
        default:
            twisted_sum_series([&](std::uint64_t m) { return automatic_value(id, m); },
                               x_max, emit);
    }
}

std::vector<std::pair<std::uint64_t, Rational>> twisted_sum_series(const SequenceId& id,
                                                                   std::uint64_t x_max) {
    std::vector<std::pair<std::uint64_t, Rational>> out;
    out.reserve(x_max + 1);
    twisted_sum_series(id, x_max,
                       [&](std::uint64_t x, const Rational& v) { out.emplace_back(x, v); });
    return out;
}

Rational max_abs_eta(std::uint64_t x) {
    const EtaTable t(x);
    std::int64_t best = 0;
    for (std::uint64_t m = 1; m <= x; ++m)
        best = std::max(best, std::abs(std::int64_t{t.scaled(m)}));
    return Rational(mpz_class(best), mpz_class(std::int64_t{3} << t.exp2()));
}

Rational max_abs_eta_partial_sum(std::uint64_t x) {
    const EtaTable t(x);
    std::int64_t acc = 0, best = 0;
    for (std::uint64_t m = 0; m <= x; ++m) {
        acc += t.scaled(m);
        best = std::max(best, std::abs(acc));
    }
    return Rational(mpz_class(best), mpz_class(std::int64_t{3} << t.exp2()));
}

std::pair<double, double> tm_eta_ratio_range(std::uint64_t x_lo, std::uint64_t x_hi) {
    if (x_lo < 1 || x_lo > x_hi)
        throw std::invalid_argument("tm_eta_ratio_range: need 1 <= x_lo <= x_hi");
    const EtaTable t(x_hi);
    const double scale = std::ldexp(3.0, static_cast<int>(t.exp2()));
    std::int64_t acc = 0;
    double lo = 0, hi = 0;
    bool first = true;
    for (std::uint64_t x = 0; x <= x_hi; ++x) {
        acc += thue_morse(x) * std::int64_t{t.scaled(x)};
        if (x < x_lo) continue;
        const double r = (static_cast<double>(acc) / scale) / std::sqrt(static_cast<double>(x));
        if (first) { lo = hi = r; first = false; }
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    return {lo, hi};
}

} // namespace regseq::seq
