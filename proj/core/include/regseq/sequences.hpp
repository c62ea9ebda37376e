#pragma once

/**
 * @file sequences.hpp
 * @brief Concrete sequences: Thue-Morse, its autocorrelation eta, and the
 *        paperfolding / Rudin-Shapiro twists, with exact partial-sum series.
 *
 * eta satisfies eta(0) = 1, eta(2m) = eta(m),
 * eta(2m+1) = -(eta(m) + eta(m+1))/2 (which forces eta(1) = -1/3). Two
 * engines are provided: a memoized top-down recursion for isolated indices
 * and a dense scaled-integer table for sequential scans.
 */

#include "regseq/rational.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

namespace regseq::seq {

using exact::Rational;

/// (-1)^(binary digit sum of n).
int thue_morse(std::uint64_t n);

/// Paperfolding: for n = 2^a * m with m odd, +1 iff m = 1 (mod 4).
/// The value at 0 is a convention; it defaults to +1.
int paperfolding(std::uint64_t n, int value_at_zero = 1);

/// (-1)^(number of overlapping "11" factors in the binary expansion).
int rudin_shapiro(std::uint64_t n);

enum class SequenceTag { thue_morse, eta, paperfolding, rudin_shapiro, sign };

struct SequenceId {
    SequenceTag tag = SequenceTag::thue_morse;
    unsigned sign_level = 0;  // for SequenceTag::sign, in [1, 25]

    static SequenceId thue_morse() { return {SequenceTag::thue_morse, 0}; }
    static SequenceId eta() { return {SequenceTag::eta, 0}; }
    static SequenceId paperfolding() { return {SequenceTag::paperfolding, 0}; }
    static SequenceId rudin_shapiro() { return {SequenceTag::rudin_shapiro, 0}; }
    static SequenceId sign(unsigned n);
};

/// Value of a +/-1 automatic sequence. Pre: tag is one of thue_morse,
/// paperfolding, rudin_shapiro (eta is not +/-1-valued; sign twists are
/// served by bounds::SignSequence).
int automatic_value(const SequenceId& id, std::uint64_t n);

/// Memoized exact eta values with optional binary snapshots. Concurrent
/// readers are fine; writers take the exclusive lock.
class EtaCache {
public:
    Rational eta(std::uint64_t m) const;
    std::size_t size() const;

    /// Writes "m value\n" records; values as exact fraction strings.
    void save_snapshot(const std::filesystem::path& p) const;
    /// Replaces the cache. Spot-checks loaded entries against the recursion
    /// and throws std::runtime_error on any mismatch or parse failure.
    void load_snapshot(const std::filesystem::path& p);

private:
    mutable std::shared_mutex mu_;
    mutable std::unordered_map<std::uint64_t, Rational> map_;
};

/// eta via a process-wide cache.
Rational eta(std::uint64_t m);

/// Dense table of eta(0..x_max+1) as integers scaled by 3 * 2^exp2.
/// Pre: x_max <= 2^24.
class EtaTable {
public:
    explicit EtaTable(std::uint64_t x_max);

    std::uint64_t x_max() const { return x_max_; }
    unsigned exp2() const { return exp2_; }
    /// eta(m) * 3 * 2^exp2, exact. Valid for m <= x_max + 1.
    std::int32_t scaled(std::uint64_t m) const { return q_[m]; }
    Rational value(std::uint64_t m) const;
    double value_double(std::uint64_t m) const;

private:
    std::uint64_t x_max_;
    unsigned exp2_;
    std::vector<std::int32_t> q_;
};

/// Exact sum of |eta(m)| for m = 0..x. Pre: x <= 2^24.
Rational abs_eta_partial_sum(std::uint64_t x);

/// Running exact partial sums of f(m)*eta(m) for x = 0..x_max, where the
/// twist f is +/-1-valued (or eta itself). Streaming form visits each row;
/// the vector form materializes them (meant for small x_max).
void twisted_sum_series(const std::function<int(std::uint64_t)>& twist,
                        std::uint64_t x_max,
                        const std::function<void(std::uint64_t, const Rational&)>& emit);
void twisted_sum_series(const SequenceId& id, std::uint64_t x_max,
                        const std::function<void(std::uint64_t, const Rational&)>& emit);
std::vector<std::pair<std::uint64_t, Rational>> twisted_sum_series(const SequenceId& id,
                                                                   std::uint64_t x_max);

/// max over 1 <= m <= x of |eta(m)|, exact.
Rational max_abs_eta(std::uint64_t x);

/// max over 0 <= x' <= x of |sum_{m<=x'} eta(m)|, exact.
Rational max_abs_eta_partial_sum(std::uint64_t x);

/// min/max of x^(-1/2) * sum_{m<=x} t(m) eta(m) over x in [x_lo, x_hi].
std::pair<double, double> tm_eta_ratio_range(std::uint64_t x_lo, std::uint64_t x_hi);

/// Frozen bound on |sum_{m<=x} eta(m)|: the scan to 2^20 attains exactly 1,
/// kept with a factor-2 margin for the information-dimension tail bound.
inline constexpr double kEtaPartialSumBound = 2.0;

/// Frozen band for x^(-1/2) * sum_{m<=x} t(m) eta(m) on [2^6, 2^20]:
/// the first scan gives [0.9428, 1.0611], pinned with a small margin.
inline constexpr double kTmEtaBandLo = 0.94;
inline constexpr double kTmEtaBandHi = 1.07;

} // namespace regseq::seq
