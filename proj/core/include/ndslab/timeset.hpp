#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ndslab/rational.hpp"

namespace ndslab {

/// Membership over {1..H}; the finite-horizon rendering of a subset of N.
class TimeSet {
public:
    explicit TimeSet(long horizon);
    TimeSet(long horizon, const std::vector<long>& members);

    static TimeSet full(long horizon);
    static TimeSet range(long horizon, long from, long to);

    long horizon() const { return horizon_; }
    bool contains(long n) const { return n >= 1 && n <= horizon_ && bits_[static_cast<std::size_t>(n - 1)]; }
    void insert(long n);
    long count() const;
    bool empty() const { return count() == 0; }

    std::vector<long> members() const;

    TimeSet intersect(const TimeSet& other) const;
    TimeSet unite(const TimeSet& other) const;
    bool subset_of(const TimeSet& other) const;

    /// Run-length encoding: "3-64" or "2,4,6"; "-" for the empty set.
    std::string run_length_encoded() const;

    friend bool operator==(const TimeSet&, const TimeSet&) = default;

private:
    long horizon_;
    std::vector<bool> bits_;  // bits_[n-1] <=> n is a member
};

struct GapMetrics {
    /// Max over the leading gap (first member) and all consecutive gaps.
    std::optional<long> syndetic_bound;
    long longest_run = 0;
    /// Least N with {N..H} contained in the set; none when the trailing run
    /// is no longer than the largest gap elsewhere (at this horizon it would
    /// be indistinguishable from another syndetic block).
    std::optional<long> cofinite_from;
    /// Set when the stretch past the last member exceeds the syndetic bound.
    bool tail_uncertain = false;
};

GapMetrics gap_metrics(const TimeSet& s);

/// Syndetic bound of {n : {n..n+k-1} subset of s}; none when that derived
/// set is empty. Throws std::out_of_range for k > H.
std::optional<long> thickly_syndetic_bound(const TimeSet& s, long k);

struct DensityProfile {
    std::vector<Rational> profile;  // profile[n-1] = |s cap {1..n}| / n
    Rational estimate;              // max over the second half of the profile
};

DensityProfile upper_density_profile(const TimeSet& s);

struct Thresholds {
    Rational density_min;
    long thick_run_min = 1;
    long ts_window_max = 1;
};

struct ClassificationReport {
    long horizon = 0;
    std::optional<long> syndetic_bound;
    long longest_run = 0;
    std::map<long, std::optional<long>> thickly_syndetic_bounds;
    std::optional<long> cofinite_from;
    Rational density_estimate;
    bool tail_uncertain = false;

    bool cofinite = false;
    bool syndetic = false;
    bool thick = false;
    bool thickly_syndetic = false;
    bool positive_density = false;
};

ClassificationReport classify(const TimeSet& s, const Thresholds& thresholds);

}  // namespace ndslab
