#include "ndslab/timeset.hpp"

#include <algorithm>
#include <stdexcept>

namespace ndslab {

TimeSet::TimeSet(long horizon) : horizon_(horizon) {
    if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
    bits_.assign(static_cast<std::size_t>(horizon), false);
}

TimeSet::TimeSet(long horizon, const std::vector<long>& members) : TimeSet(horizon) {
    for (long n : members) insert(n);
}

TimeSet TimeSet::full(long horizon) { return range(horizon, 1, horizon); }

TimeSet TimeSet::range(long horizon, long from, long to) {
    TimeSet s(horizon);
    for (long n = from; n <= to; ++n) s.insert(n);
    return s;
}

void TimeSet::insert(long n) {
    if (n < 1 || n > horizon_) throw std::out_of_range("member outside {1..H}");
    bits_[static_cast<std::size_t>(n - 1)] = true;
}

long TimeSet::count() const {
    long c = 0;
    for (bool b : bits_) c += b ? 1 : 0;
    return c;
}

std::vector<long> TimeSet::members() const {
    std::vector<long> out;
    for (long n = 1; n <= horizon_; ++n) {
        if (bits_[static_cast<std::size_t>(n - 1)]) out.push_back(n);
    }
    return out;
}

TimeSet TimeSet::intersect(const TimeSet& other) const {
    if (other.horizon_ != horizon_) throw std::invalid_argument("horizon mismatch");
    TimeSet out(horizon_);
    for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = bits_[i] && other.bits_[i];
    return out;
}

TimeSet TimeSet::unite(const TimeSet& other) const {
    if (other.horizon_ != horizon_) throw std::invalid_argument("horizon mismatch");
    TimeSet out(horizon_);
    for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = bits_[i] || other.bits_[i];
    return out;
}

bool TimeSet::subset_of(const TimeSet& other) const {
    if (other.horizon_ != horizon_) throw std::invalid_argument("horizon mismatch");
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] && !other.bits_[i]) return false;
    }
    return true;
}

std::string TimeSet::run_length_encoded() const {
    std::vector<long> ms = members();
    if (ms.empty()) return "-";
    std::string out;
    std::size_t i = 0;
    while (i < ms.size()) {
        std::size_t j = i;
        while (j + 1 < ms.size() && ms[j + 1] == ms[j] + 1) ++j;
        if (!out.empty()) out += ",";
        if (j > i) {
            out += std::to_string(ms[i]) + "-" + std::to_string(ms[j]);
        } else {
            out += std::to_string(ms[i]);
        }
        i = j + 1;
    }
    return out;
}

GapMetrics gap_metrics(const TimeSet& s) {
    GapMetrics gm;
    std::vector<long> ms = s.members();
    if (ms.empty()) {
        gm.tail_uncertain = true;
        return gm;
    }
    long bound = ms.front();  // leading gap
    for (std::size_t j = 1; j < ms.size(); ++j) bound = std::max(bound, ms[j] - ms[j - 1]);
    gm.syndetic_bound = bound;
    gm.tail_uncertain = (s.horizon() - ms.back()) > bound;

    long run = 1;
    long best_run = 1;
    for (std::size_t j = 1; j < ms.size(); ++j) {
        run = (ms[j] == ms[j - 1] + 1) ? run + 1 : 1;
        best_run = std::max(best_run, run);
    }
    gm.longest_run = best_run;

    if (ms.back() == s.horizon()) {
        long start = s.horizon();
        while (start > 1 && s.contains(start - 1)) --start;
        long tail_run = s.horizon() - start + 1;
        if (tail_run >= bound) gm.cofinite_from = start;
    }
    return gm;
}

namespace {

// Start positions of length-k blocks fully inside s.
TimeSet window_start_set(const TimeSet& s, long k) {
    if (k < 1) throw std::out_of_range("window length must be >= 1");
    if (k > s.horizon()) throw std::out_of_range("window length exceeds horizon");
    TimeSet derived(s.horizon() - k + 1);
    long run = 0;
    for (long n = 1; n <= s.horizon(); ++n) {
        run = s.contains(n) ? run + 1 : 0;
        if (run >= k) derived.insert(n - k + 1);
    }
    return derived;
}

}  // namespace

std::optional<long> thickly_syndetic_bound(const TimeSet& s, long k) {
    return gap_metrics(window_start_set(s, k)).syndetic_bound;
}

DensityProfile upper_density_profile(const TimeSet& s) {
    DensityProfile dp;
    dp.estimate = Rational(0);
    long running = 0;
    const long H = s.horizon();
    const long half = (H + 1) / 2;
    for (long n = 1; n <= H; ++n) {
        if (s.contains(n)) ++running;
        Rational d = Rational(running) / Rational(n);
        dp.profile.push_back(d);
        if (n >= half) dp.estimate = max(dp.estimate, d);
    }
    return dp;
}

ClassificationReport classify(const TimeSet& s, const Thresholds& thresholds) {
    if (thresholds.thick_run_min < 1 || thresholds.ts_window_max < 1 ||
        !(thresholds.density_min > Rational(0)))
        throw QueryError("classification thresholds must be positive");

    ClassificationReport r;
    r.horizon = s.horizon();

    GapMetrics gm = gap_metrics(s);
    r.syndetic_bound = gm.syndetic_bound;
    r.longest_run = gm.longest_run;
    r.cofinite_from = gm.cofinite_from;
    r.tail_uncertain = gm.tail_uncertain;
    r.density_estimate = upper_density_profile(s).estimate;

    // Window evidence is judged with the same tail caution as the base set:
    // a window counts only if its start-set is syndetic without an uncertain
    // tail at this horizon. This keeps the verdict implication chain sound.
    const long k_max = std::min(thresholds.ts_window_max, s.horizon());
    bool ts_all = true;
    for (long k = 1; k <= k_max; ++k) {
        GapMetrics dgm = gap_metrics(window_start_set(s, k));
        r.thickly_syndetic_bounds[k] = dgm.syndetic_bound;
        if (!dgm.syndetic_bound || dgm.tail_uncertain) ts_all = false;
    }

    long tail_run = 0;
    if (gm.cofinite_from) tail_run = s.horizon() - *gm.cofinite_from + 1;
    r.cofinite = gm.cofinite_from.has_value() && tail_run >= k_max;
    r.syndetic = gm.syndetic_bound.has_value() && !gm.tail_uncertain;
    r.thick = gm.longest_run >= thresholds.thick_run_min;
    r.thickly_syndetic = ts_all && !s.empty();
    r.positive_density = r.density_estimate >= thresholds.density_min;

    if ((r.cofinite && !r.thickly_syndetic) || (r.thickly_syndetic && !r.syndetic))
        throw std::logic_error("classification implication chain violated");
    return r;
}

}  // namespace ndslab
