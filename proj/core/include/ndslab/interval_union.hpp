#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ndslab/rational.hpp"

namespace ndslab {

/// Closed interval [lo, hi] inside [0,1]; lo == hi is a point.
struct Interval {
    Rational lo;
    Rational hi;

    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    Rational length() const { return hi - lo; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Open interval (lo, hi) inside [0,1]; always nondegenerate (lo < hi).
struct OpenInterval {
    Rational lo;
    Rational hi;

    bool contains(const Rational& x) const { return lo < x && x < hi; }
    Interval closure() const { return {lo, hi}; }
    friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

/// Normalized finite union of closed rational intervals inside [0,1].
///
/// Components are sorted, pairwise disjoint and non-touching; overlapping or
/// adjacent inputs are merged on construction. Degenerate components are kept.
class IntervalUnion {
public:
    IntervalUnion() = default;
    explicit IntervalUnion(std::vector<Interval> components);

    static IntervalUnion interval(Rational lo, Rational hi);
    static IntervalUnion point(const Rational& x) { return interval(x, x); }
    static IntervalUnion full() { return interval(Rational(0), Rational(1)); }

    const std::vector<Interval>& components() const { return comps_; }
    bool empty() const { return comps_.empty(); }
    std::size_t size() const { return comps_.size(); }

    bool contains(const Rational& x) const;

    /// (max hi) - (min lo); zero for the empty union.
    Rational diameter() const;

    Rational min_lo() const;
    Rational max_hi() const;

    IntervalUnion intersect(const Interval& window) const;
    IntervalUnion intersect(const IntervalUnion& other) const;
    IntervalUnion unite(const IntervalUnion& other) const;

    /// True iff every point of *this lies in `other`.
    bool subset_of(const IntervalUnion& other) const;

    /// True iff some component overlaps the open interval on a set of
    /// positive length (a non-boundary witness exists).
    bool meets_open(const OpenInterval& v) const;

    std::string str() const;

    friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

private:
    std::vector<Interval> comps_;
    void normalize();
};

}  // namespace ndslab
