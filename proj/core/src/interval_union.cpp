#include "ndslab/interval_union.hpp"

#include <algorithm>
#include <stdexcept>

namespace ndslab {

IntervalUnion::IntervalUnion(std::vector<Interval> components) : comps_(std::move(components)) {
    for (const Interval& c : comps_) {
        if (c.lo > c.hi) throw std::invalid_argument("interval with lo > hi");
        if (c.lo < Rational(0) || c.hi > Rational(1))
            throw std::invalid_argument("interval outside [0,1]: [" + c.lo.str() + ", " + c.hi.str() + "]");
    }
    normalize();
}

IntervalUnion IntervalUnion::interval(Rational lo, Rational hi) {
    return IntervalUnion(std::vector<Interval>{{std::move(lo), std::move(hi)}});
}

void IntervalUnion::normalize() {
    if (comps_.empty()) return;
    std::sort(comps_.begin(), comps_.end(), [](const Interval& a, const Interval& b) {
        return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
    });
    std::vector<Interval> merged;
    merged.push_back(comps_.front());
    for (std::size_t i = 1; i < comps_.size(); ++i) {
        Interval& last = merged.back();
        if (comps_[i].lo <= last.hi) {
            last.hi = max(last.hi, comps_[i].hi);
        } else {
            merged.push_back(comps_[i]);
        }
    }
    comps_ = std::move(merged);
}

bool IntervalUnion::contains(const Rational& x) const {
    for (const Interval& c : comps_) {
        if (c.contains(x)) return true;
        if (c.lo > x) break;
    }
    return false;
}

Rational IntervalUnion::diameter() const {
    if (comps_.empty()) return Rational(0);
    return comps_.back().hi - comps_.front().lo;
}

Rational IntervalUnion::min_lo() const {
    if (comps_.empty()) throw std::logic_error("min_lo of empty union");
    return comps_.front().lo;
}

Rational IntervalUnion::max_hi() const {
    if (comps_.empty()) throw std::logic_error("max_hi of empty union");
    return comps_.back().hi;
}

IntervalUnion IntervalUnion::intersect(const Interval& window) const {
    std::vector<Interval> out;
    for (const Interval& c : comps_) {
        Rational lo = max(c.lo, window.lo);
        Rational hi = min(c.hi, window.hi);
        if (lo <= hi) out.push_back({lo, hi});
    }
    IntervalUnion r;
    r.comps_ = std::move(out);  // already sorted and disjoint
    return r;
}

IntervalUnion IntervalUnion::intersect(const IntervalUnion& other) const {
    std::vector<Interval> out;
    for (const Interval& w : other.comps_) {
        for (const Interval& c : comps_) {
            Rational lo = max(c.lo, w.lo);
            Rational hi = min(c.hi, w.hi);
            if (lo <= hi) out.push_back({lo, hi});
        }
    }
    return IntervalUnion(std::move(out));
}

IntervalUnion IntervalUnion::unite(const IntervalUnion& other) const {
    std::vector<Interval> out = comps_;
    out.insert(out.end(), other.comps_.begin(), other.comps_.end());
    return IntervalUnion(std::move(out));
}

bool IntervalUnion::subset_of(const IntervalUnion& other) const {
    for (const Interval& c : comps_) {
        bool covered = false;
        for (const Interval& o : other.comps_) {
            if (o.lo <= c.lo && c.hi <= o.hi) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

bool IntervalUnion::meets_open(const OpenInterval& v) const {
    for (const Interval& c : comps_) {
        if (max(c.lo, v.lo) < min(c.hi, v.hi)) return true;
    }
    return false;
}

std::string IntervalUnion::str() const {
    if (comps_.empty()) return "{}";
    std::string s;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (i) s += " u ";
        if (comps_[i].lo == comps_[i].hi) {
            s += "{" + comps_[i].lo.str() + "}";
        } else {
            s += "[" + comps_[i].lo.str() + ", " + comps_[i].hi.str() + "]";
        }
    }
    return s;
}

}  // namespace ndslab
