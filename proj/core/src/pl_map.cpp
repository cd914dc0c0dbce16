#include "ndslab/pl_map.hpp"

#include <algorithm>
#include <stdexcept>

#include "ndslab/record.hpp"

namespace ndslab {

PLMap::PLMap(std::vector<Rational> breakpoints, std::vector<Rational> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (breakpoints_.size() < 2) throw std::invalid_argument("pl-map needs at least one piece");
    if (breakpoints_.size() != values_.size())
        throw std::invalid_argument("pl-map breakpoint/value count mismatch");
    if (breakpoints_.front() != Rational(0) || breakpoints_.back() != Rational(1))
        throw std::invalid_argument("pl-map breakpoints must span [0,1]");
    for (std::size_t j = 1; j < breakpoints_.size(); ++j) {
        if (!(breakpoints_[j - 1] < breakpoints_[j]))
            throw std::invalid_argument("pl-map breakpoints must be strictly increasing");
    }
    for (const Rational& v : values_) {
        if (v < Rational(0) || v > Rational(1))
            throw std::invalid_argument("pl-map value outside [0,1]: " + v.str());
    }
    for (std::size_t j = 1; j < values_.size(); ++j) {
        if (values_[j - 1] == values_[j]) {
            no_constant_piece_ = false;
            break;
        }
    }
}

PLMap PLMap::identity() {
    return PLMap({Rational(0), Rational(1)}, {Rational(0), Rational(1)});
}

Rational PLMap::eval(const Rational& x) const {
    if (x < Rational(0) || x > Rational(1))
        throw std::domain_error("pl-map argument outside [0,1]: " + x.str());
    auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
    std::size_t j = static_cast<std::size_t>(it - breakpoints_.begin());
    if (j < breakpoints_.size() && breakpoints_[j] == x) return values_[j];
    // x lies strictly inside piece [b_{j-1}, b_j]
    const Rational& l = breakpoints_[j - 1];
    const Rational& r = breakpoints_[j];
    return values_[j - 1] + (values_[j] - values_[j - 1]) * (x - l) / (r - l);
}

IntervalUnion PLMap::image(const IntervalUnion& u) const {
    std::vector<Interval> out;
    for (const Interval& c : u.components()) {
        for (std::size_t j = 1; j < breakpoints_.size(); ++j) {
            Rational p = max(c.lo, breakpoints_[j - 1]);
            Rational q = min(c.hi, breakpoints_[j]);
            if (p > q) continue;
            Rational e1 = eval(p);
            Rational e2 = eval(q);
            out.push_back({min(e1, e2), max(e1, e2)});
        }
    }
    return IntervalUnion(std::move(out));
}

IntervalUnion PLMap::preimage(const IntervalUnion& u) const {
    std::vector<Interval> out;
    for (std::size_t j = 1; j < breakpoints_.size(); ++j) {
        const Rational& l = breakpoints_[j - 1];
        const Rational& r = breakpoints_[j];
        const Rational& vl = values_[j - 1];
        const Rational& vr = values_[j];
        if (vl == vr) {
            for (const Interval& c : u.components()) {
                if (c.contains(vl)) {
                    out.push_back({l, r});
                    break;
                }
            }
            continue;
        }
        Rational slope = (vr - vl) / (r - l);
        for (const Interval& c : u.components()) {
            Rational x1 = l + (c.lo - vl) / slope;
            Rational x2 = l + (c.hi - vl) / slope;
            Rational lo = max(min(x1, x2), l);
            Rational hi = min(max(x1, x2), r);
            if (lo <= hi) out.push_back({lo, hi});
        }
    }
    return IntervalUnion(std::move(out));
}

Rational PLMap::max_abs_slope() const {
    Rational best(0);
    for (std::size_t j = 1; j < breakpoints_.size(); ++j) {
        Rational s = ((values_[j] - values_[j - 1]) / (breakpoints_[j] - breakpoints_[j - 1])).abs();
        best = max(best, s);
    }
    return best;
}

std::string PLMap::to_record() const {
    auto list = [](const std::vector<Rational>& xs) {
        std::string s = "[";
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) s += ", ";
            s += quote_string(xs[i].str());
        }
        return s + "]";
    };
    return "pl-map { breakpoints = " + list(breakpoints_) + ", values = " + list(values_) + " }";
}

PLMap PLMap::parse_record(std::string_view text) {
    RecordValue rec = parse_record_text(text);
    if (rec.record_name != "pl-map") throw QueryError("expected a pl-map record, got '" + rec.record_name + "'");
    auto rationals = [](const RecordValue& v, const char* what) {
        if (v.kind != RecordValue::Kind::List) throw QueryError(std::string(what) + " must be a list");
        std::vector<Rational> out;
        for (const RecordValue& e : v.list) {
            if (e.kind == RecordValue::Kind::String) {
                out.push_back(Rational::parse(e.text));
            } else if (e.kind == RecordValue::Kind::Integer) {
                out.push_back(Rational(e.integer));
            } else {
                throw QueryError(std::string(what) + " entries must be rational strings");
            }
        }
        return out;
    };
    return PLMap(rationals(rec.at("breakpoints"), "breakpoints"), rationals(rec.at("values"), "values"));
}

MapSchedule::MapSchedule(std::vector<PLMap> maps) : maps_(std::move(maps)) {
    if (maps_.empty()) throw std::invalid_argument("schedule needs at least one map");
}

bool MapSchedule::no_constant_piece() const {
    return std::all_of(maps_.begin(), maps_.end(), [](const PLMap& m) { return m.no_constant_piece(); });
}

Rational MapSchedule::orbit_point(const Rational& x, std::size_t n, std::size_t start) const {
    Rational y = x;
    for (std::size_t i = 0; i < n; ++i) y = map_at(start + i).eval(y);
    return y;
}

IntervalUnion MapSchedule::image_at_time(const IntervalUnion& u, std::size_t n, std::size_t start) const {
    IntervalUnion w = u;
    for (std::size_t i = 0; i < n; ++i) w = map_at(start + i).image(w);
    return w;
}

Rational MapSchedule::max_abs_slope() const {
    Rational best(0);
    for (const PLMap& m : maps_) best = max(best, m.max_abs_slope());
    return best;
}

}  // namespace ndslab
