#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ndslab/interval_union.hpp"
#include "ndslab/rational.hpp"

namespace ndslab {

/// Continuous piecewise-linear self-map of [0,1] given by breakpoints
/// 0 = b_0 < ... < b_k = 1 and values v_0..v_k in [0,1]; linear
/// interpolation on each [b_{j-1}, b_j].
class PLMap {
public:
    PLMap(std::vector<Rational> breakpoints, std::vector<Rational> values);

    static PLMap identity();

    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const std::vector<Rational>& values() const { return values_; }
    std::size_t piece_count() const { return breakpoints_.size() - 1; }

    /// True iff no piece is constant (v_{j-1} != v_j for all j); required for
    /// the exact open/closed equivalence used by hitting analyses.
    bool no_constant_piece() const { return no_constant_piece_; }

    Rational eval(const Rational& x) const;

    /// Exact forward image { eval(x) : x in u }.
    IntervalUnion image(const IntervalUnion& u) const;

    /// Exact preimage { x in [0,1] : eval(x) in u }.
    IntervalUnion preimage(const IntervalUnion& u) const;

    Rational max_abs_slope() const;

    /// `pl-map { breakpoints = ["0","1/4","1"], values = ["1/2","0","1"] }`
    std::string to_record() const;
    static PLMap parse_record(std::string_view text);

    friend bool operator==(const PLMap&, const PLMap&) = default;

private:
    std::vector<Rational> breakpoints_;
    std::vector<Rational> values_;
    bool no_constant_piece_ = true;
};

/// Periodic schedule of maps: f_n = maps[(n-1) mod period], n >= 1.
/// f_1^n denotes f_n o ... o f_1 with f_1^0 the identity.
class MapSchedule {
public:
    explicit MapSchedule(std::vector<PLMap> maps);

    const std::vector<PLMap>& maps() const { return maps_; }
    std::size_t period() const { return maps_.size(); }
    const PLMap& map_at(std::size_t n) const { return maps_[(n - 1) % maps_.size()]; }

    bool no_constant_piece() const;

    /// f_start^{start+n-1}(x): n applications starting at index `start`.
    Rational orbit_point(const Rational& x, std::size_t n, std::size_t start = 1) const;

    /// Exact n-step image starting at index `start`.
    IntervalUnion image_at_time(const IntervalUnion& u, std::size_t n, std::size_t start = 1) const;

    Rational max_abs_slope() const;

    friend bool operator==(const MapSchedule&, const MapSchedule&) = default;

private:
    std::vector<PLMap> maps_;
};

/// Two coordinate schedules under the sum metric
/// d((x,y),(x',y')) = |x-x'| + |y-y'|.
struct ProductSystem {
    MapSchedule first;
    MapSchedule second;

    static Rational distance(const Rational& x, const Rational& y,
                             const Rational& xp, const Rational& yp) {
        return (x - xp).abs() + (y - yp).abs();
    }
};

}  // namespace ndslab
