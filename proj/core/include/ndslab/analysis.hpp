#pragma once

#include <cstdint>
#include <vector>

#include "ndslab/hyperspace.hpp"
#include "ndslab/interval_union.hpp"
#include "ndslab/pl_map.hpp"
#include "ndslab/rational.hpp"
#include "ndslab/timeset.hpp"

namespace ndslab {

struct SensitivityQuery {
    MapSchedule schedule;
    std::vector<OpenInterval> v;  // interior of an interval union; nondegenerate
    Rational delta;
    long horizon = 1;
};

struct HittingQuery {
    MapSchedule schedule;
    OpenInterval u;
    OpenInterval v;
    long horizon = 1;
};

/// {n : diameter(f_1^n(closure v)) > delta}. Exact for schedules without
/// constant pieces; otherwise evaluated on a dense sample grid.
TimeSet sensitivity_timeset(const SensitivityQuery& q);

/// {n : f_1^n(u) meets v with a non-boundary witness}.
TimeSet hitting_timeset(const HittingQuery& q);

/// Hitting set of the induced hyperspace system between two Vietoris boxes,
/// via the finite-witness characterization: n is a member iff every
/// f_1^n(U_i) meets the union of the V_j and every V_j is met by some
/// f_1^n(U_i). Requires exact mode (no constant pieces).
TimeSet vietoris_hitting_timeset(const MapSchedule& schedule, const VietorisBox& box_u,
                                 const VietorisBox& box_v, long horizon);

/// Intersection of the per-interval sensitivity time-sets.
TimeSet multi_sensitivity_timeset(const MapSchedule& schedule, const std::vector<OpenInterval>& vs,
                                  const Rational& delta, long horizon);

/// Product-system sensitivity for the rectangle u x v under the sum metric:
/// n is a member iff diamX_n + diamY_n > delta.
TimeSet product_sensitivity_timeset(const ProductSystem& system, const OpenInterval& u,
                                    const OpenInterval& v, const Rational& delta, long horizon);

/// {n : sup_{y in B(x,eps)} |f_1^n(x) - f_1^n(y)| > delta}; the per-point
/// separation sets driving the hyperspace witness construction.
TimeSet point_sensitivity_timeset(const MapSchedule& schedule, const Rational& x,
                                  const Rational& eps, const Rational& delta, long horizon);

/// Finds y in `domain` with f_start^{start+n-1}(y) == target, assuming the
/// target lies in the exact n-step image of the domain interval.
Rational preimage_point(const MapSchedule& schedule, const Interval& domain, std::size_t n,
                        const Rational& target, std::size_t start = 1);

struct PointWitness {
    Rational y;
    Rational separation;  // |f_1^n(x) - f_1^n(y)|, exact
};

/// Best achievable separation from x at time n over a closed ball, with an
/// exact witness point extracted by backward solving.
PointWitness best_separation_witness(const MapSchedule& schedule, const Rational& x,
                                     const Interval& ball, std::size_t n);

struct HyperSearchParams {
    std::uint64_t seed = 1;
    std::size_t samples_per_time = 8;  // random-ball fallback budget per n
    unsigned shrink_bits = 10;         // witness balls shrunk to eps*(1 - 2^-bits)
};

struct HyperWitness {
    long time = 0;
    FiniteSubset witness;
    Rational separation;  // exact d_H of the n-step images, > delta
};

struct HyperSensitivityResult {
    TimeSet certified;
    std::vector<HyperWitness> witnesses;  // one per certified time
};

/// Certified lower bound on the hyperspace sensitivity time-set of the ball
/// around nbhd.center: every reported n carries a witness B inside the ball
/// whose n-step image is verified (exactly) to be Hausdorff-separated from
/// the center's image by more than delta.
HyperSensitivityResult hyperspace_sensitivity_timeset(const MapSchedule& schedule,
                                                      const HyperNeighborhood& nbhd,
                                                      const Rational& delta, long horizon,
                                                      const HyperSearchParams& params = {});

}  // namespace ndslab
