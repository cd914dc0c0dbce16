#include "ndslab/shadowing.hpp"

#include <algorithm>
#include <stdexcept>

#include "ndslab/rng.hpp"

namespace ndslab {

namespace {
const Rational kMarginGrain(1, 1L << 20);
}

PseudoOrbit PseudoOrbit::prefix(std::size_t m) const {
    if (m + 1 > points.size()) throw std::out_of_range("prefix longer than pseudo-orbit");
    return {std::vector<Rational>(points.begin(), points.begin() + static_cast<long>(m) + 1), delta};
}

ValidationResult validate_pseudo_orbit(const MapSchedule& schedule,
                                       const std::vector<Rational>& points, const Rational& delta) {
    if (points.empty()) throw QueryError("pseudo-orbit must be nonempty");
    ValidationResult r;
    for (std::size_t i = 1; i < points.size(); ++i) {
        Rational gap = (schedule.map_at(i).eval(points[i - 1]) - points[i]).abs();
        if (!(gap < delta)) r.violations.push_back({i, gap});
    }
    r.valid = r.violations.empty();
    return r;
}

ValidationResult validate_hyper_pseudo_orbit(const MapSchedule& schedule,
                                             const std::vector<FiniteSubset>& sets,
                                             const Rational& delta) {
    if (sets.empty()) throw QueryError("hyper pseudo-orbit must be nonempty");
    ValidationResult r;
    for (std::size_t i = 1; i < sets.size(); ++i) {
        std::vector<Rational> image;
        for (const Rational& a : sets[i - 1].points()) image.push_back(schedule.map_at(i).eval(a));
        Rational gap = hausdorff_distance(FiniteSubset(std::move(image)), sets[i]);
        if (!(gap < delta)) r.violations.push_back({i, gap});
    }
    r.valid = r.violations.empty();
    return r;
}

PseudoOrbit perturbed_orbit(const MapSchedule& schedule, const Rational& x0, const Rational& delta,
                            std::size_t m, std::uint64_t seed, bool adversarial) {
    if (!(delta > Rational(0))) throw QueryError("pseudo-orbit delta must be positive");
    Rng rng(seed);
    std::vector<Rational> pts;
    pts.reserve(m + 1);
    pts.push_back(x0);
    const Rational tiny = delta / Rational(1L << 10);
    for (std::size_t i = 1; i <= m; ++i) {
        Rational base = schedule.map_at(i).eval(pts.back());
        Rational next;
        bool snapped = false;
        if (adversarial && rng.coin()) {
            // aim for a fold of the next map to be applied
            for (const Rational& bp : schedule.map_at(i + 1).breakpoints()) {
                if ((bp - base).abs() < delta - tiny) {
                    next = bp <= base ? bp + tiny : bp - tiny;
                    if ((next - base).abs() < delta) {
                        snapped = true;
                        break;
                    }
                }
            }
        }
        if (!snapped) {
            // eta = r * delta / 2^16 with |r| < 2^16
            long long r = static_cast<long long>(rng.index(2 * 65536 - 1)) - 65535;
            next = base + delta * Rational(r) / Rational(65536);
        }
        next = max(Rational(0), min(Rational(1), next));
        pts.push_back(next);
    }
    PseudoOrbit po{std::move(pts), delta};
    if (!validate_pseudo_orbit(schedule, po.points, delta).valid)
        throw std::logic_error("perturbed_orbit produced an invalid pseudo-orbit");
    return po;
}

IntervalUnion tracer_carrier(const MapSchedule& schedule, const std::vector<Rational>& points,
                             const Rational& epsilon) {
    const std::size_t m = points.size() - 1;
    auto window = [&](std::size_t i) {
        return Interval{max(Rational(0), points[i] - epsilon), min(Rational(1), points[i] + epsilon)};
    };
    Interval wm = window(m);
    if (wm.lo > wm.hi) return IntervalUnion{};
    IntervalUnion s = IntervalUnion::interval(wm.lo, wm.hi);
    for (std::size_t i = m; i >= 1; --i) {
        s = schedule.map_at(i).preimage(s);
        Interval w = window(i - 1);
        if (w.lo > w.hi) return IntervalUnion{};
        s = s.intersect(w);
        if (s.empty()) return s;
    }
    return s;
}

TracerSet tracer_set(const MapSchedule& schedule, const PseudoOrbit& po, const Rational& epsilon) {
    if (!(epsilon > Rational(0))) throw QueryError("tracer epsilon must be positive");
    TracerSet t{tracer_carrier(schedule, po.points, epsilon), epsilon, Rational(0)};
    if (t.carrier.empty()) return t;

    // largest rho with a nonempty carrier at epsilon - rho, to 2^-20
    Rational lo(0);
    Rational hi = epsilon;
    if (!tracer_carrier(schedule, po.points, Rational(0)).empty()) {
        t.margin = epsilon;
        return t;
    }
    while (hi - lo > kMarginGrain) {
        Rational mid = (lo + hi) / Rational(2);
        if (!tracer_carrier(schedule, po.points, epsilon - mid).empty()) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    t.margin = lo;
    return t;
}

bool traced_strictly(const MapSchedule& schedule, const PseudoOrbit& po, const Rational& epsilon) {
    if (epsilon <= kMarginGrain) return !tracer_carrier(schedule, po.points, Rational(0)).empty();
    return !tracer_carrier(schedule, po.points, epsilon - kMarginGrain).empty();
}

ShadowingReport finite_shadowing_check(const MapSchedule& schedule, const Rational& epsilon,
                                       const Rational& delta, std::size_t m, std::size_t trials,
                                       std::uint64_t seed) {
    if (!(epsilon > Rational(0))) throw QueryError("epsilon must be positive");
    Rng rng(seed);

    auto make_orbit = [&](std::size_t trial, const Rational& d) {
        Rng child = rng.child(trial);
        Rational x0 = child.unit(16);
        bool adversarial = trial % 2 == 1;
        return perturbed_orbit(schedule, x0, d, m, child.next(), adversarial);
    };

    ShadowingReport report;
    report.epsilon = epsilon;
    report.delta = delta;
    report.length = m;
    report.trials = trials;

    const bool degenerate_delta = !(delta > Rational(0));
    for (std::size_t t = 0; t < trials; ++t) {
        PseudoOrbit po = degenerate_delta
                             ? PseudoOrbit{{}, Rational(0)}
                             : make_orbit(t, delta);
        if (degenerate_delta) {
            // delta = 0 means true orbits
            Rng child = rng.child(t);
            Rational x = child.unit(16);
            std::vector<Rational> pts{x};
            for (std::size_t i = 1; i <= m; ++i) pts.push_back(schedule.map_at(i).eval(pts.back()));
            po = PseudoOrbit{std::move(pts), epsilon};
        }
        if (traced_strictly(schedule, po, epsilon)) {
            ++report.traced;
        } else {
            report.failures.push_back({t, po});
        }
    }

    // bisect the largest delta with zero failures at this epsilon
    auto all_traced = [&](const Rational& d) {
        for (std::size_t t = 0; t < trials; ++t) {
            if (!traced_strictly(schedule, make_orbit(t, d), epsilon)) return false;
        }
        return true;
    };
    Rational lo(0);
    Rational hi = epsilon;
    if (all_traced(hi)) {
        report.modulus_estimate = hi;
    } else {
        while (hi - lo > kMarginGrain) {
            Rational mid = (lo + hi) / Rational(2);
            if (all_traced(mid)) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        report.modulus_estimate = lo;
    }
    return report;
}

NestedTracerReport nested_tracer_limit(const MapSchedule& schedule, const PseudoOrbit& po,
                                       const std::vector<std::size_t>& lengths,
                                       const Rational& epsilon) {
    if (lengths.empty()) throw QueryError("nested tracer check needs at least one length");
    for (std::size_t j = 1; j < lengths.size(); ++j) {
        if (lengths[j] <= lengths[j - 1]) throw QueryError("prefix lengths must be increasing");
    }
    NestedTracerReport report;
    report.lengths = lengths;
    for (std::size_t j = 0; j < lengths.size(); ++j) {
        PseudoOrbit pre = po.prefix(lengths[j]);
        report.carriers.push_back(tracer_carrier(schedule, pre.points, epsilon));
        if (report.carriers.back().empty() && !report.first_empty_length) {
            report.first_empty_length = lengths[j];
        }
        if (j > 0 && !report.carriers[j].subset_of(report.carriers[j - 1])) report.nested = false;
    }
    report.final_nonempty = !report.carriers.back().empty();
    return report;
}

std::vector<PseudoOrbit> lift_hyper_pseudo_orbit(const MapSchedule& schedule,
                                                 const HyperPseudoOrbit& hpo) {
    ValidationResult v = validate_hyper_pseudo_orbit(schedule, hpo.sets, hpo.delta);
    if (!v.valid) {
        throw QueryError("invalid hyper pseudo-orbit: step " + std::to_string(v.violations.front().index) +
                         " has Hausdorff gap " + v.violations.front().gap.str());
    }
    const std::size_t m = hpo.length();
    const auto& sets = hpo.sets;

    std::vector<std::vector<bool>> covered(m + 1);
    for (std::size_t i = 0; i <= m; ++i) covered[i].assign(sets[i].size(), false);

    auto nearest_index = [](const std::vector<Rational>& pts, const Rational& value) {
        std::size_t best = 0;
        Rational best_gap = (pts[0] - value).abs();
        for (std::size_t j = 1; j < pts.size(); ++j) {
            Rational g = (pts[j] - value).abs();
            if (g < best_gap) {
                best_gap = g;
                best = j;
            }
        }
        return best;
    };

    // backward: pick a_{i-1} in A_{i-1} with f_i(a_{i-1}) close to a_i;
    // a suitable element exists because d_H(f_i(A_{i-1}), A_i) < delta
    auto backward_pick = [&](std::size_t i, const Rational& target) {
        const auto& prev = sets[i - 1].points();
        std::size_t best = 0;
        Rational best_gap = (schedule.map_at(i).eval(prev[0]) - target).abs();
        for (std::size_t j = 1; j < prev.size(); ++j) {
            Rational g = (schedule.map_at(i).eval(prev[j]) - target).abs();
            if (g < best_gap) {
                best_gap = g;
                best = j;
            }
        }
        return best;
    };

    std::vector<PseudoOrbit> family;
    auto emit = [&](std::size_t s, std::size_t point_index) {
        // chain through index s backward to 0 and forward to m
        std::vector<std::size_t> picks(m + 1);
        picks[s] = point_index;
        for (std::size_t i = s; i >= 1; --i) {
            picks[i - 1] = backward_pick(i, sets[i].points()[picks[i]]);
        }
        for (std::size_t i = s; i < m; ++i) {
            Rational fwd = schedule.map_at(i + 1).eval(sets[i].points()[picks[i]]);
            picks[i + 1] = nearest_index(sets[i + 1].points(), fwd);
        }
        std::vector<Rational> pts(m + 1);
        for (std::size_t i = 0; i <= m; ++i) {
            pts[i] = sets[i].points()[picks[i]];
            covered[i][picks[i]] = true;
        }
        family.push_back({std::move(pts), hpo.delta});
    };

    for (std::size_t j = 0; j < sets[m].size(); ++j) emit(m, j);
    while (true) {
        bool found = false;
        for (std::size_t i = m + 1; i-- > 0 && !found;) {
            for (std::size_t j = 0; j < covered[i].size(); ++j) {
                if (!covered[i][j]) {
                    emit(i, j);
                    found = true;
                    break;
                }
            }
        }
        if (!found) break;
    }

    for (const PseudoOrbit& po : family) {
        if (!validate_pseudo_orbit(schedule, po.points, hpo.delta).valid)
            throw std::logic_error("lifted orbit failed validation");
    }
    return family;
}

HyperTraceResult hyper_trace_assemble(const MapSchedule& schedule, const HyperPseudoOrbit& hpo,
                                      const std::vector<PseudoOrbit>& lifted,
                                      const Rational& epsilon) {
    HyperTraceResult result;
    result.max_step_distance = Rational(0);
    std::vector<Rational> picks;
    for (std::size_t j = 0; j < lifted.size(); ++j) {
        IntervalUnion carrier = tracer_carrier(schedule, lifted[j].points, epsilon);
        if (carrier.empty()) {
            result.failing_component = j;
            return result;
        }
        const Interval& c = carrier.components().front();
        picks.push_back((c.lo + c.hi) / Rational(2));
    }
    FiniteSubset b(picks);
    for (std::size_t i = 0; i <= hpo.length(); ++i) {
        Rational d = hausdorff_distance(induced_image(schedule, b, i), hpo.sets[i]);
        result.max_step_distance = max(result.max_step_distance, d);
        if (d > epsilon) {
            // cannot happen for a family produced by lift_hyper_pseudo_orbit
            result.failing_component.reset();
            result.traced.reset();
            throw std::logic_error("assembled set exceeded the tracing bound at step " +
                                   std::to_string(i));
        }
    }
    result.traced = std::move(b);
    return result;
}

}  // namespace ndslab
