#include "ndslab/analysis.hpp"

#include <stdexcept>

#include "ndslab/rng.hpp"

namespace ndslab {

namespace {

void validate_open(const OpenInterval& v, const char* what) {
    if (!(Rational(0) <= v.lo && v.lo < v.hi && v.hi <= Rational(1)))
        throw QueryError(std::string(what) + " must be a nondegenerate open interval inside [0,1]");
}

// Sample grid over the closure of an open interval, endpoints included.
std::vector<Rational> sample_grid(const Interval& c, unsigned subdivisions, bool interior_only) {
    std::vector<Rational> out;
    Rational step = (c.hi - c.lo) / Rational(static_cast<long long>(subdivisions));
    for (unsigned j = 0; j <= subdivisions; ++j) {
        if (interior_only && (j == 0 || j == subdivisions)) continue;
        out.push_back(c.lo + step * Rational(static_cast<long long>(j)));
    }
    return out;
}

// Per-step diameters of the n-step images of the closure of vs, by exact
// propagation when possible and dense sampling otherwise.
std::vector<Rational> image_diameters(const MapSchedule& schedule,
                                      const std::vector<OpenInterval>& vs, long horizon) {
    std::vector<Rational> diams;
    diams.reserve(static_cast<std::size_t>(horizon));
    std::vector<Interval> closures;
    for (const OpenInterval& v : vs) closures.push_back(v.closure());
    if (schedule.no_constant_piece()) {
        IntervalUnion w{closures};
        for (long n = 1; n <= horizon; ++n) {
            w = schedule.map_at(static_cast<std::size_t>(n)).image(w);
            diams.push_back(w.diameter());
        }
        return diams;
    }
    // sampling fallback for maps with constant pieces
    std::vector<Rational> pts;
    for (const Interval& c : closures) {
        auto grid = sample_grid(c, 256, false);
        pts.insert(pts.end(), grid.begin(), grid.end());
    }
    for (long n = 1; n <= horizon; ++n) {
        Rational lo(1), hi(0);
        for (Rational& p : pts) {
            p = schedule.map_at(static_cast<std::size_t>(n)).eval(p);
            lo = min(lo, p);
            hi = max(hi, p);
        }
        diams.push_back(hi - lo);
    }
    return diams;
}

}  // namespace

TimeSet sensitivity_timeset(const SensitivityQuery& q) {
    if (q.v.empty()) throw QueryError("sensitivity query needs at least one open interval");
    for (const OpenInterval& v : q.v) validate_open(v, "sensitivity neighborhood");
    if (!(q.delta > Rational(0))) throw QueryError("sensitivity delta must be positive");
    std::vector<Rational> diams = image_diameters(q.schedule, q.v, q.horizon);
    TimeSet out(q.horizon);
    for (long n = 1; n <= q.horizon; ++n) {
        if (diams[static_cast<std::size_t>(n - 1)] > q.delta) out.insert(n);
    }
    return out;
}

TimeSet hitting_timeset(const HittingQuery& q) {
    validate_open(q.u, "hitting source");
    validate_open(q.v, "hitting target");
    TimeSet out(q.horizon);
    if (q.schedule.no_constant_piece()) {
        IntervalUnion w = IntervalUnion::interval(q.u.lo, q.u.hi);
        for (long n = 1; n <= q.horizon; ++n) {
            w = q.schedule.map_at(static_cast<std::size_t>(n)).image(w);
            if (w.meets_open(q.v)) out.insert(n);
        }
        return out;
    }
    // sampling fallback: interior witnesses only
    std::vector<Rational> pts = sample_grid(q.u.closure(), 1024, true);
    for (long n = 1; n <= q.horizon; ++n) {
        bool hit = false;
        for (Rational& p : pts) {
            p = q.schedule.map_at(static_cast<std::size_t>(n)).eval(p);
            if (q.v.contains(p)) hit = true;
        }
        if (hit) out.insert(n);
    }
    return out;
}

TimeSet vietoris_hitting_timeset(const MapSchedule& schedule, const VietorisBox& box_u,
                                 const VietorisBox& box_v, long horizon) {
    if (box_u.opens.empty() || box_v.opens.empty())
        throw QueryError("vietoris boxes need at least one open interval");
    for (const OpenInterval& u : box_u.opens) validate_open(u, "vietoris source open");
    for (const OpenInterval& v : box_v.opens) validate_open(v, "vietoris target open");
    if (!schedule.no_constant_piece())
        throw UnsupportedExactModeError(
            "vietoris hitting analysis requires maps without constant pieces");

    std::vector<IntervalUnion> images;
    for (const OpenInterval& u : box_u.opens)
        images.push_back(IntervalUnion::interval(u.lo, u.hi));

    TimeSet out(horizon);
    for (long n = 1; n <= horizon; ++n) {
        const PLMap& f = schedule.map_at(static_cast<std::size_t>(n));
        for (IntervalUnion& w : images) w = f.image(w);

        bool member = true;
        for (const IntervalUnion& w : images) {
            bool meets_union = false;
            for (const OpenInterval& v : box_v.opens) {
                if (w.meets_open(v)) {
                    meets_union = true;
                    break;
                }
            }
            if (!meets_union) {
                member = false;
                break;
            }
        }
        if (member) {
            for (const OpenInterval& v : box_v.opens) {
                bool met = false;
                for (const IntervalUnion& w : images) {
                    if (w.meets_open(v)) {
                        met = true;
                        break;
                    }
                }
                if (!met) {
                    member = false;
                    break;
                }
            }
        }
        if (member) out.insert(n);
    }
    return out;
}

TimeSet multi_sensitivity_timeset(const MapSchedule& schedule, const std::vector<OpenInterval>& vs,
                                  const Rational& delta, long horizon) {
    if (vs.empty()) throw QueryError("multi-sensitivity query needs at least one interval");
    TimeSet out = TimeSet::full(horizon);
    for (const OpenInterval& v : vs) {
        out = out.intersect(sensitivity_timeset({schedule, {v}, delta, horizon}));
    }
    return out;
}

TimeSet product_sensitivity_timeset(const ProductSystem& system, const OpenInterval& u,
                                    const OpenInterval& v, const Rational& delta, long horizon) {
    validate_open(u, "product first factor");
    validate_open(v, "product second factor");
    if (!(delta > Rational(0))) throw QueryError("product delta must be positive");
    std::vector<Rational> dx = image_diameters(system.first, {u}, horizon);
    std::vector<Rational> dy = image_diameters(system.second, {v}, horizon);
    TimeSet out(horizon);
    for (long n = 1; n <= horizon; ++n) {
        if (dx[static_cast<std::size_t>(n - 1)] + dy[static_cast<std::size_t>(n - 1)] > delta)
            out.insert(n);
    }
    return out;
}

TimeSet point_sensitivity_timeset(const MapSchedule& schedule, const Rational& x,
                                  const Rational& eps, const Rational& delta, long horizon) {
    if (!(eps > Rational(0)) || !(delta > Rational(0)))
        throw QueryError("point sensitivity needs positive eps and delta");
    Interval ball{max(Rational(0), x - eps), min(Rational(1), x + eps)};
    IntervalUnion w = IntervalUnion::interval(ball.lo, ball.hi);
    Rational fx = x;
    TimeSet out(horizon);
    for (long n = 1; n <= horizon; ++n) {
        const PLMap& f = schedule.map_at(static_cast<std::size_t>(n));
        w = f.image(w);
        fx = f.eval(fx);
        Rational sep = max((fx - w.min_lo()).abs(), (w.max_hi() - fx).abs());
        if (sep > delta) out.insert(n);
    }
    return out;
}

namespace {

// Walks a target backwards through stored per-step images: history[i] is the
// exact image at time offset i of history[0]. Point preimages are cheap (at
// most one candidate interval per map piece), so this is linear in n where a
// forward search would revisit whole image unions at every level.
Rational backward_point(const MapSchedule& schedule, const std::vector<IntervalUnion>& history,
                        std::size_t n, const Rational& target, std::size_t start) {
    Rational t = target;
    for (std::size_t i = n; i >= 1; --i) {
        const PLMap& f = schedule.map_at(start + i - 1);
        IntervalUnion candidates = f.preimage(IntervalUnion::point(t)).intersect(history[i - 1]);
        if (candidates.empty())
            throw std::logic_error("backward point solve: target not reachable");
        t = candidates.components().front().lo;
    }
    return t;
}

}  // namespace

Rational preimage_point(const MapSchedule& schedule, const Interval& domain, std::size_t n,
                        const Rational& target, std::size_t start) {
    std::vector<IntervalUnion> history{IntervalUnion::interval(domain.lo, domain.hi)};
    history.reserve(n + 1);
    for (std::size_t i = 1; i <= n; ++i)
        history.push_back(schedule.map_at(start + i - 1).image(history.back()));
    if (!history.back().contains(target))
        throw std::logic_error("preimage_point: target not in the image of the domain");
    return backward_point(schedule, history, n, target, start);
}

PointWitness best_separation_witness(const MapSchedule& schedule, const Rational& x,
                                     const Interval& ball, std::size_t n) {
    IntervalUnion w = schedule.image_at_time(IntervalUnion::interval(ball.lo, ball.hi), n);
    Rational fx = schedule.orbit_point(x, n);
    Rational lo = w.min_lo();
    Rational hi = w.max_hi();
    Rational target = ((fx - lo).abs() >= (hi - fx).abs()) ? lo : hi;
    Rational y = preimage_point(schedule, ball, n, target);
    return {y, (fx - target).abs()};
}

HyperSensitivityResult hyperspace_sensitivity_timeset(const MapSchedule& schedule,
                                                      const HyperNeighborhood& nbhd,
                                                      const Rational& delta, long horizon,
                                                      const HyperSearchParams& params) {
    if (!(nbhd.radius > Rational(0))) throw QueryError("hyperspace ball radius must be positive");
    if (!(delta > Rational(0))) throw QueryError("hyperspace delta must be positive");

    const FiniteSubset& a = nbhd.center;
    const std::size_t k = a.size();
    const Rational shrink = Rational(1) - Rational(1, 1LL << params.shrink_bits);
    const Rational eps = nbhd.radius * shrink;

    std::vector<Interval> balls;
    balls.reserve(k);
    for (const Rational& x : a.points())
        balls.push_back({max(Rational(0), x - eps), min(Rational(1), x + eps)});

    // incrementally tracked exact images of the per-point balls, with the
    // full history kept for backward witness extraction
    std::vector<std::vector<IntervalUnion>> ball_histories;
    for (const Interval& b : balls)
        ball_histories.push_back({IntervalUnion::interval(b.lo, b.hi)});
    std::vector<Rational> fx(a.points().begin(), a.points().end());

    Rng rng(params.seed);
    HyperSensitivityResult result{TimeSet(horizon), {}};

    for (long n = 1; n <= horizon; ++n) {
        const PLMap& f = schedule.map_at(static_cast<std::size_t>(n));
        for (auto& history : ball_histories) history.push_back(f.image(history.back()));
        for (Rational& v : fx) v = f.eval(v);

        FiniteSubset image_a = induced_image(schedule, a, static_cast<std::size_t>(n));

        auto certify = [&](const FiniteSubset& candidate) {
            if (!(hausdorff_distance(a, candidate) < nbhd.radius)) return false;
            FiniteSubset image_c = induced_image(schedule, candidate, static_cast<std::size_t>(n));
            Rational sep = hausdorff_distance(image_a, image_c);
            if (sep > delta) {
                result.certified.insert(n);
                result.witnesses.push_back({n, candidate, sep});
                return true;
            }
            return false;
        };

        // Exact separations achievable from each point's ball at this time.
        std::vector<Rational> seps(k);
        std::vector<Rational> targets(k);
        Rational best_sep(0);
        for (std::size_t i = 0; i < k; ++i) {
            Rational lo = ball_histories[i].back().min_lo();
            Rational hi = ball_histories[i].back().max_hi();
            if ((fx[i] - lo).abs() >= (hi - fx[i]).abs()) {
                seps[i] = (fx[i] - lo).abs();
                targets[i] = lo;
            } else {
                seps[i] = (hi - fx[i]).abs();
                targets[i] = hi;
            }
            best_sep = max(best_sep, seps[i]);
        }

        bool certified = false;
        if (best_sep > delta) {
            // route (a): exact extreme-target witnesses per point
            std::vector<Rational> ys(k);
            for (std::size_t i = 0; i < k; ++i) {
                ys[i] = seps[i] > Rational(0)
                            ? backward_point(schedule, ball_histories[i],
                                             static_cast<std::size_t>(n), targets[i], 1)
                            : a.points()[i];
            }
            certified = certify(FiniteSubset(ys));
            if (!certified) {
                Rational min_sep = seps[0];
                for (const Rational& s : seps) min_sep = min(min_sep, s);
                const Rational delta0 = delta * Rational(2);
                if (min_sep > delta0) {
                    certified = certify(witness_partner(schedule, a, ys, static_cast<std::size_t>(n), delta0));
                }
            }
        }

        // route (b): random Hausdorff-ball samples
        for (std::size_t s = 0; !certified && s < params.samples_per_time; ++s) {
            auto samples = sample_hausdorff_ball(nbhd, 1, rng.child(static_cast<std::uint64_t>(n) * 131 + s).next());
            certified = certify(samples.front());
        }
    }
    return result;
}

}  // namespace ndslab
