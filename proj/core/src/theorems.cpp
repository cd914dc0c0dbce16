#include "ndslab/theorems.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "ndslab/analysis.hpp"
#include "ndslab/errors.hpp"
#include "ndslab/fixtures.hpp"
#include "ndslab/rng.hpp"
#include "ndslab/shadowing.hpp"
#include "ndslab/timeset.hpp"

namespace ndslab {

namespace {

struct Checker {
    TheoremCheckResult result;

    explicit Checker(std::string id, std::uint64_t seed) {
        result.id = std::move(id);
        result.seed = seed;
    }

    void instance(bool ok, const std::function<std::string()>& detail) {
        ++result.instances;
        if (!ok) {
            ++result.violations;
            if (result.violation_details.size() < 8) result.violation_details.push_back(detail());
        }
    }

    void instance(bool ok, const std::string& detail) {
        instance(ok, [&] { return detail; });
    }
};

OpenInterval random_interval(Rng& rng) {
    // endpoints on a 1/64 grid, width at least 1/32
    long lo = static_cast<long>(rng.index(61));
    long hi = lo + 2 + static_cast<long>(rng.index(static_cast<std::uint64_t>(64 - lo - 2) + 1));
    return {Rational(lo, 64), Rational(hi, 64)};
}

std::optional<long> max_gap(const TimeSet& s) { return gap_metrics(s).syndetic_bound; }

std::string ts_str(const TimeSet& s) { return s.run_length_encoded(); }

// Shared instance for the hyperspace sensitivity checks: the period-2 folded
// system, singleton center {9/20}, eps = 1/20, delta = 1/4, horizon 64.
struct HyperInstance {
    TimeSet base;
    HyperSensitivityResult hyper;
};

HyperInstance hyper_instance(std::uint64_t seed) {
    const MapSchedule& sched = fixture("example31").schedule;
    Rational x(9, 20), eps(1, 20), delta(1, 4);
    HyperInstance out{point_sensitivity_timeset(sched, x, eps, delta, 64),
                      hyperspace_sensitivity_timeset(sched, {FiniteSubset({x}), eps}, delta, 64,
                                                     {seed, 8, 10})};
    return out;
}

TheoremCheckResult check_lemma_2_1(std::uint64_t seed) {
    Checker c("lemma-2.1", seed);
    Rng rng(seed);
    for (int i = 0; i < 10000; ++i) {
        Rational a = rng.unit(12);
        Rational b = a + rng.open_between(Rational(0), Rational(1), 12);
        Rational d0 = rng.unit(12);
        Rational d = d0 + rng.open_between(Rational(0), Rational(1), 12);
        Rational L = max(b - a, d - d0);
        bool ok = min(b, d) - min(a, d0) <= L;
        c.instance(ok, [&] {
            return "a=" + a.str() + " b=" + b.str() + " c=" + d0.str() + " d=" + d.str();
        });
    }
    c.result.summary = "min-comparison bound on 10000 random interval pairs";
    return c.result;
}

TheoremCheckResult check_thm_3_1(std::uint64_t seed) {
    Checker c("thm-3.1", seed);
    HyperInstance h = hyper_instance(seed);
    c.instance(h.hyper.certified.subset_of(h.base),
               "certified hyperspace set " + ts_str(h.hyper.certified) +
                   " not inside base point set " + ts_str(h.base));
    auto gh = max_gap(h.hyper.certified);
    auto gb = max_gap(h.base);
    c.instance(gh.has_value() && gb.has_value() && *gh >= *gb,
               "gap transfer failed: hyper bound " + (gh ? std::to_string(*gh) : "none") +
                   ", base bound " + (gb ? std::to_string(*gb) : "none"));
    c.result.summary = "hyperspace certificate inside base separation set; gap bound transfers";
    return c.result;
}

TheoremCheckResult check_thm_3_2(std::uint64_t seed) {
    Checker c("thm-3.2", seed);
    Rng rng(seed);
    ProductSystem sys{fixture("example31").schedule, fixture("example32").schedule};
    for (int i = 0; i < 20; ++i) {
        OpenInterval u = random_interval(rng);
        OpenInterval v = random_interval(rng);
        Rational delta = rng.open_between(Rational(1, 8), Rational(3, 4));
        TimeSet nu = sensitivity_timeset({sys.first, {u}, delta, 32});
        TimeSet nv = sensitivity_timeset({sys.second, {v}, delta, 32});
        TimeSet np = product_sensitivity_timeset(sys, u, v, delta, 32);
        TimeSet uni = nu.unite(nv);
        bool ok = uni.subset_of(np);
        if (ok) {
            auto gp = max_gap(np);
            auto gu = max_gap(uni);
            if (gu) ok = gp.has_value() && *gp <= *gu;
        }
        c.instance(ok, [&] {
            return "u=" + u.lo.str() + ".." + u.hi.str() + " v=" + v.lo.str() + ".." + v.hi.str() +
                   " delta=" + delta.str() + " union=" + ts_str(uni) + " product=" + ts_str(np);
        });
    }
    c.result.summary = "factor sensitivity times inject into the product; gaps do not grow";
    return c.result;
}

TheoremCheckResult check_thm_3_3(std::uint64_t seed) {
    Checker c("thm-3.3", seed);
    Rng rng(seed);
    const MapSchedule& sched = fixture("example31").schedule;
    for (int i = 0; i < 20; ++i) {
        std::size_t k = 2 + rng.index(2);
        std::vector<OpenInterval> vs;
        for (std::size_t j = 0; j < k; ++j) vs.push_back(random_interval(rng));
        Rational delta = rng.open_between(Rational(1, 8), Rational(1, 2));
        TimeSet multi = multi_sensitivity_timeset(sched, vs, delta, 32);
        // independent evaluation: intersect per-interval sets computed one by one
        TimeSet expect = TimeSet::full(32);
        for (const OpenInterval& v : vs)
            expect = expect.intersect(sensitivity_timeset({sched, {v}, delta, 32}));
        bool ok = multi == expect;
        // witness transfer: each shared time is a sensitivity time of every part
        for (long n : multi.members()) {
            for (const OpenInterval& v : vs) {
                IntervalUnion img = sched.image_at_time(
                    IntervalUnion::interval(v.lo, v.hi), static_cast<std::size_t>(n));
                if (!(img.diameter() > delta)) ok = false;
            }
        }
        c.instance(ok, [&] { return "delta=" + delta.str() + " multi=" + ts_str(multi); });
    }
    c.result.summary = "shared sensitivity times match the intersection, witnessed per interval";
    return c.result;
}

TheoremCheckResult check_thm_3_5(std::uint64_t seed) {
    Checker c("thm-3.5", seed);
    HyperInstance h = hyper_instance(seed);
    Rational dh = upper_density_profile(h.hyper.certified).estimate;
    Rational db = upper_density_profile(h.base).estimate;
    c.instance(dh > Rational(0), "certified hyperspace set has zero density estimate");
    c.instance(db >= dh, "density transfer failed: base " + db.str() + " < hyper " + dh.str());
    c.result.summary = "positive density descends from the hyperspace certificate to the base";
    return c.result;
}

TheoremCheckResult check_thm_3_6(std::uint64_t seed) {
    Checker c("thm-3.6", seed);
    Rng rng(seed);
    ProductSystem sys{fixture("example31").schedule, fixture("example32").schedule};
    for (int i = 0; i < 100; ++i) {
        OpenInterval u = random_interval(rng);
        OpenInterval v = random_interval(rng);
        Rational delta = rng.open_between(Rational(1, 16), Rational(3, 4));
        Rational third = delta / Rational(3);
        TimeSet lower = sensitivity_timeset({sys.first, {u}, delta, 32})
                            .unite(sensitivity_timeset({sys.second, {v}, delta, 32}));
        TimeSet np = product_sensitivity_timeset(sys, u, v, delta, 32);
        TimeSet upper = sensitivity_timeset({sys.first, {u}, third, 32})
                            .unite(sensitivity_timeset({sys.second, {v}, third, 32}));
        bool ok = lower.subset_of(np) && np.subset_of(upper);
        c.instance(ok, [&] {
            return "u=" + u.lo.str() + ".." + u.hi.str() + " v=" + v.lo.str() + ".." + v.hi.str() +
                   " delta=" + delta.str() + " lower=" + ts_str(lower) + " product=" + ts_str(np) +
                   " upper=" + ts_str(upper);
        });
    }
    c.result.summary = "product sensitivity set sandwiched between factor unions at delta and delta/3";
    return c.result;
}

TheoremCheckResult check_thm_3_7(std::uint64_t seed) {
    Checker c("thm-3.7", seed);
    HyperInstance h = hyper_instance(seed);
    GapMetrics gh = gap_metrics(h.hyper.certified);
    GapMetrics gb = gap_metrics(h.base);
    c.instance(gb.longest_run >= gh.longest_run,
               "run transfer failed: base run " + std::to_string(gb.longest_run) + " < hyper run " +
                   std::to_string(gh.longest_run));
    for (long k : {2L, 4L, 8L}) {
        auto th = thickly_syndetic_bound(h.hyper.certified, k);
        if (!th) continue;
        auto tb = thickly_syndetic_bound(h.base, k);
        c.instance(tb.has_value() && *tb <= *th,
                   "window-" + std::to_string(k) + " bound transfer failed");
    }
    c.result.summary = "long runs and window-start bounds descend to the base set";
    return c.result;
}

TheoremCheckResult check_thm_3_9(std::uint64_t seed) {
    Checker c("thm-3.9", seed);
    Rng rng(seed);
    const MapSchedule& sched = fixture("example31").schedule;
    for (int i = 0; i < 30; ++i) {
        OpenInterval u = random_interval(rng);
        OpenInterval v = random_interval(rng);
        TimeSet nviet = vietoris_hitting_timeset(sched, {{u}}, {{v}}, 32);
        TimeSet nbase = hitting_timeset({sched, u, v, 32});
        bool ok = nviet == nbase;
        if (ok) {
            auto gv = max_gap(nviet);
            if (gv) {
                auto gb = max_gap(nbase);
                ok = gb.has_value() && *gb <= *gv;
            }
        }
        c.instance(ok, [&] {
            return "u=" + u.lo.str() + ".." + u.hi.str() + " v=" + v.lo.str() + ".." + v.hi.str() +
                   " vietoris=" + ts_str(nviet) + " base=" + ts_str(nbase);
        });
    }
    c.result.summary = "single-box hyperspace hitting times equal base hitting times; gaps transfer";
    return c.result;
}

TheoremCheckResult check_thm_3_10(std::uint64_t seed) {
    Checker c("thm-3.10", seed);
    Rng rng(seed);
    const MapSchedule& sched = fixture("example31").schedule;
    for (int i = 0; i < 30; ++i) {
        OpenInterval u = random_interval(rng);
        OpenInterval v = random_interval(rng);
        TimeSet nviet = vietoris_hitting_timeset(sched, {{u}}, {{v}}, 32);
        TimeSet nbase = hitting_timeset({sched, u, v, 32});
        Rational dv = upper_density_profile(nviet).estimate;
        Rational db = upper_density_profile(nbase).estimate;
        bool ok = nviet.subset_of(nbase) && db >= dv;
        c.instance(ok, [&] {
            return "u=" + u.lo.str() + ".." + u.hi.str() + " v=" + v.lo.str() + ".." + v.hi.str() +
                   " densities " + dv.str() + " vs " + db.str();
        });
    }
    c.result.summary = "hitting density of the induced system never exceeds the base density";
    return c.result;
}

TheoremCheckResult check_thm_4_1(std::uint64_t seed) {
    Checker c("thm-4.1", seed);
    Rng rng(seed);
    const MapSchedule& sched = fixture("example32").schedule;
    Rational delta(1, 50), eps(1, 20);
    for (int t = 0; t < 20; ++t) {
        Rng trial = rng.child(static_cast<std::uint64_t>(t));
        Rational x0 = trial.unit(12);
        PseudoOrbit po = perturbed_orbit(sched, x0, delta, 10,
                                         trial.next(), t % 2 == 1);
        std::vector<FiniteSubset> sets;
        for (const Rational& p : po.points) sets.push_back(FiniteSubset({p}));
        HyperPseudoOrbit hpo{sets, delta};
        std::vector<PseudoOrbit> lifted = lift_hyper_pseudo_orbit(sched, hpo);
        bool ok = lifted.size() == 1 && lifted[0].points == po.points;
        IntervalUnion base_carrier = tracer_carrier(sched, po.points, eps);
        if (ok && !base_carrier.empty()) {
            IntervalUnion lift_carrier = tracer_carrier(sched, lifted[0].points, eps);
            ok = lift_carrier == base_carrier;
            if (ok) {
                HyperTraceResult tr = hyper_trace_assemble(sched, hpo, lifted, eps);
                ok = tr.traced.has_value() && tr.traced->size() == 1 &&
                     base_carrier.contains(tr.traced->points()[0]) &&
                     tr.max_step_distance <= eps;
            }
        }
        c.instance(ok, [&] { return "trial " + std::to_string(t) + " x0=" + x0.str(); });
    }
    c.result.summary = "singleton embedding: hyperspace tracing collapses to the base tracer set";
    return c.result;
}

// Random valid hyperspace pseudo-orbit: per step, perturb each image point by
// less than delta/2 and occasionally add an extra nearby point.
HyperPseudoOrbit random_hpo(const MapSchedule& sched, Rng& rng, const Rational& delta,
                            std::size_t m, std::size_t max_size) {
    std::vector<Rational> start;
    std::size_t k = 1 + rng.index(max_size);
    for (std::size_t i = 0; i < k; ++i) start.push_back(rng.unit(10));
    std::vector<FiniteSubset> sets{FiniteSubset(start)};
    Rational half = delta / Rational(2);
    auto clamp01 = [](const Rational& x) {
        return max(Rational(0), min(Rational(1), x));
    };
    for (std::size_t i = 1; i <= m; ++i) {
        std::vector<Rational> next;
        for (const Rational& a : sets.back().points()) {
            Rational fa = sched.map_at(i).eval(a);
            Rational eta = rng.open_between(-half, half, 12);
            next.push_back(clamp01(fa + eta));
        }
        if (next.size() < max_size && rng.index(3) == 0) {
            Rational base = sched.map_at(i).eval(sets.back().points()[rng.index(sets.back().size())]);
            next.push_back(clamp01(base + rng.open_between(-half, half, 12)));
        }
        sets.push_back(FiniteSubset(next));
    }
    return {sets, delta};
}

TheoremCheckResult check_thm_4_2(std::uint64_t seed) {
    Checker c("thm-4.2", seed);
    Rng rng(seed);
    const MapSchedule& sched = fixture("example31").schedule;
    Rational delta(1, 40), eps(1, 10);
    for (int t = 0; t < 100; ++t) {
        Rng trial = rng.child(static_cast<std::uint64_t>(t));
        std::size_t m = 2 + trial.index(9);  // 2..10
        HyperPseudoOrbit hpo = random_hpo(sched, trial, delta, m, 5);
        bool ok = validate_hyper_pseudo_orbit(sched, hpo.sets, hpo.delta).valid;
        std::vector<PseudoOrbit> lifted;
        if (ok) {
            lifted = lift_hyper_pseudo_orbit(sched, hpo);
            for (const PseudoOrbit& po : lifted) {
                if (!validate_pseudo_orbit(sched, po.points, hpo.delta).valid) ok = false;
                for (std::size_t i = 0; i < po.points.size(); ++i)
                    if (!hpo.sets[i].contains(po.points[i])) ok = false;
            }
            for (std::size_t i = 0; ok && i <= m; ++i) {
                std::vector<Rational> column;
                for (const PseudoOrbit& po : lifted) column.push_back(po.points[i]);
                if (FiniteSubset(column) != hpo.sets[i]) ok = false;
            }
        }
        if (ok) {
            bool all_traced = true;
            for (const PseudoOrbit& po : lifted)
                if (tracer_carrier(sched, po.points, eps).empty()) all_traced = false;
            if (all_traced) {
                HyperTraceResult tr = hyper_trace_assemble(sched, hpo, lifted, eps);
                ok = tr.traced.has_value() && tr.max_step_distance <= eps;
            }
        }
        c.instance(ok, [&] { return "trial " + std::to_string(t) + " m=" + std::to_string(m); });
    }
    c.result.summary = "lifting yields valid covering families; traced families assemble within eps";
    return c.result;
}

TheoremCheckResult check_lemma_4_2(std::uint64_t seed) {
    Checker c("lemma-4.2", seed);
    Rng rng(seed);
    const MapSchedule& sched = fixture("example32").schedule;
    Rational delta(1, 50), eps(1, 10);
    std::vector<std::size_t> lengths{2, 4, 8, 16};
    for (int t = 0; t < 10; ++t) {
        Rng trial = rng.child(static_cast<std::uint64_t>(t));
        PseudoOrbit po = perturbed_orbit(sched, trial.unit(12), delta, 16,
                                         trial.next(), t % 2 == 1);
        NestedTracerReport rep = nested_tracer_limit(sched, po, lengths, eps);
        c.instance(rep.nested, [&] { return "trial " + std::to_string(t) + ": inclusion broke"; });
    }
    c.result.summary = "tracer carriers of pseudo-orbit prefixes are exactly nested";
    return c.result;
}

// Tests one modulus candidate for the combined base + lifted tracing check.
bool combined_traced(const MapSchedule& sched, const Rational& eps, const Rational& delta,
                     std::size_t m, std::size_t trials, Rng& base_rng) {
    std::vector<PseudoOrbit> orbits;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng trial = base_rng.child(t);
        PseudoOrbit po = perturbed_orbit(sched, trial.unit(12), delta, m,
                                         trial.next(), t % 2 == 1);
        if (tracer_carrier(sched, po.points, eps).empty()) return false;
        orbits.push_back(std::move(po));
    }
    for (std::size_t t = 0; t + 1 < orbits.size(); t += 2) {
        std::vector<FiniteSubset> sets;
        for (std::size_t i = 0; i <= m; ++i)
            sets.push_back(FiniteSubset({orbits[t].points[i], orbits[t + 1].points[i]}));
        HyperPseudoOrbit hpo{sets, delta};
        std::vector<PseudoOrbit> lifted = lift_hyper_pseudo_orbit(sched, hpo);
        for (const PseudoOrbit& po : lifted)
            if (tracer_carrier(sched, po.points, eps).empty()) return false;
        HyperTraceResult tr = hyper_trace_assemble(sched, hpo, lifted, eps);
        if (!tr.traced || tr.max_step_distance > eps) return false;
    }
    return true;
}

TheoremCheckResult check_cor_4_1(std::uint64_t seed) {
    Checker c("cor-4.1", seed);
    const MapSchedule& sched = fixture("example32").schedule;
    Rational eps(1, 20);
    std::size_t m = 12, trials = 200;
    // bisect the largest delta at which every base pseudo-orbit and every
    // lifted hyperspace pseudo-orbit built from them traces at eps
    Rational lo(0), hi = eps;
    Rational grain = Rational(1, 1 << 20);
    Rng rng(seed);
    for (int iter = 0; iter < 24 && hi - lo > grain; ++iter) {
        Rational mid = (lo + hi) / Rational(2);
        Rng probe = rng.child(static_cast<std::uint64_t>(iter) + 1000);
        if (combined_traced(sched, eps, mid, m, trials, probe)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // confirm on a fresh trial family; back off if the fresh family exposes
    // a harder instance than the bisection families did
    bool ok = false;
    for (int attempt = 0; attempt < 16 && lo > grain; ++attempt) {
        Rng verify = rng.child(999 + static_cast<std::uint64_t>(attempt));
        if (combined_traced(sched, eps, lo, m, trials, verify)) {
            ok = true;
            break;
        }
        lo = lo / Rational(2);
    }
    c.instance(ok, "no positive modulus certified at eps=" + eps.str());
    c.result.summary = "modulus " + lo.str() + " traces all base and lifted trials at eps " +
                       eps.str();
    return c.result;
}

using CheckFn = TheoremCheckResult (*)(std::uint64_t);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> reg = {
        {"lemma-2.1", check_lemma_2_1}, {"thm-3.1", check_thm_3_1},
        {"thm-3.2", check_thm_3_2},     {"thm-3.3", check_thm_3_3},
        {"thm-3.5", check_thm_3_5},     {"thm-3.6", check_thm_3_6},
        {"thm-3.7", check_thm_3_7},     {"thm-3.9", check_thm_3_9},
        {"thm-3.10", check_thm_3_10},   {"thm-4.1", check_thm_4_1},
        {"thm-4.2", check_thm_4_2},     {"lemma-4.2", check_lemma_4_2},
        {"cor-4.1", check_cor_4_1},
    };
    return reg;
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& [id, fn] : registry()) out.push_back(id);
        return out;
    }();
    return ids;
}

TheoremCheckResult run_theorem_check(const std::string& id, std::uint64_t seed) {
    for (const auto& [name, fn] : registry())
        if (name == id) return fn(seed);
    throw QueryError("unknown theorem check: " + id);
}

std::vector<TheoremCheckResult> verify_all_theorems(std::uint64_t seed) {
    std::vector<TheoremCheckResult> out;
    for (const auto& [id, fn] : registry()) out.push_back(fn(seed));
    return out;
}

Report theorem_report(const TheoremCheckResult& r) {
    Report rep;
    rep.kind = "theorem-check";
    rep.add_quoted("id", r.id);
    rep.add("seed", std::to_string(r.seed));
    rep.add("instances", std::to_string(r.instances));
    rep.add("violations", std::to_string(r.violations));
    rep.add("status", r.passed() ? "\"evidence-ok\"" : "\"violated\"");
    rep.add_quoted("summary", r.summary);
    for (std::size_t i = 0; i < r.violation_details.size(); ++i)
        rep.add_quoted("detail_" + std::to_string(i), r.violation_details[i]);
    return rep;
}

}  // namespace ndslab
