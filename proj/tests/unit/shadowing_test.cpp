#include <doctest.h>

#include "ndslab/fixtures.hpp"
#include "ndslab/rng.hpp"
#include "ndslab/shadowing.hpp"

using namespace ndslab;

static Rational r(long long n, long long d = 1) { return Rational(n, d); }

static std::vector<Rational> true_orbit(const MapSchedule& sched, Rational x, std::size_t m) {
    std::vector<Rational> pts{x};
    for (std::size_t i = 1; i <= m; ++i) pts.push_back(sched.orbit_point(x, i));
    return pts;
}

TEST_CASE("validation accepts fixed points and true orbits") {
    const MapSchedule& s32 = fixture("example32").schedule;
    // 1/2 is fixed under both maps of the schedule
    CHECK(validate_pseudo_orbit(s32, {r(1, 2), r(1, 2), r(1, 2), r(1, 2)}, r(1, 1000)).valid);
    Rng rng(51);
    for (int t = 0; t < 10; ++t) {
        auto orbit = true_orbit(s32, rng.unit(10), 8);
        CHECK(validate_pseudo_orbit(s32, orbit, r(1, 1000000)).valid);
    }
}

TEST_CASE("validation reports exact step gaps") {
    const MapSchedule& s31 = fixture("example31").schedule;
    // f_1(0) = 1/2, so the jump to 1 misses by exactly 1/2
    ValidationResult v = validate_pseudo_orbit(s31, {r(0), r(1)}, r(1, 10));
    CHECK(!v.valid);
    REQUIRE(v.violations.size() == 1);
    CHECK(v.violations[0].index == 1);
    CHECK(v.violations[0].gap == r(1, 2));
    // the bound is strict: a gap equal to delta is a violation
    CHECK(!validate_pseudo_orbit(s31, {r(0), r(1)}, r(1, 2)).valid);
    CHECK(validate_pseudo_orbit(s31, {r(0), r(1)}, r(501, 1000)).valid);
}

TEST_CASE("generated pseudo-orbits always validate and repeat with the seed") {
    for (const char* name : {"example31", "example32"}) {
        const MapSchedule& sched = fixture(name).schedule;
        Rng rng(52);
        for (int t = 0; t < 50; ++t) {
            Rational delta = rng.open_between(r(1, 500), r(1, 10));
            Rational x0 = rng.unit(10);
            bool adv = t % 2 == 0;
            PseudoOrbit po = perturbed_orbit(sched, x0, delta, 10, 1000 + t, adv);
            CHECK(po.points.size() == 11);
            CHECK(validate_pseudo_orbit(sched, po.points, delta).valid);
            PseudoOrbit again = perturbed_orbit(sched, x0, delta, 10, 1000 + t, adv);
            CHECK(again.points == po.points);
        }
    }
}

TEST_CASE("tiny perturbations stay near the true orbit") {
    const MapSchedule& sched = fixture("example32").schedule;
    PseudoOrbit po = perturbed_orbit(sched, r(1, 2), r(1, 1000000), 8, 7);
    auto orbit = true_orbit(sched, r(1, 2), 8);
    // slopes are at most 2, so deviations compound by at most 2^i * m * delta
    for (std::size_t i = 0; i < po.points.size(); ++i)
        CHECK((po.points[i] - orbit[i]).abs() < r(1, 1000));
}

TEST_CASE("tracer set of the fixed-point pseudo-orbit") {
    const MapSchedule& sched = fixture("example32").schedule;
    PseudoOrbit po{{r(1, 2), r(1, 2), r(1, 2)}, r(1, 100)};
    TracerSet ts = tracer_set(sched, po, r(1, 10));
    REQUIRE(ts.carrier.size() == 1);
    CHECK(ts.carrier.components()[0] == Interval{r(9, 20), r(11, 20)});
    CHECK(ts.margin > r(0));
    CHECK(traced_strictly(sched, po, r(1, 10)));
}

TEST_CASE("a true orbit traces itself") {
    const MapSchedule& sched = fixture("example31").schedule;
    Rng rng(53);
    for (int t = 0; t < 10; ++t) {
        Rational x0 = rng.unit(10);
        PseudoOrbit po{true_orbit(sched, x0, 10), r(1, 100)};
        IntervalUnion carrier = tracer_carrier(sched, po.points, r(1, 50));
        CHECK(carrier.contains(x0));
    }
}

TEST_CASE("an incompatible pseudo-orbit has an empty tracer") {
    const MapSchedule& sched = fixture("example31").schedule;
    // alternating endpoints cannot be followed within 1/1000
    std::vector<Rational> points{r(0), r(1), r(0), r(1), r(0)};
    CHECK(tracer_carrier(sched, points, r(1, 1000)).empty());
}

TEST_CASE("tracer carrier matches a fine grid search") {
    Rng rng(54);
    const Rational grid_step(1, 1 << 11);
    for (const char* name : {"example31", "example32"}) {
        const MapSchedule& sched = fixture(name).schedule;
        for (int t = 0; t < 8; ++t) {
            Rational delta = rng.open_between(r(1, 200), r(1, 20));
            PseudoOrbit po = perturbed_orbit(sched, rng.unit(10), delta, 8, 700 + t, t % 2 == 0);
            Rational eps = rng.open_between(r(1, 40), r(1, 8));
            IntervalUnion carrier = tracer_carrier(sched, po.points, eps);
            for (int k = 0; k <= (1 << 11); ++k) {
                Rational y = r(k, 1 << 11);
                bool inside = true;
                Rational z = y;
                for (std::size_t i = 0; i < po.points.size() && inside; ++i) {
                    if (i > 0) z = sched.map_at(i).eval(z);
                    if ((z - po.points[i]).abs() > eps) inside = false;
                }
                if (inside != carrier.contains(y)) {
                    // mismatches may only happen within one grid cell of a
                    // carrier component boundary
                    bool near_boundary = false;
                    for (const Interval& c : carrier.components()) {
                        if ((y - c.lo).abs() <= grid_step || (y - c.hi).abs() <= grid_step)
                            near_boundary = true;
                    }
                    CHECK(near_boundary);
                }
            }
        }
    }
}

TEST_CASE("tracer carriers grow with epsilon") {
    const MapSchedule& sched = fixture("example32").schedule;
    Rng rng(55);
    for (int t = 0; t < 10; ++t) {
        PseudoOrbit po = perturbed_orbit(sched, rng.unit(10), r(1, 100), 8, 900 + t);
        IntervalUnion small = tracer_carrier(sched, po.points, r(1, 30));
        IntervalUnion large = tracer_carrier(sched, po.points, r(1, 10));
        CHECK(small.subset_of(large));
    }
}

TEST_CASE("finite shadowing with zero perturbation always traces") {
    const MapSchedule& sched = fixture("example31").schedule;
    ShadowingReport rep = finite_shadowing_check(sched, r(1, 20), r(0), 10, 40, 11);
    CHECK(rep.traced == rep.trials);
    CHECK(rep.failures.empty());
}

TEST_CASE("the bisected modulus really traces all its trials") {
    const MapSchedule& sched = fixture("example32").schedule;
    ShadowingReport rep = finite_shadowing_check(sched, r(1, 20), r(1, 100), 12, 60, 12);
    CHECK(rep.modulus_estimate > r(0));
    ShadowingReport confirm =
        finite_shadowing_check(sched, r(1, 20), rep.modulus_estimate, 12, 60, 12);
    CHECK(confirm.traced == confirm.trials);
}

TEST_CASE("nested tracer prefixes of the fixed-point pseudo-orbit") {
    const MapSchedule& sched = fixture("example32").schedule;
    std::vector<Rational> pts(17, r(1, 2));
    PseudoOrbit po{pts, r(1, 100)};
    NestedTracerReport rep = nested_tracer_limit(sched, po, {2, 4, 8, 16}, r(1, 10));
    CHECK(rep.nested);
    CHECK(rep.final_nonempty);
    REQUIRE(rep.carriers.size() == 4);
    // the folded map has slope 2 at the fixed point and acts on odd steps
    // only, so a length-m prefix contracts the carrier by the accumulated
    // slope 2^ceil(m/2): half-widths 1/20, 1/40, 1/160, 1/2560
    CHECK(rep.carriers[0] == IntervalUnion::interval(r(9, 20), r(11, 20)));
    CHECK(rep.carriers[1] == IntervalUnion::interval(r(19, 40), r(21, 40)));
    CHECK(rep.carriers[2] == IntervalUnion::interval(r(79, 160), r(81, 160)));
    CHECK(rep.carriers[3] == IntervalUnion::interval(r(1279, 2560), r(1281, 2560)));
    // every carrier still surrounds the fixed point
    for (const IntervalUnion& c : rep.carriers) CHECK(c.contains(r(1, 2)));
}

TEST_CASE("nested tracer reports the first untraceable prefix") {
    const MapSchedule& sched = fixture("example31").schedule;
    std::vector<Rational> pts{r(0), r(1, 2), r(1, 2), r(1), r(0), r(1), r(0), r(1), r(0)};
    PseudoOrbit po{pts, r(1)};
    NestedTracerReport rep = nested_tracer_limit(sched, po, {2, 4, 8}, r(1, 1000));
    CHECK(rep.nested);
    CHECK(!rep.final_nonempty);
    CHECK(rep.first_empty_length.has_value());
}

TEST_CASE("lifting singleton hyperspace orbits is the identity") {
    const MapSchedule& sched = fixture("example32").schedule;
    PseudoOrbit po = perturbed_orbit(sched, r(1, 3), r(1, 50), 8, 77);
    std::vector<FiniteSubset> sets;
    for (const Rational& p : po.points) sets.push_back(FiniteSubset({p}));
    auto lifted = lift_hyper_pseudo_orbit(sched, {sets, r(1, 50)});
    REQUIRE(lifted.size() == 1);
    CHECK(lifted[0].points == po.points);
}

TEST_CASE("lifting a two-point terminal set covers every layer") {
    const MapSchedule& s32 = fixture("example32").schedule;
    // A_0 = {a, b}, A_1 = {c}: both a and b map within delta of c
    std::vector<FiniteSubset> sets{FiniteSubset({r(0), r(1, 2)}), FiniteSubset({r(1, 2)})};
    auto lifted = lift_hyper_pseudo_orbit(s32, {sets, r(1, 50)});
    REQUIRE(lifted.size() == 2);
    CHECK(lifted[0].points == std::vector<Rational>{r(0), r(1, 2)});
    CHECK(lifted[1].points == std::vector<Rational>{r(1, 2), r(1, 2)});
}

TEST_CASE("lifting rejects invalid hyperspace pseudo-orbits") {
    const MapSchedule& sched = fixture("example31").schedule;
    std::vector<FiniteSubset> sets{FiniteSubset({r(0)}), FiniteSubset({r(1)})};
    CHECK_THROWS(lift_hyper_pseudo_orbit(sched, {sets, r(1, 10)}));
}

TEST_CASE("assembled hyperspace traces respect the Hausdorff bound") {
    const MapSchedule& sched = fixture("example32").schedule;
    std::vector<FiniteSubset> sets;
    for (int i = 0; i <= 6; ++i) sets.push_back(FiniteSubset({r(1, 2)}));
    HyperPseudoOrbit hpo{sets, r(1, 100)};
    auto lifted = lift_hyper_pseudo_orbit(sched, hpo);
    HyperTraceResult tr = hyper_trace_assemble(sched, hpo, lifted, r(1, 10));
    REQUIRE(tr.traced.has_value());
    CHECK(tr.max_step_distance <= r(1, 10));
    CHECK(tr.traced->size() == 1);
    CHECK(Interval{r(9, 20), r(11, 20)}.contains(tr.traced->points()[0]));
}
