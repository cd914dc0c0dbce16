#include <doctest.h>

#include "ndslab/analysis.hpp"
#include "ndslab/errors.hpp"
#include "ndslab/fixtures.hpp"
#include "ndslab/rng.hpp"

using namespace ndslab;

static Rational r(long long n, long long d = 1) { return Rational(n, d); }

static OpenInterval rand_iv(Rng& rng) {
    long lo = static_cast<long>(rng.index(61));
    long hi = lo + 2 + static_cast<long>(rng.index(static_cast<std::uint64_t>(64 - lo - 2) + 1));
    return {r(lo, 64), r(hi, 64)};
}

TEST_CASE("sensitivity time-set of the first folded fixture") {
    const MapSchedule& sched = fixture("example31").schedule;
    TimeSet s = sensitivity_timeset({sched, {OpenInterval{r(2, 5), r(1, 2)}}, r(1, 2), 64});
    CHECK(s == TimeSet::range(64, 3, 64));
}

TEST_CASE("sensitivity verdicts track the threshold exactly") {
    const MapSchedule& sched = fixture("example31").schedule;
    OpenInterval v{r(2, 5), r(1, 2)};
    // diameters run 2/5, 2/5, 4/5, 4/5, 1, 1, ...; a threshold of 2/5 is not
    // exceeded until n = 3, and a threshold of 1 never is
    CHECK(sensitivity_timeset({sched, {v}, r(2, 5), 64}) == TimeSet::range(64, 3, 64));
    CHECK(sensitivity_timeset({sched, {v}, r(1), 64}).empty());
    CHECK(sensitivity_timeset({sched, {v}, r(1, 3), 64}) == TimeSet::full(64));
}

TEST_CASE("identity schedule is never sensitive") {
    const MapSchedule& sched = fixture("identity").schedule;
    TimeSet s = sensitivity_timeset({sched, {OpenInterval{r(0), r(1)}}, r(1, 2), 16});
    CHECK(s == TimeSet::full(16));  // the full interval has diameter 1 > 1/2 at every step
    TimeSet small = sensitivity_timeset({sched, {OpenInterval{r(0), r(1, 4)}}, r(1, 2), 16});
    CHECK(small.empty());
}

TEST_CASE("hitting time-set of the tent map matches a fine grid") {
    const MapSchedule& sched = fixture("tent").schedule;
    Rng rng(41);
    for (int t = 0; t < 10; ++t) {
        OpenInterval u = rand_iv(rng);
        OpenInterval v = rand_iv(rng);
        TimeSet s = hitting_timeset({sched, u, v, 16});
        for (long n = 1; n <= 16; ++n) {
            // brute force: does any interior grid point of u land inside v?
            bool hit = false;
            for (int k = 1; k < 512 && !hit; ++k) {
                Rational x = u.lo + (u.hi - u.lo) * r(k, 512);
                if (v.contains(sched.orbit_point(x, static_cast<std::size_t>(n)))) hit = true;
            }
            if (hit) CHECK(s.contains(n));       // grid witnesses are sound
            if (!s.contains(n)) CHECK(!hit);     // exact "no" must have no witness
        }
    }
}

TEST_CASE("multi-sensitivity is the intersection of the parts") {
    const MapSchedule& sched = fixture("example32").schedule;
    std::vector<OpenInterval> vs{{r(1, 10), r(1, 5)}, {r(3, 5), r(7, 10)}};
    TimeSet multi = multi_sensitivity_timeset(sched, vs, r(2, 5), 20);
    TimeSet a = sensitivity_timeset({sched, {vs[0]}, r(2, 5), 20});
    TimeSet b = sensitivity_timeset({sched, {vs[1]}, r(2, 5), 20});
    CHECK(multi == a.intersect(b));
    CHECK(TimeSet::range(20, 5, 20).subset_of(multi));
    CHECK(!multi.empty());
}

TEST_CASE("the second fixture plateaus on the half-interval two-cycle") {
    const MapSchedule& sched = fixture("example32").schedule;
    for (const OpenInterval& v :
         {OpenInterval{r(1, 10), r(1, 5)}, OpenInterval{r(3, 5), r(7, 10)}}) {
        IntervalUnion u = IntervalUnion::interval(v.lo, v.hi);
        for (std::size_t n = 5; n <= 20; ++n) {
            IntervalUnion img = sched.image_at_time(u, n);
            CHECK(img.diameter() == r(1, 2));
            bool lower = img == IntervalUnion::interval(r(0), r(1, 2));
            bool upper = img == IntervalUnion::interval(r(1, 2), r(1));
            CHECK((lower || upper));
        }
    }
}

TEST_CASE("product sensitivity under the sum metric") {
    ProductSystem sys{fixture("example31").schedule, fixture("example32").schedule};
    CHECK(ProductSystem::distance(r(0), r(0), r(1, 4), r(1, 3)) == r(1, 4) + r(1, 3));
    Rng rng(42);
    for (int t = 0; t < 25; ++t) {
        OpenInterval u = rand_iv(rng);
        OpenInterval v = rand_iv(rng);
        Rational delta = rng.open_between(r(1, 16), r(3, 4));
        TimeSet np = product_sensitivity_timeset(sys, u, v, delta, 24);
        for (long n = 1; n <= 24; ++n) {
            Rational dx = sys.first
                              .image_at_time(IntervalUnion::interval(u.lo, u.hi),
                                             static_cast<std::size_t>(n))
                              .diameter();
            Rational dy = sys.second
                              .image_at_time(IntervalUnion::interval(v.lo, v.hi),
                                             static_cast<std::size_t>(n))
                              .diameter();
            CHECK(np.contains(n) == (dx + dy > delta));
        }
    }
}

TEST_CASE("vietoris hitting equals brute force on coarse instances") {
    const MapSchedule& sched = fixture("example31").schedule;
    Rng rng(43);
    for (int t = 0; t < 5; ++t) {
        VietorisBox bu{{rand_iv(rng), rand_iv(rng)}};
        VietorisBox bv{{rand_iv(rng), rand_iv(rng)}};
        TimeSet s = vietoris_hitting_timeset(sched, bu, bv, 8);
        for (long n = 1; n <= 8; ++n) {
            // grid feasibility: every source member must reach the target
            // union and every target member must be reached
            const int G = 256;
            bool feasible = true;
            for (const OpenInterval& ui : bu.opens) {
                bool reaches = false;
                for (int k = 1; k < G && !reaches; ++k) {
                    Rational x = ui.lo + (ui.hi - ui.lo) * r(k, G);
                    Rational y = sched.orbit_point(x, static_cast<std::size_t>(n));
                    for (const OpenInterval& vj : bv.opens)
                        if (vj.contains(y)) reaches = true;
                }
                if (!reaches) feasible = false;
            }
            for (const OpenInterval& vj : bv.opens) {
                bool reached = false;
                for (const OpenInterval& ui : bu.opens) {
                    for (int k = 1; k < G && !reached; ++k) {
                        Rational x = ui.lo + (ui.hi - ui.lo) * r(k, G);
                        if (vj.contains(sched.orbit_point(x, static_cast<std::size_t>(n))))
                            reached = true;
                    }
                }
                if (!reached) feasible = false;
            }
            // the grid can miss thin witnesses but can never invent one
            if (feasible) CHECK(s.contains(n));
        }
    }
}

TEST_CASE("vietoris analysis refuses constant pieces") {
    PLMap flat({r(0), r(1, 2), r(1)}, {r(1, 4), r(1, 4), r(1)});
    MapSchedule sched({flat});
    CHECK_THROWS_AS(vietoris_hitting_timeset(sched, {{OpenInterval{r(0), r(1, 2)}}},
                                             {{OpenInterval{r(0), r(1, 2)}}}, 4),
                    UnsupportedExactModeError);
}

TEST_CASE("backward point solving inverts the composition") {
    Rng rng(44);
    for (const char* name : {"example31", "example32", "tent"}) {
        const MapSchedule& sched = fixture(name).schedule;
        for (int t = 0; t < 10; ++t) {
            Rational lo = rng.unit(8);
            Rational hi = lo + (r(1) - lo) * rng.unit(8);
            if (lo == hi) continue;
            Interval dom{lo, hi};
            std::size_t n = 1 + rng.index(12);
            IntervalUnion img = sched.image_at_time(IntervalUnion::interval(lo, hi), n);
            Rational target = rng.between(img.min_lo(), img.max_hi(), 10);
            if (!img.contains(target)) continue;  // fell in a gap of the image
            Rational y = preimage_point(sched, dom, n, target);
            CHECK(dom.contains(y));
            CHECK(sched.orbit_point(y, n) == target);
        }
    }
}

TEST_CASE("point separation set of the singleton center") {
    const MapSchedule& sched = fixture("example31").schedule;
    TimeSet s = point_sensitivity_timeset(sched, r(9, 20), r(1, 20), r(1, 4), 64);
    CHECK(s == TimeSet::range(64, 3, 64));
    // best separation witness is exact
    PointWitness w = best_separation_witness(sched, r(9, 20),
                                             Interval{r(2, 5), r(1, 2)}, 3);
    CHECK(w.separation == (sched.orbit_point(r(9, 20), 3) - sched.orbit_point(w.y, 3)).abs());
    CHECK(w.separation > r(1, 4));
}

TEST_CASE("hyperspace sensitivity certificates verify exactly") {
    const MapSchedule& sched = fixture("example31").schedule;
    FiniteSubset center({r(1, 10), r(9, 20)});
    Rational eps(1, 20), delta(1, 4);
    HyperSensitivityResult res =
        hyperspace_sensitivity_timeset(sched, {center, eps}, delta, 32, {9, 8, 10});
    CHECK(!res.certified.empty());
    CHECK(res.witnesses.size() == static_cast<std::size_t>(res.certified.count()));
    for (const HyperWitness& w : res.witnesses) {
        CHECK(hausdorff_distance(center, w.witness) < eps);
        Rational sep = hausdorff_distance(
            induced_image(sched, center, static_cast<std::size_t>(w.time)),
            induced_image(sched, w.witness, static_cast<std::size_t>(w.time)));
        CHECK(sep == w.separation);
        CHECK(sep > delta);
    }
    // certified times land inside the union of per-point separation sets
    TimeSet envelope(32);
    for (const Rational& x : center.points())
        envelope = envelope.unite(point_sensitivity_timeset(sched, x, eps, delta, 32));
    CHECK(res.certified.subset_of(envelope));
}
