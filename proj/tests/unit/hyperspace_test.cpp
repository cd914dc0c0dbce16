#include <doctest.h>

#include "ndslab/errors.hpp"
#include "ndslab/fixtures.hpp"
#include "ndslab/hyperspace.hpp"
#include "ndslab/rng.hpp"

using namespace ndslab;

static Rational r(long long n, long long d = 1) { return Rational(n, d); }

static FiniteSubset random_subset(Rng& rng) {
    std::vector<Rational> pts;
    std::size_t k = 1 + rng.index(6);
    for (std::size_t i = 0; i < k; ++i) pts.push_back(rng.unit(10));
    return FiniteSubset(std::move(pts));
}

TEST_CASE("finite subsets are sorted, deduplicated and validated") {
    FiniteSubset a({r(1, 2), r(0), r(1, 2), r(1)});
    CHECK(a.size() == 3);
    CHECK(a.points()[0] == r(0));
    CHECK(a.points()[2] == r(1));
    CHECK(a.contains(r(1, 2)));
    CHECK(!a.contains(r(1, 3)));
    CHECK_THROWS(FiniteSubset({}));
    CHECK_THROWS(FiniteSubset({r(3, 2)}));
}

TEST_CASE("hand-checked Hausdorff distances") {
    CHECK(hausdorff_distance(FiniteSubset({r(0)}), FiniteSubset({r(1)})) == r(1));
    CHECK(hausdorff_distance(FiniteSubset({r(0), r(1)}), FiniteSubset({r(1, 2)})) == r(1, 2));
    // directed distances differ: {0} -> {0,1} is 0, {0,1} -> {0} is 1
    CHECK(hausdorff_distance(FiniteSubset({r(0)}), FiniteSubset({r(0), r(1)})) == r(1));
    CHECK(hausdorff_distance(FiniteSubset({r(1, 4), r(3, 4)}),
                             FiniteSubset({r(1, 4), r(3, 4)})) == r(0));
    CHECK(hausdorff_distance(FiniteSubset({r(0), r(2, 5)}), FiniteSubset({r(1, 10), r(1, 2)})) ==
          r(1, 10));
}

TEST_CASE("metric axioms on random triples") {
    Rng rng(21);
    for (int t = 0; t < 100; ++t) {
        FiniteSubset a = random_subset(rng), b = random_subset(rng), c = random_subset(rng);
        Rational ab = hausdorff_distance(a, b);
        Rational ba = hausdorff_distance(b, a);
        Rational ac = hausdorff_distance(a, c);
        Rational cb = hausdorff_distance(c, b);
        CHECK(ab == ba);
        CHECK(ab >= r(0));
        CHECK((ab == r(0)) == (a == b));
        CHECK(ab <= ac + cb);
    }
}

TEST_CASE("induced image is the pointwise image") {
    const MapSchedule& sched = fixture("example31").schedule;
    FiniteSubset a({r(0), r(1, 4), r(1, 2)});
    FiniteSubset img = induced_image(sched, a, 1);
    CHECK(img == FiniteSubset({r(1, 2), r(0), r(1)}));
    // time 0 is the identity
    CHECK(induced_image(sched, a, 0) == a);
    // collapsing points deduplicate: 0 and 1/2 both land on 1/2 under the second map
    FiniteSubset b = induced_image(fixture("example32").schedule, FiniteSubset({r(0), r(1, 2)}), 1);
    CHECK(b == FiniteSubset({r(1, 2)}));
}

TEST_CASE("Vietoris box membership checks both directions") {
    VietorisBox box{{OpenInterval{r(0), r(1, 4)}, OpenInterval{r(1, 2), r(1)}}};
    CHECK(membership_vietoris(FiniteSubset({r(1, 8), r(3, 4)}), box));
    // misses the second member
    CHECK(!membership_vietoris(FiniteSubset({r(1, 8)}), box));
    // a point outside the union disqualifies
    CHECK(!membership_vietoris(FiniteSubset({r(1, 8), r(3, 8), r(3, 4)}), box));
    // boundary points are not inside the open box
    CHECK(!membership_vietoris(FiniteSubset({r(1, 4), r(3, 4)}), box));
}

TEST_CASE("sampled Hausdorff balls stay strictly inside the radius") {
    FiniteSubset center({r(1, 4), r(9, 20)});
    Rational eps(1, 20);
    auto samples = sample_hausdorff_ball({center, eps}, 25, 5);
    CHECK(samples.size() == 25);
    for (const FiniteSubset& s : samples) {
        CHECK(hausdorff_distance(center, s) < eps);
        // mandatory per-center points plus extras capped at 3x the center size
        CHECK(s.size() <= 4 * center.size());
    }
    // deterministic in the seed
    auto again = sample_hausdorff_ball({center, eps}, 25, 5);
    CHECK(again == samples);
    auto other = sample_hausdorff_ball({center, eps}, 25, 6);
    CHECK(other != samples);
}

TEST_CASE("witness partner construction separates the images") {
    const MapSchedule& sched = fixture("example31").schedule;
    // at n = 3 the orbit of 9/20 sits at 2/5 while 1/2 lands on 0
    FiniteSubset a({r(9, 20)});
    Rational delta0(1, 4);
    std::vector<Rational> witnesses{r(1, 2)};  // separation 2/5 > 1/4
    FiniteSubset c = witness_partner(sched, a, witnesses, 3, delta0);
    CHECK(c == FiniteSubset({r(1, 2)}));
    Rational sep = hausdorff_distance(induced_image(sched, a, 3), induced_image(sched, c, 3));
    CHECK(sep > delta0 / r(2));
}

TEST_CASE("witness partner rejects under-separated witnesses") {
    const MapSchedule& sched = fixture("example31").schedule;
    FiniteSubset a({r(9, 20)});
    // the point itself has separation 0
    CHECK_THROWS_AS(witness_partner(sched, a, {r(9, 20)}, 3, r(1, 4)), InvalidWitnessError);
    // misaligned witness list
    CHECK_THROWS(witness_partner(sched, a, {r(1, 2), r(0)}, 3, r(1, 4)));
}
