#include "ndslab/fixtures.hpp"

#include <stdexcept>

namespace ndslab {

namespace {

Rational r(long long n, long long d = 1) { return Rational(n, d); }

std::vector<Fixture> build_fixtures() {
    // folded three-piece map alternating with the identity
    PLMap fold31({r(0), r(1, 4), r(1, 2), r(1)}, {r(1, 2), r(0), r(1), r(0)});
    // tent-like map with an off-center fold, alternating with the identity
    PLMap fold32({r(0), r(1, 4), r(3, 4), r(1)}, {r(1, 2), r(1), r(0), r(1, 2)});
    PLMap id = PLMap::identity();
    PLMap tent({r(0), r(1, 2), r(1)}, {r(0), r(1), r(0)});

    std::vector<Fixture> out;
    out.push_back({"example31", MapSchedule({fold31, id}),
                   "period-2 schedule: three-piece folded map on odd steps, identity on even steps"});
    out.push_back({"example32", MapSchedule({fold32, id}),
                   "period-2 schedule: off-center folded map on odd steps, identity on even steps"});
    out.push_back({"identity", MapSchedule({id}), "identity map at every step"});
    out.push_back({"tent", MapSchedule({tent}), "classical tent map, autonomous (period 1)"});
    return out;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all = build_fixtures();
    return all;
}

const Fixture& fixture(const std::string& name) {
    for (const Fixture& f : fixtures()) {
        if (f.name == name) return f;
    }
    throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace ndslab
