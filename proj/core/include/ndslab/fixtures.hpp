#pragma once

#include <string>
#include <vector>

#include "ndslab/pl_map.hpp"

namespace ndslab {

struct Fixture {
    std::string name;
    MapSchedule schedule;
    std::string description;
};

/// Built-in systems: example31, example32, identity, tent.
const std::vector<Fixture>& fixtures();

const Fixture& fixture(const std::string& name);

}  // namespace ndslab
