#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ndslab/analysis.hpp"
#include "ndslab/hyperspace.hpp"
#include "ndslab/pl_map.hpp"
#include "ndslab/timeset.hpp"

namespace ndslab {

/// Validated run configuration; the union of everything the CLI verbs need.
struct RunConfig {
    std::optional<std::string> fixture_name;
    std::optional<MapSchedule> inline_maps;
    std::optional<std::string> second_fixture;  // product analyses

    std::string analysis;  // sensitivity | multi-sensitivity | transitivity |
                           // vietoris | product | hyperspace | shadowing | lift | theorems

    std::vector<OpenInterval> vs;
    std::optional<OpenInterval> u;
    std::optional<VietorisBox> box_u;
    std::optional<VietorisBox> box_v;
    std::optional<FiniteSubset> center;

    std::optional<Rational> delta;
    std::optional<Rational> epsilon;
    long horizon = 64;
    std::optional<std::uint64_t> seed;
    std::size_t trials = 100;
    std::size_t length = 12;

    Thresholds thresholds{Rational(1, 10), 8, 8};

    std::string format = "records";
    std::optional<std::string> out_path;
    std::optional<std::string> orbit_file;

    /// Resolves the schedule from the fixture name or inline maps.
    MapSchedule schedule() const;
    MapSchedule schedule_second() const;
};

RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& text);

OpenInterval parse_open_interval(const std::string& text);

}  // namespace ndslab
