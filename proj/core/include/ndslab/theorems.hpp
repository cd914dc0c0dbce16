#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ndslab/report.hpp"

namespace ndslab {

/// Outcome of one finite-horizon evidence check. Checks exercise the
/// containments and constructions that are desk-checkable, not asymptotic
/// statements; a pass is evidence, never a proof.
struct TheoremCheckResult {
    std::string id;
    std::uint64_t seed = 0;
    std::size_t instances = 0;
    std::size_t violations = 0;
    std::string summary;
    std::vector<std::string> violation_details;  // reproduction data

    bool passed() const { return violations == 0; }
};

const std::vector<std::string>& theorem_ids();

TheoremCheckResult run_theorem_check(const std::string& id, std::uint64_t seed);

std::vector<TheoremCheckResult> verify_all_theorems(std::uint64_t seed);

Report theorem_report(const TheoremCheckResult& r);

}  // namespace ndslab
