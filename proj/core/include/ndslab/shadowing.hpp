#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ndslab/hyperspace.hpp"
#include "ndslab/interval_union.hpp"
#include "ndslab/pl_map.hpp"
#include "ndslab/rational.hpp"

namespace ndslab {

/// delta-pseudo-orbit x_0..x_m: |f_i(x_{i-1}) - x_i| < delta for 1 <= i <= m.
struct PseudoOrbit {
    std::vector<Rational> points;
    Rational delta;

    std::size_t length() const { return points.size() - 1; }
    PseudoOrbit prefix(std::size_t m) const;
};

/// delta-pseudo-orbit in the hyperspace of finite subsets:
/// d_H(f_i(A_{i-1}), A_i) < delta for 1 <= i <= m.
struct HyperPseudoOrbit {
    std::vector<FiniteSubset> sets;
    Rational delta;

    std::size_t length() const { return sets.size() - 1; }
};

struct StepViolation {
    std::size_t index;  // offending step i
    Rational gap;       // exact |f_i(x_{i-1}) - x_i|
};

struct ValidationResult {
    bool valid = false;
    std::vector<StepViolation> violations;
};

ValidationResult validate_pseudo_orbit(const MapSchedule& schedule,
                                       const std::vector<Rational>& points, const Rational& delta);

ValidationResult validate_hyper_pseudo_orbit(const MapSchedule& schedule,
                                             const std::vector<FiniteSubset>& sets,
                                             const Rational& delta);

/// x_i = clamp(f_i(x_{i-1}) + eta_i) with |eta_i| < delta, deterministic in
/// the seed. Adversarial mode biases steps toward breakpoints of the next
/// map, where tracing is hardest.
PseudoOrbit perturbed_orbit(const MapSchedule& schedule, const Rational& x0, const Rational& delta,
                            std::size_t m, std::uint64_t seed, bool adversarial = false);

/// Exact set of initial points whose orbits stay within epsilon of every
/// pseudo-orbit point, with the strictness margin (largest rho, to
/// resolution 2^-20, such that the carrier at epsilon - rho is nonempty).
struct TracerSet {
    IntervalUnion carrier;
    Rational epsilon;
    Rational margin;  // 0 means only the non-strict bound is certified
};

TracerSet tracer_set(const MapSchedule& schedule, const PseudoOrbit& po, const Rational& epsilon);

/// Carrier only, no margin search; cheap form for bulk verdicts.
IntervalUnion tracer_carrier(const MapSchedule& schedule, const std::vector<Rational>& points,
                             const Rational& epsilon);

/// Strictly traced: the carrier is still nonempty after shrinking epsilon by
/// one margin grain (2^-20), so the strict Def-style bound is certified.
bool traced_strictly(const MapSchedule& schedule, const PseudoOrbit& po, const Rational& epsilon);

struct ShadowingFailure {
    std::size_t trial;
    PseudoOrbit orbit;
};

struct ShadowingReport {
    Rational epsilon;
    Rational delta;
    std::size_t length = 0;
    std::size_t trials = 0;
    std::size_t traced = 0;
    std::vector<ShadowingFailure> failures;
    /// Largest delta (bisected to resolution 2^-20) at which all generated
    /// trials trace at this epsilon.
    Rational modulus_estimate;
};

ShadowingReport finite_shadowing_check(const MapSchedule& schedule, const Rational& epsilon,
                                       const Rational& delta, std::size_t m, std::size_t trials,
                                       std::uint64_t seed);

struct NestedTracerReport {
    std::vector<std::size_t> lengths;
    std::vector<IntervalUnion> carriers;  // aligned with lengths
    bool nested = true;                   // carrier(m_{j+1}) subset of carrier(m_j), exact
    bool final_nonempty = false;
    std::optional<std::size_t> first_empty_length;
};

NestedTracerReport nested_tracer_limit(const MapSchedule& schedule, const PseudoOrbit& po,
                                       const std::vector<std::size_t>& lengths,
                                       const Rational& epsilon);

/// Decomposes a valid hyperspace pseudo-orbit into a finite family of base
/// pseudo-orbits: each lifted orbit is a valid delta-pseudo-orbit, its i-th
/// point lies in A_i, and the i-th points of the family jointly cover A_i.
std::vector<PseudoOrbit> lift_hyper_pseudo_orbit(const MapSchedule& schedule,
                                                 const HyperPseudoOrbit& hpo);

struct HyperTraceResult {
    std::optional<FiniteSubset> traced;          // none when some component is untraceable
    std::optional<std::size_t> failing_component;  // index into the lifted family
    Rational max_step_distance;                  // max_i d_H(f_1^i(B), A_i) when traced
};

/// Picks one tracer point per lifted orbit and assembles the finite set that
/// epsilon-shadows the hyperspace pseudo-orbit; verifies the Hausdorff bound
/// at every step.
HyperTraceResult hyper_trace_assemble(const MapSchedule& schedule, const HyperPseudoOrbit& hpo,
                                      const std::vector<PseudoOrbit>& lifted,
                                      const Rational& epsilon);

}  // namespace ndslab
