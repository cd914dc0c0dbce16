#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ndslab/interval_union.hpp"
#include "ndslab/pl_map.hpp"
#include "ndslab/rational.hpp"

namespace ndslab {

/// Nonempty finite set of rational points in [0,1]; the computable dense
/// slice of the hyperspace of compact subsets.
class FiniteSubset {
public:
    explicit FiniteSubset(std::vector<Rational> points);

    const std::vector<Rational>& points() const { return pts_; }
    std::size_t size() const { return pts_.size(); }
    bool contains(const Rational& x) const;

    FiniteSubset unite(const FiniteSubset& other) const;

    /// `{ points = ["0", "1/2", "1"] }`
    std::string to_record() const;
    static FiniteSubset parse_record(std::string_view text);

    std::string str() const;

    friend bool operator==(const FiniteSubset&, const FiniteSubset&) = default;

private:
    std::vector<Rational> pts_;  // sorted, distinct
};

/// Basic Vietoris open box <U_1, ..., U_k>: compacta inside the union of the
/// U_i that meet every U_i.
struct VietorisBox {
    std::vector<OpenInterval> opens;
};

/// Open Hausdorff ball B_{d_H}(center, radius).
struct HyperNeighborhood {
    FiniteSubset center;
    Rational radius;
};

/// Exact Hausdorff distance between finite subsets.
Rational hausdorff_distance(const FiniteSubset& a, const FiniteSubset& b);

/// Pointwise n-step image { f_1^n(x) : x in a }, deduplicated.
FiniteSubset induced_image(const MapSchedule& schedule, const FiniteSubset& a, std::size_t n);

/// Membership of `a` in the Vietoris box.
bool membership_vietoris(const FiniteSubset& a, const VietorisBox& box);

/// Deterministically samples `count` finite subsets with d_H to the center
/// strictly below the radius; every emitted sample is re-verified exactly.
std::vector<FiniteSubset> sample_hausdorff_ball(const HyperNeighborhood& nbhd, std::size_t count,
                                                std::uint64_t seed);

/// Builds the partner set C = {z_i} from per-point witnesses y_i that are
/// separated from x_i by more than delta0 at time n: z_i = y_i when
/// |f_1^n(x_1) - f_1^n(x_i)| <= delta0/2, else z_i = x_i. Guarantees
/// d_H(f_1^n(a), f_1^n(C)) > delta0/2.
/// Throws InvalidWitnessError when a witness violates the separation bound.
FiniteSubset witness_partner(const MapSchedule& schedule, const FiniteSubset& a,
                             const std::vector<Rational>& witnesses, std::size_t n,
                             const Rational& delta0);

}  // namespace ndslab
