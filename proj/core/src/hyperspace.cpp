#include "ndslab/hyperspace.hpp"

#include <algorithm>
#include <stdexcept>

#include "ndslab/record.hpp"
#include "ndslab/rng.hpp"

namespace ndslab {

FiniteSubset::FiniteSubset(std::vector<Rational> points) : pts_(std::move(points)) {
    if (pts_.empty()) throw std::invalid_argument("finite subset must be nonempty");
    std::sort(pts_.begin(), pts_.end());
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
    for (const Rational& p : pts_) {
        if (p < Rational(0) || p > Rational(1))
            throw std::invalid_argument("finite-subset point outside [0,1]: " + p.str());
    }
}

bool FiniteSubset::contains(const Rational& x) const {
    return std::binary_search(pts_.begin(), pts_.end(), x);
}

FiniteSubset FiniteSubset::unite(const FiniteSubset& other) const {
    std::vector<Rational> all = pts_;
    all.insert(all.end(), other.pts_.begin(), other.pts_.end());
    return FiniteSubset(std::move(all));
}

std::string FiniteSubset::to_record() const {
    std::string s = "{ points = [";
    for (std::size_t i = 0; i < pts_.size(); ++i) {
        if (i) s += ", ";
        s += quote_string(pts_[i].str());
    }
    return s + "] }";
}

FiniteSubset FiniteSubset::parse_record(std::string_view text) {
    // accept both `{ points = [...] }` and `points { points = [...] }`
    std::string padded(text);
    std::size_t brace = padded.find('{');
    if (brace == std::string::npos) throw QueryError("finite-subset record missing '{'");
    if (padded.find_first_not_of(" \t\r\n") == brace) padded = "points " + padded.substr(brace);
    RecordValue rec = parse_record_text(padded);
    const RecordValue& lst = rec.at("points");
    if (lst.kind != RecordValue::Kind::List) throw QueryError("points must be a list");
    std::vector<Rational> pts;
    for (const RecordValue& e : lst.list) {
        if (e.kind == RecordValue::Kind::String) {
            pts.push_back(Rational::parse(e.text));
        } else if (e.kind == RecordValue::Kind::Integer) {
            pts.push_back(Rational(e.integer));
        } else {
            throw QueryError("points entries must be rational strings");
        }
    }
    return FiniteSubset(std::move(pts));
}

std::string FiniteSubset::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < pts_.size(); ++i) {
        if (i) s += ", ";
        s += pts_[i].str();
    }
    return s + "}";
}

namespace {

Rational directed_distance(const FiniteSubset& a, const FiniteSubset& b) {
    Rational worst(0);
    for (const Rational& x : a.points()) {
        // points are sorted, nearest neighbour by binary search
        const auto& pts = b.points();
        auto it = std::lower_bound(pts.begin(), pts.end(), x);
        Rational best(2);
        if (it != pts.end()) best = min(best, (*it - x).abs());
        if (it != pts.begin()) best = min(best, (x - *(it - 1)).abs());
        worst = max(worst, best);
    }
    return worst;
}

}  // namespace

Rational hausdorff_distance(const FiniteSubset& a, const FiniteSubset& b) {
    return max(directed_distance(a, b), directed_distance(b, a));
}

FiniteSubset induced_image(const MapSchedule& schedule, const FiniteSubset& a, std::size_t n) {
    std::vector<Rational> out;
    out.reserve(a.size());
    for (const Rational& x : a.points()) out.push_back(schedule.orbit_point(x, n));
    return FiniteSubset(std::move(out));
}

bool membership_vietoris(const FiniteSubset& a, const VietorisBox& box) {
    if (box.opens.empty()) throw QueryError("vietoris box must have at least one open");
    for (const Rational& x : a.points()) {
        bool covered = false;
        for (const OpenInterval& u : box.opens) {
            if (u.contains(x)) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    for (const OpenInterval& u : box.opens) {
        bool met = false;
        for (const Rational& x : a.points()) {
            if (u.contains(x)) {
                met = true;
                break;
            }
        }
        if (!met) return false;
    }
    return true;
}

std::vector<FiniteSubset> sample_hausdorff_ball(const HyperNeighborhood& nbhd, std::size_t count,
                                                std::uint64_t seed) {
    if (!(nbhd.radius > Rational(0))) throw QueryError("hyper-neighborhood radius must be positive");
    const FiniteSubset& center = nbhd.center;
    const Rational& eps = nbhd.radius;
    Rng rng(seed);
    std::vector<FiniteSubset> out;
    out.reserve(count);
    const std::size_t extra_cap = 3 * center.size();
    while (out.size() < count) {
        std::vector<Rational> pts;
        for (const Rational& a : center.points()) {
            // exactly one mandatory point per center point keeps the strict
            // bound d_H < eps attainable and the size cap predictable
            Rational lo = max(Rational(0), a - eps);
            Rational hi = min(Rational(1), a + eps);
            Rational p = rng.open_between(lo, hi);
            pts.push_back((p - a).abs() < eps ? p : a);
        }
        std::size_t extras = rng.index(extra_cap + 1);
        for (std::size_t i = 0; i < extras; ++i) {
            const Rational& anchor = center.points()[rng.index(center.size())];
            Rational lo = max(Rational(0), anchor - eps);
            Rational hi = min(Rational(1), anchor + eps);
            Rational p = rng.open_between(lo, hi);
            if ((p - anchor).abs() < eps) pts.push_back(p);
        }
        FiniteSubset candidate(std::move(pts));
        if (hausdorff_distance(center, candidate) < eps) out.push_back(std::move(candidate));
    }
    return out;
}

FiniteSubset witness_partner(const MapSchedule& schedule, const FiniteSubset& a,
                             const std::vector<Rational>& witnesses, std::size_t n,
                             const Rational& delta0) {
    if (witnesses.size() != a.size())
        throw InvalidWitnessError("witness list must align with the base set");
    if (!(delta0 > Rational(0))) throw InvalidWitnessError("delta0 must be positive");

    const std::vector<Rational>& xs = a.points();
    std::vector<Rational> fx(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) fx[i] = schedule.orbit_point(xs[i], n);

    for (std::size_t i = 0; i < xs.size(); ++i) {
        Rational fy = schedule.orbit_point(witnesses[i], n);
        if (!((fx[i] - fy).abs() > delta0)) {
            throw InvalidWitnessError("witness " + std::to_string(i) + " separated by only " +
                                      (fx[i] - fy).abs().str() + " <= " + delta0.str() +
                                      " at time " + std::to_string(n));
        }
    }

    const Rational half = delta0 / Rational(2);
    std::vector<Rational> zs(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        zs[i] = ((fx[0] - fx[i]).abs() <= half) ? witnesses[i] : xs[i];
    }
    return FiniteSubset(std::move(zs));
}

}  // namespace ndslab
