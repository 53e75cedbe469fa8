#pragma once

#include <cstdint>

#include "bimatch/matching.hpp"

namespace bimatch {

struct OracleResult {
    std::vector<BRMatching> all;
    std::size_t count() const { return all.size(); }
};

// Every non-crossing perfect color-conforming matching, by backtracking over
// white-to-black assignments with incremental crossing pruning. n <= 8.
OracleResult enumerate_all_matchings(std::shared_ptr<const PointSet> f);

struct GeneratedMatching {
    std::shared_ptr<const PointSet> points;
    BRMatching matching;
};

// n vertical unit segments, whites below, spaced horizontally, endpoint
// heights lifted onto a flat parabola so no three points are collinear.
// Linear and unique by construction.
GeneratedMatching gen_parallel(std::size_t n, long spacing = 4);

// Segments on n distinct lines through the origin with strictly increasing
// direction angles; occupancy[k] keeps line k's segment on its default ray
// (rays alternate sides by default), false flips it. Whites at the inner
// radius, blacks at the outer; radii perturbed per segment until the set is
// in general position.
GeneratedMatching gen_radial(std::size_t n, const std::vector<bool>& occupancy,
                             const Rat& inner_r = 1, const Rat& outer_r = 3);

// Doubles a point set: each point gets an opposite-colored partner offset by
// distance*direction (forward from whites, backward from blacks). Retries
// with shrinking distances until the result is in general position.
std::shared_ptr<const PointSet> gen_duplication(const PointSet& f, Pt direction = {1, 0},
                                                Rat distance = 1);

// A fixed 6-segment linear (hence unique) matching whose point order type
// cannot be redrawn as a parallel matching: three tilted segments pinned
// against each other plus three short vertical separators.
GeneratedMatching gen_nonparallelizable();

// Deterministic random integer-coordinate (n+n)-set, resampled until it is
// in general position.
std::shared_ptr<const PointSet> gen_random(std::size_t n, std::uint64_t seed, long coord_bound);

}  // namespace bimatch
