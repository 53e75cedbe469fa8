#pragma once

#include "bimatch/cuts.hpp"
#include "bimatch/matching.hpp"

namespace bimatch {

// A line leaving at most floor(n/2) points of each color in each open
// half-plane. For odd n it passes through one point of each color; for even
// n through up to two points, with `side_of_online` recording the half-plane
// each one counts toward.
struct HamSandwichCut {
    DirectedLine line;
    std::vector<std::size_t> on_line;
    std::vector<int> side_of_online;  // +1 left, -1 right, parallel to on_line
};

// Deterministic: pivots are probed from the middle of the index-sorted set
// outward; the first pivot admitting a balanced line wins, with its smallest
// partner index.
HamSandwichCut ham_sandwich(const PointSet& f);

// Recursive ham-sandwich construction of a non-crossing matching.
BRMatching build_matching(std::shared_ptr<const PointSet> f);

// A path whose vertices alternate colors and whose edges alternate between
// matching segments and connectors.
struct AlternatingPath {
    std::vector<std::size_t> vertices;  // point indices
};

// For a linear matching in sorted order: one path traversing each segment
// white-to-black, one black-to-white, both covering all 2n points without
// self-crossings.
std::pair<AlternatingPath, AlternatingPath> build_alternating_paths(
    const BRMatching& m, const std::vector<std::size_t>& order);

// The two matchings disjoint from a circular matching and from each other,
// obtained by shifting whites one step along the cycle in each direction.
// Both validated: non-crossing, disjoint, and their unions with m
// non-crossing.
std::pair<BRMatching, BRMatching> alternative_matchings_circular(
    const BRMatching& m, const std::vector<std::size_t>& cycle);

// Rebuilds matchings independently on both sides of a balanced line; the
// result is a valid matching that does not contain the crossed segment.
BRMatching alternative_matching_via_balanced_line(const BRMatching& m, const BalancedLine& bl);

}  // namespace bimatch
