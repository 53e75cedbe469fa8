#pragma once

#include "bimatch/matching.hpp"

namespace bimatch {

// A line with equally many points of each color in both open half-planes,
// containing no point of the set, crossing the interior of segment `crossed`.
struct BalancedLine {
    DirectedLine line;
    std::size_t crossed;  // segment index in the matching it was computed for
};

// A line crossing the interiors of two segments whose black ends lie
// strictly on opposite sides.
struct ChromaticCutWitness {
    DirectedLine line;
    std::size_t seg_a, seg_b;
};

// Builds an explicit cut line for an incomparable pair. `geo` must certify
// the cut (Antiparallel / CrossDifferentColorRays / RayCrossesSegment);
// anything else is rejected with InputError.
ChromaticCutWitness chromatic_cut_from_pair(const BRMatching& m, std::size_t i, std::size_t j,
                                            const PairGeometry& geo);

// Given an incomparable pair (i, j), produces a balanced line crossing the
// interior of segment i or j. Throws InternalError if none is found.
BalancedLine balanced_line_for_matching(const BRMatching& m, std::size_t i, std::size_t j);

// Lowest crossing of the closed probe segment (lower, upper) by a segment
// between two points of `f` on opposite sides of the probe's supporting
// line. "Lowest" = nearest to `lower` along the probe. Points of `f` on the
// supporting line are rejected. Divide-and-conquer, O(n log^2 n).
std::optional<Pt> lowest_crossing_spanning(const Pt& lower, const Pt& upper,
                                           const std::vector<Pt>& f);

// Same, for `f` strictly on one side of the probe's supporting line, against
// lines through two points of `f` (restricted to crossings on the closed
// probe). Radial sort around `lower` plus adjacent pairs, O(n log n).
std::optional<Pt> lowest_crossing_one_sided(const Pt& lower, const Pt& upper,
                                            const std::vector<Pt>& f);

// A point interior to (lower, upper) lying on no line through two points of
// `f`: the midpoint of `lower` and the lowest line crossing (the segment's
// midpoint when nothing crosses). `f` must not contain the probe endpoints.
Pt general_position_point(const Pt& lower, const Pt& upper, const std::vector<Pt>& f);

}  // namespace bimatch
