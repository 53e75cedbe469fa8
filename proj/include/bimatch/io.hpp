#pragma once

#include <string>

#include "bimatch/matching.hpp"

namespace bimatch {

// Point-set text: first line n (pairs), then 2n lines "x y C" with exact
// integers or fractions p/q and C in {W, B}.
std::shared_ptr<const PointSet> parse_pointset(const std::string& text);
std::string serialize_pointset(const PointSet& ps);

// Matching text: first line n, then n lines "w b" (point indices).
BRMatching parse_matching(const std::string& text, std::shared_ptr<const PointSet> ps);
std::string serialize_matching(const BRMatching& m);

struct SvgOverlays {
    std::vector<DirectedLine> lines;        // drawn clipped to the viewport
    std::vector<std::size_t> order;         // segment labels by position in this order
    std::vector<std::string> annotations;   // text lines in the corner
};

// Deterministic figure: hollow circles for white points, filled for black,
// arrows white -> black for matching segments. Coordinates are printed at
// fixed precision for display only.
std::string render_svg(const PointSet& ps, const BRMatching* m = nullptr,
                       const SvgOverlays& overlays = {});

}  // namespace bimatch
