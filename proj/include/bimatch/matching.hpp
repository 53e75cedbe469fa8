#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "bimatch/geom.hpp"

namespace bimatch {

// A perfect non-crossing white->black matching over a shared point set.
class BRMatching {
public:
    // Validates (unless skip_validation): every point matched exactly once,
    // correct endpoint colors, no two segments crossing.
    BRMatching(std::shared_ptr<const PointSet> points, std::vector<Segment> segments,
               bool skip_validation = false);

    const PointSet& points() const { return *points_; }
    std::shared_ptr<const PointSet> points_ptr() const { return points_; }
    const std::vector<Segment>& segments() const { return segments_; }
    std::size_t size() const { return segments_.size(); }
    const Segment& operator[](std::size_t i) const { return segments_[i]; }

    const Pt& white_pt(std::size_t i) const { return (*points_)[segments_[i].white].pos; }
    const Pt& black_pt(std::size_t i) const { return (*points_)[segments_[i].black].pos; }
    DirectedLine line(std::size_t i) const { return points_->supporting_line(segments_[i]); }

private:
    std::shared_ptr<const PointSet> points_;
    std::vector<Segment> segments_;
};

enum class SidednessOutcome {
    FirstBelowSecond,   // A before B in the relation
    SecondBelowFirst,   // B before A
    Incomparable,
};

// Full relation test between segments i and j of m: each is related to the
// other iff it lies strictly on the proper side of the other's supporting
// line (four orientation tests). Asserts no endpoint hits a supporting line.
SidednessOutcome sidedness(const BRMatching& m, std::size_t i, std::size_t j);

// One-test shortcut valid only when i and j are known comparable: the white
// endpoint of j against the line of i decides the direction.
SidednessOutcome sidedness_one_sided(const BRMatching& m, std::size_t i, std::size_t j);

// Mutual position of two non-crossing segments, by where their supporting
// lines meet relative to each segment (before its white end, past its black
// end, or in the interior).
struct PairGeometry {
    enum class Kind {
        Parallel,
        Antiparallel,            // lines parallel, directions opposed
        CrossSameColorRays,      // crossing point past the same-color end of both
        CrossDifferentColorRays,
        RayCrossesSegment,       // crossing point interior to exactly one segment
    };
    Kind kind;
    // For CrossSameColorRays: which end the crossing lies beyond.
    Color ray_color = Color::White;
};

PairGeometry pair_geometry(const BRMatching& m, std::size_t i, std::size_t j);

// How an incomparable pair fails: either the supporting lines cross on outer
// rays of different colors, or one line's ray cuts the other segment (with
// antiparallel lines as the limit case of the latter).
enum class CutPattern { OuterRaysDifferentColors, RayCutsSegment };

// Requires the pair to be incomparable.
CutPattern incomparable_pattern(const BRMatching& m, std::size_t i, std::size_t j);

// True iff some line separates the two black endpoints while crossing both
// segment interiors. Equivalent to the pair being incomparable.
bool pair_has_cut(const BRMatching& m, std::size_t i, std::size_t j);

// Scans all pairs; returns an incomparable pair if one exists. O(n^2).
std::optional<std::pair<std::size_t, std::size_t>> has_chromatic_cut(const BRMatching& m);

enum class TriplePattern {
    Chain,    // pairwise comparable, acyclic
    Star,     // pairwise comparable, cyclic
    HasCut,   // some pair incomparable
};

TriplePattern triple_pattern(const BRMatching& m, std::size_t i, std::size_t j, std::size_t k);

// Sizes of the maximal same-color runs around the hull boundary, CCW from
// the lexicographically smallest hull vertex (the wrap-around run merged).
std::vector<std::pair<Color, std::size_t>> color_intervals(const PointSet& ps);

}  // namespace bimatch
