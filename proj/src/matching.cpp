#include "bimatch/matching.hpp"

#include <string>

namespace bimatch {

BRMatching::BRMatching(std::shared_ptr<const PointSet> points, std::vector<Segment> segments,
                       bool skip_validation)
    : points_(std::move(points)), segments_(std::move(segments)) {
    if (skip_validation) return;
    const std::size_t n = points_->pairs();
    if (segments_.size() != n)
        throw InputError("matching has " + std::to_string(segments_.size()) + " segments, expected " +
                         std::to_string(n));
    std::vector<int> used(points_->size(), 0);
    for (const auto& s : segments_) {
        if (s.white >= points_->size() || s.black >= points_->size())
            throw InputError("segment index out of range");
        if ((*points_)[s.white].color != Color::White)
            throw InputError("segment start " + std::to_string(s.white) + " is not white");
        if ((*points_)[s.black].color != Color::Black)
            throw InputError("segment end " + std::to_string(s.black) + " is not black");
        if (used[s.white]++ || used[s.black]++)
            throw InputError("point matched twice");
    }
    for (std::size_t i = 0; i < segments_.size(); ++i)
        for (std::size_t j = i + 1; j < segments_.size(); ++j)
            if (segments_cross(*points_, segments_[i], segments_[j]))
                throw InputError("segments " + std::to_string(i) + " and " + std::to_string(j) +
                                 " cross");
}

SidednessOutcome sidedness(const BRMatching& m, std::size_t i, std::size_t j) {
    DirectedLine gi = m.line(i), gj = m.line(j);
    int wj = gi.side(m.white_pt(j)), bj = gi.side(m.black_pt(j));
    int wi = gj.side(m.white_pt(i)), bi = gj.side(m.black_pt(i));
    BIMATCH_CHECK(wj != 0 && bj != 0 && wi != 0 && bi != 0,
                  "segment endpoint on another supporting line");
    if (wj < 0 && bj < 0 && wi > 0 && bi > 0) return SidednessOutcome::FirstBelowSecond;
    if (wi < 0 && bi < 0 && wj > 0 && bj > 0) return SidednessOutcome::SecondBelowFirst;
    return SidednessOutcome::Incomparable;
}

SidednessOutcome sidedness_one_sided(const BRMatching& m, std::size_t i, std::size_t j) {
    int s = m.line(i).side(m.white_pt(j));
    BIMATCH_CHECK(s != 0, "segment endpoint on another supporting line");
    return s < 0 ? SidednessOutcome::FirstBelowSecond : SidednessOutcome::SecondBelowFirst;
}

namespace {

// Where the supporting lines' crossing point X sits on the segment (w, b):
// -1 before the white end, +1 past the black end, 0 interior. Exact, no
// division: signs of (X-w).d and (X-b).d with d = b-w.
int locate_on_segment(const Pt& x, const Pt& w, const Pt& b) {
    Pt d = b - w;
    int at_w = sgn(dot(x - w, d));
    BIMATCH_CHECK(at_w != 0, "supporting lines meet at a segment endpoint");
    if (at_w < 0) return -1;
    int at_b = sgn(dot(x - b, d));
    BIMATCH_CHECK(at_b != 0, "supporting lines meet at a segment endpoint");
    return at_b > 0 ? 1 : 0;
}

}  // namespace

PairGeometry pair_geometry(const BRMatching& m, std::size_t i, std::size_t j) {
    DirectedLine gi = m.line(i), gj = m.line(j);
    if (cross(gi.dir, gj.dir) == 0) {
        return {sgn(dot(gi.dir, gj.dir)) > 0 ? PairGeometry::Kind::Parallel
                                             : PairGeometry::Kind::Antiparallel};
    }
    Pt x = *line_intersection(gi, gj);
    int li = locate_on_segment(x, m.white_pt(i), m.black_pt(i));
    int lj = locate_on_segment(x, m.white_pt(j), m.black_pt(j));
    BIMATCH_CHECK(li != 0 || lj != 0, "non-crossing segments with interior crossing point");
    if (li != 0 && lj != 0) {
        if (li == lj)
            return {PairGeometry::Kind::CrossSameColorRays,
                    li < 0 ? Color::White : Color::Black};
        return {PairGeometry::Kind::CrossDifferentColorRays};
    }
    return {PairGeometry::Kind::RayCrossesSegment};
}

bool pair_has_cut(const BRMatching& m, std::size_t i, std::size_t j) {
    switch (pair_geometry(m, i, j).kind) {
        case PairGeometry::Kind::Antiparallel:
        case PairGeometry::Kind::CrossDifferentColorRays:
        case PairGeometry::Kind::RayCrossesSegment:
            return true;
        default:
            return false;
    }
}

CutPattern incomparable_pattern(const BRMatching& m, std::size_t i, std::size_t j) {
    switch (pair_geometry(m, i, j).kind) {
        case PairGeometry::Kind::CrossDifferentColorRays:
            return CutPattern::OuterRaysDifferentColors;
        case PairGeometry::Kind::Antiparallel:
        case PairGeometry::Kind::RayCrossesSegment:
            return CutPattern::RayCutsSegment;
        default:
            throw InternalError("incomparable_pattern on a comparable pair");
    }
}

std::optional<std::pair<std::size_t, std::size_t>> has_chromatic_cut(const BRMatching& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (pair_has_cut(m, i, j)) return std::make_pair(i, j);
    return std::nullopt;
}

TriplePattern triple_pattern(const BRMatching& m, std::size_t i, std::size_t j, std::size_t k) {
    SidednessOutcome ij = sidedness(m, i, j);
    SidednessOutcome jk = sidedness(m, j, k);
    SidednessOutcome ki = sidedness(m, k, i);
    if (ij == SidednessOutcome::Incomparable || jk == SidednessOutcome::Incomparable ||
        ki == SidednessOutcome::Incomparable)
        return TriplePattern::HasCut;
    // Cyclic iff the three directed relations i->j, j->k, k->i all agree.
    return (ij == jk && jk == ki) ? TriplePattern::Star : TriplePattern::Chain;
}

std::vector<std::pair<Color, std::size_t>> color_intervals(const PointSet& ps) {
    std::vector<Pt> pts;
    pts.reserve(ps.size());
    for (const auto& p : ps.points()) pts.push_back(p.pos);
    auto h = convex_hull(pts);
    std::vector<std::pair<Color, std::size_t>> runs;
    for (auto idx : h) {
        Color c = ps[idx].color;
        if (!runs.empty() && runs.back().first == c)
            ++runs.back().second;
        else
            runs.emplace_back(c, 1);
    }
    if (runs.size() > 1 && runs.front().first == runs.back().first) {
        runs.front().second += runs.back().second;
        runs.pop_back();
    }
    return runs;
}

}  // namespace bimatch
