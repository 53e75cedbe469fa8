#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "bimatch/rational.hpp"

namespace bimatch {

enum class Color { White, Black };

inline Color other(Color c) { return c == Color::White ? Color::Black : Color::White; }

struct Pt {
    Rat x, y;

    Pt() = default;
    Pt(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}

    Pt operator+(const Pt& o) const { return {x + o.x, y + o.y}; }
    Pt operator-(const Pt& o) const { return {x - o.x, y - o.y}; }
    Pt operator*(const Rat& s) const { return {x * s, y * s}; }
    bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Pt& o) const { return !(*this == o); }
};

inline Rat cross(const Pt& a, const Pt& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Pt& a, const Pt& b) { return a.x * b.x + a.y * b.y; }

// Sign of cross(a, b), given double approximations of the coordinates (each
// within 1 ulp of the exact value): returns the sign certified by a
// floating-point error bound, or falls back to the exact rational cross.
// Worth it only where the doubles are precomputed and reused across many
// comparisons; a fresh rational-to-double conversion costs a division.
int sgn_cross_filtered(double ax, double ay, double bx, double by, const Pt& a, const Pt& b);

// Sign of the determinant |b-a, c-a|: +1 when c lies strictly left of the
// directed line a -> b, -1 when strictly right, 0 when collinear.
int orient(const Pt& a, const Pt& b, const Pt& c);

struct Point {
    Pt pos;
    Color color;
};

// Directed line through `origin` with direction `dir` (dir != 0).
struct DirectedLine {
    Pt origin;
    Pt dir;

    // +1: p strictly left, 0: on the line, -1: strictly right.
    int side(const Pt& p) const { return sgn(cross(dir, p - origin)); }
};

// Intersection point of two non-parallel lines.
std::optional<Pt> line_intersection(const DirectedLine& a, const DirectedLine& b);

// A matching edge, directed white -> black; indices into a PointSet.
struct Segment {
    std::size_t white;
    std::size_t black;

    bool operator==(const Segment& o) const { return white == o.white && black == o.black; }
};

class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<Point> points) : points_(std::move(points)) {}

    const std::vector<Point>& points() const { return points_; }
    const Point& operator[](std::size_t i) const { return points_[i]; }
    std::size_t size() const { return points_.size(); }
    // Count per color (n of the (n+n)-set).
    std::size_t pairs() const { return points_.size() / 2; }

    // Enforces |White| = |Black| >= 1, distinct points, no collinear triple.
    // Throws InputError with the offending indices otherwise.
    void validate() const;

    DirectedLine supporting_line(const Segment& s) const {
        const Pt& w = points_[s.white].pos;
        const Pt& b = points_[s.black].pos;
        return {w, b - w};
    }

private:
    std::vector<Point> points_;
};

// Reports a collinear triple as indices, or nullopt. O(n^3) scan for small
// inputs, O(n^2 log n) direction-sort scan above the threshold; both exact.
std::optional<std::array<std::size_t, 3>> find_collinear_triple(const std::vector<Point>& pts);

// True iff the closed segments intersect. Assumes the four endpoints are in
// general position (validated sets have no collinear triples).
bool segments_cross(const PointSet& ps, const Segment& s, const Segment& t);
bool segments_cross(const Pt& a, const Pt& b, const Pt& c, const Pt& d);

// Indices of hull vertices in CCW order, starting at the lexicographically
// smallest point. Interior points excluded; works for any n >= 1.
std::vector<std::size_t> convex_hull(const std::vector<Pt>& pts);

// Incrementally maintained hull over matching segments, supporting the
// tangent-walk extension with a visibility hint. Tracks which segments
// currently form a full hull edge (both endpoints adjacent on the boundary).
class IncrementalHull {
public:
    enum class Extend { Ok, PointInside };

    // Start from a single segment (a degenerate 2-vertex hull).
    IncrementalHull(const Pt& w, const Pt& b, int seg_id);

    // Insert both endpoints of a segment. `hint_seg` names a segment with a
    // live boundary vertex near the insertion site; the walk starts there.
    // Returns PointInside (leaving the hull unchanged) if either point fails
    // to be strictly outside at its insertion time.
    Extend extend(const Pt& w, const Pt& b, int seg_id, int hint_seg);

    // Segments whose two endpoints are currently an edge of the boundary.
    const std::unordered_set<int>& segment_edges() const { return seg_edges_; }

    std::size_t vertex_count() const { return alive_count_; }
    std::vector<Pt> boundary() const;  // CCW

private:
    struct Node {
        Pt p;
        int seg;
        int prev = -1, next = -1;
        bool alive = false;
    };

    int insert_point(const Pt& p, int seg_id, int hint_node);
    void rebuild(const std::vector<std::pair<Pt, int>>& pts);
    void note_edge(int u, int v, bool present);

    std::vector<Node> nodes_;
    std::unordered_map<int, std::pair<int, int>> seg_nodes_;  // seg_id -> node ids (may be dead)
    std::unordered_set<int> seg_edges_;
    std::size_t alive_count_ = 0;
    int any_alive_ = -1;
};

// Convenience: hull of `hull_pts` union the two new points, computed from
// scratch. Oracle counterpart of IncrementalHull::extend in tests.
std::vector<Pt> hull_union(const std::vector<Pt>& hull_pts, const Pt& a, const Pt& b);

}  // namespace bimatch
