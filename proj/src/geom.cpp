#include "bimatch/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

namespace bimatch {

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw InputError("empty number");
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw InputError("malformed number: " + text);
    if (q.get_den() == 0) throw InputError("zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string format_rat(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

int sgn_cross_filtered(double ax, double ay, double bx, double by, const Pt& a, const Pt& b) {
    double l = ax * by, r = ay * bx, d = l - r;
    // Inputs carry <= 1 ulp of relative error each; the two products and the
    // subtraction add three more roundings, so 8 eps of (|l|+|r|) certifies
    // the sign. Overflow or underflow turns the bound into inf/nan and drops
    // through to the exact path.
    double bound = 8.0 * std::numeric_limits<double>::epsilon() * (std::fabs(l) + std::fabs(r));
    if (d > bound) return 1;
    if (d < -bound) return -1;
    return sgn(cross(a, b));
}

int orient(const Pt& a, const Pt& b, const Pt& c) {
    return sgn(cross(b - a, c - a));
}

std::optional<Pt> line_intersection(const DirectedLine& a, const DirectedLine& b) {
    Rat denom = cross(a.dir, b.dir);
    if (denom == 0) return std::nullopt;
    Rat t = cross(b.origin - a.origin, b.dir) / denom;
    return a.origin + a.dir * t;
}

bool segments_cross(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    int o1 = orient(a, b, c);
    int o2 = orient(a, b, d);
    int o3 = orient(c, d, a);
    int o4 = orient(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    // With a zero sign an endpoint lies on the other segment's line; the
    // closed segments then touch iff it lies inside the other's bounding box.
    auto on = [](const Pt& p, const Pt& q, const Pt& r) {
        return orient(p, q, r) == 0 && std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
               std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
    };
    return on(a, b, c) || on(a, b, d) || on(c, d, a) || on(c, d, b);
}

bool segments_cross(const PointSet& ps, const Segment& s, const Segment& t) {
    return segments_cross(ps[s.white].pos, ps[s.black].pos, ps[t.white].pos, ps[t.black].pos);
}

namespace {

// Direction canonicalized modulo point reflection, so that collinear triples
// around a pivot collapse to equal keys.
std::pair<Rat, Rat> canon_dir(Pt d) {
    if (d.y < 0 || (d.y == 0 && d.x < 0)) {
        d.x = -d.x;
        d.y = -d.y;
    }
    // Scale-normalize: divide by |x|+|y| would leave rationals; instead reduce
    // by gcd of numerators/denominators via mpq normal form of the slope pair.
    if (d.x == 0) return {Rat(0), Rat(1)};
    if (d.y == 0) return {Rat(1), Rat(0)};
    Rat slope = d.y / d.x;
    return {Rat(sgn(d.x)), slope};
}

}  // namespace

std::optional<std::array<std::size_t, 3>> find_collinear_triple(const std::vector<Point>& pts) {
    const std::size_t n = pts.size();
    if (n < 3) return std::nullopt;
    if (n <= 64) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k)
                    if (orient(pts[i].pos, pts[j].pos, pts[k].pos) == 0)
                        return std::array<std::size_t, 3>{i, j, k};
        return std::nullopt;
    }
    // Direction-sort scan: for each pivot, two other points giving the same
    // direction modulo reflection witness a collinear triple.
    for (std::size_t i = 0; i + 2 < n; ++i) {
        std::vector<std::pair<std::pair<Rat, Rat>, std::size_t>> dirs;
        dirs.reserve(n - i - 1);
        for (std::size_t j = i + 1; j < n; ++j)
            dirs.emplace_back(canon_dir(pts[j].pos - pts[i].pos), j);
        std::sort(dirs.begin(), dirs.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t k = 1; k < dirs.size(); ++k)
            if (dirs[k - 1].first == dirs[k].first)
                return std::array<std::size_t, 3>{i, dirs[k - 1].second, dirs[k].second};
    }
    return std::nullopt;
}

void PointSet::validate() const {
    const std::size_t n2 = points_.size();
    if (n2 == 0 || n2 % 2 != 0) throw InputError("point set must have 2n points, n >= 1");
    std::size_t whites = 0;
    for (const auto& p : points_)
        if (p.color == Color::White) ++whites;
    if (whites * 2 != n2)
        throw InputError("color count mismatch: " + std::to_string(whites) + " white of " +
                         std::to_string(n2));
    std::map<std::pair<Rat, Rat>, std::size_t> seen;
    for (std::size_t i = 0; i < n2; ++i) {
        auto key = std::make_pair(points_[i].pos.x, points_[i].pos.y);
        auto [it, fresh] = seen.emplace(key, i);
        if (!fresh)
            throw InputError("duplicate point at indices " + std::to_string(it->second) + ", " +
                             std::to_string(i));
    }
    if (auto triple = find_collinear_triple(points_))
        throw InputError("collinear triple at indices " + std::to_string((*triple)[0]) + ", " +
                         std::to_string((*triple)[1]) + ", " + std::to_string((*triple)[2]));
}

std::vector<std::size_t> convex_hull(const std::vector<Pt>& pts) {
    const std::size_t n = pts.size();
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return pts[a].x < pts[b].x || (pts[a].x == pts[b].x && pts[a].y < pts[b].y);
    });
    idx.erase(std::unique(idx.begin(), idx.end(),
                          [&](std::size_t a, std::size_t b) { return pts[a] == pts[b]; }),
              idx.end());
    if (idx.size() <= 2) return idx;
    std::vector<std::size_t> h(2 * idx.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {  // lower chain
        while (k >= 2 && orient(pts[h[k - 2]], pts[h[k - 1]], pts[idx[i]]) <= 0) --k;
        h[k++] = idx[i];
    }
    for (std::size_t i = idx.size() - 1, t = k + 1; i-- > 0;) {  // upper chain
        while (k >= t && orient(pts[h[k - 2]], pts[h[k - 1]], pts[idx[i]]) <= 0) --k;
        h[k++] = idx[i];
    }
    h.resize(k - 1);
    return h;
}

std::vector<Pt> hull_union(const std::vector<Pt>& hull_pts, const Pt& a, const Pt& b) {
    std::vector<Pt> all = hull_pts;
    all.push_back(a);
    all.push_back(b);
    auto h = convex_hull(all);
    std::vector<Pt> out;
    out.reserve(h.size());
    for (auto i : h) out.push_back(all[i]);
    return out;
}

IncrementalHull::IncrementalHull(const Pt& w, const Pt& b, int seg_id) {
    nodes_.push_back({w, seg_id, 1, 1, true});
    nodes_.push_back({b, seg_id, 0, 0, true});
    seg_nodes_[seg_id] = {0, 1};
    seg_edges_.insert(seg_id);
    alive_count_ = 2;
    any_alive_ = 0;
}

void IncrementalHull::note_edge(int u, int v, bool present) {
    if (u < 0 || v < 0) return;
    if (nodes_[u].seg != nodes_[v].seg) return;
    if (present)
        seg_edges_.insert(nodes_[u].seg);
    else
        seg_edges_.erase(nodes_[u].seg);
}

void IncrementalHull::rebuild(const std::vector<std::pair<Pt, int>>& pts) {
    std::vector<Pt> ps;
    ps.reserve(pts.size());
    for (const auto& [p, s] : pts) ps.push_back(p);
    auto h = convex_hull(ps);
    for (auto& nd : nodes_) nd.alive = false;
    nodes_.clear();
    seg_edges_.clear();
    for (std::size_t i = 0; i < h.size(); ++i) {
        const auto& [p, s] = pts[h[i]];
        nodes_.push_back({p, s, int((i + h.size() - 1) % h.size()), int((i + 1) % h.size()), true});
    }
    seg_nodes_.clear();
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        auto it = seg_nodes_.find(nodes_[i].seg);
        if (it == seg_nodes_.end())
            seg_nodes_[nodes_[i].seg] = {int(i), -1};
        else
            it->second.second = int(i);
        note_edge(int(i), nodes_[i].next, true);
    }
    alive_count_ = nodes_.size();
    any_alive_ = nodes_.empty() ? -1 : 0;
}

int IncrementalHull::insert_point(const Pt& p, int seg_id, int hint_node) {
    // Edge (u, u.next) is visible from p when p lies strictly right of it.
    auto visible = [&](int u) {
        return orient(nodes_[u].p, nodes_[nodes_[u].next].p, p) < 0;
    };
    int start = -1;
    if (hint_node >= 0 && nodes_[hint_node].alive) {
        if (visible(hint_node))
            start = hint_node;
        else if (visible(nodes_[hint_node].prev))
            start = nodes_[hint_node].prev;
    }
    if (start < 0) {
        // Hint failed; scan the whole boundary (slow path, also the
        // point-inside detector).
        int u = any_alive_;
        int first = u;
        do {
            if (visible(u)) {
                start = u;
                break;
            }
            u = nodes_[u].next;
        } while (u != first);
        if (start < 0) return -1;  // no visible edge: p inside the hull
    }
    // Walk to the two tangent vertices, removing everything walked over.
    int lo = start;
    while (visible(nodes_[lo].prev)) lo = nodes_[lo].prev;
    int hi = nodes_[start].next;
    while (visible(hi)) hi = nodes_[hi].next;
    // Remove nodes strictly between lo and hi.
    note_edge(lo, nodes_[lo].next, false);
    for (int u = nodes_[lo].next; u != hi;) {
        int nx = nodes_[u].next;
        note_edge(u, nx, false);
        nodes_[u].alive = false;
        --alive_count_;
        u = nx;
    }
    int id = int(nodes_.size());
    nodes_.push_back({p, seg_id, lo, hi, true});
    nodes_[lo].next = id;
    nodes_[hi].prev = id;
    ++alive_count_;
    any_alive_ = id;
    note_edge(lo, id, true);
    note_edge(id, hi, true);
    return id;
}

IncrementalHull::Extend IncrementalHull::extend(const Pt& w, const Pt& b, int seg_id,
                                                int hint_seg) {
    if (alive_count_ <= 2) {
        // Degenerate boundary; check containment trivially impossible with
        // two vertices, just rebuild from scratch.
        std::vector<std::pair<Pt, int>> pts;
        for (const auto& nd : nodes_)
            if (nd.alive) pts.emplace_back(nd.p, nd.seg);
        pts.emplace_back(w, seg_id);
        pts.emplace_back(b, seg_id);
        rebuild(pts);
        int a1, a2;
        std::tie(a1, a2) = seg_nodes_.count(seg_id) ? seg_nodes_[seg_id] : std::pair<int, int>{-1, -1};
        if (a1 < 0 || a2 < 0) return Extend::PointInside;
        seg_nodes_[seg_id] = {a1, a2};
        return Extend::Ok;
    }
    int hint = -1;
    if (auto it = seg_nodes_.find(hint_seg); it != seg_nodes_.end()) {
        if (it->second.first >= 0 && nodes_[it->second.first].alive)
            hint = it->second.first;
        else if (it->second.second >= 0 && nodes_[it->second.second].alive)
            hint = it->second.second;
    }
    int n1 = insert_point(w, seg_id, hint);
    if (n1 < 0) return Extend::PointInside;
    int n2 = insert_point(b, seg_id, n1);
    if (n2 < 0) {
        // First point accepted, second inside: report failure; callers treat
        // the hull as spent (drum check aborts here).
        seg_nodes_[seg_id] = {n1, -1};
        return Extend::PointInside;
    }
    seg_nodes_[seg_id] = {n1, n2};
    return Extend::Ok;
}

std::vector<Pt> IncrementalHull::boundary() const {
    std::vector<Pt> out;
    if (any_alive_ < 0) return out;
    int u = any_alive_;
    do {
        out.push_back(nodes_[u].p);
        u = nodes_[u].next;
    } while (u != any_alive_);
    return out;
}

}  // namespace bimatch
