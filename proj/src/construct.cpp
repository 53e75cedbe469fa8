#include "bimatch/construct.hpp"

#include <algorithm>
#include <functional>

namespace bimatch {

namespace {

struct HsPair {
    std::size_t i, j;        // point indices, i < j
    std::vector<int> sides;  // for each on-line point (i then j), +1 or -1
};

// Finds, among lines through two points of the subset, the lexicographically
// smallest pair giving a balanced split. For odd n the pair must be
// bichromatic with (n-1)/2 of each color strictly on each side; for even n
// the two carriers are pushed to sides completing n/2 + n/2.
std::optional<HsPair> hs_candidate_for_pivot(const PointSet& ps,
                                             const std::vector<std::size_t>& idxs,
                                             std::size_t pivot_pos) {
    std::size_t m = idxs.size();
    std::size_t n = m / 2;
    std::size_t pivot = idxs[pivot_pos];
    const Pt& o = ps[pivot].pos;
    struct Entry {
        Pt v;
        double dx, dy;  // double images of v, for the sign filter
        std::size_t idx;
        Color color;
    };
    std::vector<Entry> s;
    s.reserve(m - 1);
    for (std::size_t x : idxs)
        if (x != pivot) {
            Pt v = ps[x].pos - o;
            double dx = v.x.get_d(), dy = v.y.get_d();
            s.push_back({std::move(v), dx, dy, x, ps[x].color});
        }
    auto fcross = [](const Entry& p, const Entry& q) {
        return sgn_cross_filtered(p.dx, p.dy, q.dx, q.dy, p.v, q.v);
    };
    auto cls = [](const Pt& d) {
        if (d.y < 0) return 0;
        if (d.y == 0) return d.x > 0 ? 1 : 3;
        return 2;
    };
    std::sort(s.begin(), s.end(), [&](const Entry& p, const Entry& q) {
        int cp = cls(p.v), cq = cls(q.v);
        if (cp != cq) return cp < cq;
        return fcross(p, q) > 0;
    });
    std::size_t sz = s.size();
    std::vector<char> member(sz, 0);
    long cw = 0, cb = 0;
    auto add = [&](std::size_t k) {
        if (member[k]) return;
        member[k] = 1;
        (s[k].color == Color::White ? cw : cb)++;
    };
    auto remove = [&](std::size_t k) {
        if (!member[k]) return;
        member[k] = 0;
        (s[k].color == Color::White ? cw : cb)--;
    };
    long tw = 0, tb = 0;
    for (const auto& e : s) (e.color == Color::White ? tw : tb)++;
    long pivotW = ps[pivot].color == Color::White ? 1 : 0;

    std::optional<HsPair> best;
    std::size_t k = 0;
    for (std::size_t p = 0; p < sz; ++p) {
        remove(p);
        if (k < p + 1) k = p + 1;
        while (k < p + sz && fcross(s[p], s[k % sz]) > 0) add(k++ % sz);
        // Left of the line pivot -> s[p] holds cw whites and cb blacks.
        std::size_t other = s[p].idx;
        long lw = cw, lb = cb;
        long rw = tw - lw - (s[p].color == Color::White ? 1 : 0);
        long rb = tb - lb - (s[p].color == Color::White ? 0 : 1);
        long half = long(n) / 2;
        if (n % 2 == 1) {
            if (ps[pivot].color == s[p].color) continue;
            if (lw == half && lb == half && rw == half && rb == half) {
                if (!best || other < best->j) {
                    std::size_t lo = std::min(pivot, other), hi = std::max(pivot, other);
                    if (lo == pivot) best = HsPair{lo, hi, {}};
                }
            }
        } else {
            long onW = pivotW + (s[p].color == Color::White ? 1 : 0);
            long onB = 2 - onW;
            for (int spv : {1, -1})
                for (int sot : {1, -1}) {
                    long aw = (spv > 0 && pivotW) + (sot > 0 && s[p].color == Color::White);
                    long ab = (spv > 0 && !pivotW) + (sot > 0 && s[p].color == Color::Black);
                    if (lw + aw != half || lb + ab != half) continue;
                    if (rw + (onW - aw) != half || rb + (onB - ab) != half) continue;
                    if (pivot < other) {
                        if (!best || other < best->j)
                            best = HsPair{pivot, other, {spv, sot}};
                    }
                    goto next_p;
                }
        next_p:;
        }
    }
    return best;
}

HsPair hs_find(const PointSet& ps, const std::vector<std::size_t>& idxs) {
    // Probe pivots from the spatial median outward: extreme points often admit
    // no balanced line through them at all, and every failed pivot costs a
    // full angular sort.
    std::size_t m = idxs.size();
    std::vector<std::size_t> pos(m);
    for (std::size_t i = 0; i < m; ++i) pos[i] = i;
    std::sort(pos.begin(), pos.end(), [&](std::size_t a, std::size_t b) {
        const Pt& pa = ps[idxs[a]].pos;
        const Pt& pb = ps[idxs[b]].pos;
        if (pa.x != pb.x) return pa.x < pb.x;
        if (pa.y != pb.y) return pa.y < pb.y;
        return idxs[a] < idxs[b];
    });
    std::size_t mid = m / 2;
    for (std::size_t step = 0; step < m; ++step) {
        std::size_t p = step % 2 == 0 ? mid + step / 2 : mid - 1 - step / 2;
        if (p >= m) continue;
        if (auto c = hs_candidate_for_pivot(ps, idxs, pos[p])) return *c;
    }
    throw InternalError("no two-point ham-sandwich line found");
}

void build_rec(const PointSet& ps, std::vector<std::size_t> idxs, std::vector<Segment>& out) {
    if (idxs.empty()) return;
    std::sort(idxs.begin(), idxs.end());
    if (idxs.size() == 2) {
        std::size_t w = ps[idxs[0]].color == Color::White ? idxs[0] : idxs[1];
        std::size_t b = ps[idxs[0]].color == Color::White ? idxs[1] : idxs[0];
        BIMATCH_CHECK(ps[w].color == Color::White && ps[b].color == Color::Black,
                      "unbalanced base pair");
        out.push_back({w, b});
        return;
    }
    std::size_t n = idxs.size() / 2;
    HsPair cut = hs_find(ps, idxs);
    DirectedLine l{ps[cut.i].pos, ps[cut.j].pos - ps[cut.i].pos};
    double ldx = l.dir.x.get_d(), ldy = l.dir.y.get_d();
    std::vector<std::size_t> left, right;
    for (std::size_t x : idxs) {
        if (x == cut.i || x == cut.j) continue;
        Pt r = ps[x].pos - l.origin;
        int sd = sgn_cross_filtered(ldx, ldy, r.x.get_d(), r.y.get_d(), l.dir, r);
        BIMATCH_CHECK(sd != 0, "third point on the cut line");
        (sd > 0 ? left : right).push_back(x);
    }
    if (n % 2 == 1) {
        std::size_t w = ps[cut.i].color == Color::White ? cut.i : cut.j;
        std::size_t b = ps[cut.i].color == Color::White ? cut.j : cut.i;
        out.push_back({w, b});
    } else {
        (cut.sides[0] > 0 ? left : right).push_back(cut.i);
        (cut.sides[1] > 0 ? left : right).push_back(cut.j);
    }
    build_rec(ps, std::move(left), out);
    build_rec(ps, std::move(right), out);
}

}  // namespace

HamSandwichCut ham_sandwich(const PointSet& f) {
    std::vector<std::size_t> idxs(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) idxs[i] = i;
    HsPair p = hs_find(f, idxs);
    HamSandwichCut cut;
    cut.line = {f[p.i].pos, f[p.j].pos - f[p.i].pos};
    cut.on_line = {p.i, p.j};
    cut.side_of_online = p.sides.empty() ? std::vector<int>{0, 0} : p.sides;
    return cut;
}

BRMatching build_matching(std::shared_ptr<const PointSet> f) {
    std::vector<std::size_t> idxs(f->size());
    for (std::size_t i = 0; i < f->size(); ++i) idxs[i] = i;
    std::vector<Segment> segs;
    segs.reserve(f->pairs());
    build_rec(*f, std::move(idxs), segs);
    std::sort(segs.begin(), segs.end(),
              [](const Segment& a, const Segment& b) { return a.white < b.white; });
    bool skip = f->pairs() > 512;  // quadratic validation is for desk scale
    return BRMatching(std::move(f), std::move(segs), skip);
}

std::pair<AlternatingPath, AlternatingPath> build_alternating_paths(
    const BRMatching& m, const std::vector<std::size_t>& order) {
    if (order.size() != m.size()) throw InputError("order does not cover the matching");
    AlternatingPath fwd, rev;
    for (std::size_t k : order) {
        fwd.vertices.push_back(m[k].white);
        fwd.vertices.push_back(m[k].black);
        rev.vertices.push_back(m[k].black);
        rev.vertices.push_back(m[k].white);
    }
    return {fwd, rev};
}

namespace {

bool proper_cross(const PointSet& ps, const Segment& a, const Segment& b) {
    if (a.white == b.white || a.black == b.black || a.white == b.black || a.black == b.white)
        return false;  // shared endpoints cannot overlap further in general position
    return segments_cross(ps, a, b);
}

void check_compatible(const BRMatching& base, const std::vector<Segment>& alt,
                      const char* what) {
    for (const auto& s : alt)
        for (const auto& t : base.segments())
            BIMATCH_CHECK(!proper_cross(base.points(), s, t), what);
}

}  // namespace

std::pair<BRMatching, BRMatching> alternative_matchings_circular(
    const BRMatching& m, const std::vector<std::size_t>& cycle) {
    std::size_t n = m.size();
    if (cycle.size() != n || n < 3) throw InputError("alternatives need a circular cycle");
    std::vector<Segment> fwd, bwd;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t a = cycle[i], b = cycle[(i + 1) % n];
        fwd.push_back({m[a].white, m[b].black});
        bwd.push_back({m[b].white, m[a].black});
    }
    BRMatching m1(m.points_ptr(), std::move(fwd));
    BRMatching m2(m.points_ptr(), std::move(bwd));
    auto disjoint = [](const BRMatching& x, const BRMatching& y) {
        for (const auto& s : x.segments())
            for (const auto& t : y.segments())
                if (s == t) return false;
        return true;
    };
    BIMATCH_CHECK(disjoint(m1, m), "first alternative shares a segment with the input");
    BIMATCH_CHECK(disjoint(m2, m), "second alternative shares a segment with the input");
    BIMATCH_CHECK(disjoint(m1, m2), "alternatives share a segment");
    check_compatible(m, m1.segments(), "first alternative crosses the input matching");
    check_compatible(m, m2.segments(), "second alternative crosses the input matching");
    return {std::move(m1), std::move(m2)};
}

BRMatching alternative_matching_via_balanced_line(const BRMatching& m, const BalancedLine& bl) {
    const PointSet& ps = m.points();
    std::vector<std::size_t> left, right;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        int sd = bl.line.side(ps[i].pos);
        BIMATCH_CHECK(sd != 0, "balanced line passes through a point");
        (sd > 0 ? left : right).push_back(i);
    }
    std::vector<Segment> segs;
    build_rec(ps, std::move(left), segs);
    build_rec(ps, std::move(right), segs);
    std::sort(segs.begin(), segs.end(),
              [](const Segment& a, const Segment& b) { return a.white < b.white; });
    BRMatching out(m.points_ptr(), std::move(segs));
    for (const auto& s : out.segments())
        BIMATCH_CHECK(!(s == m[bl.crossed]), "alternative contains the crossed segment");
    return out;
}

}  // namespace bimatch
