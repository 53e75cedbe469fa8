#include "bimatch/cuts.hpp"

#include <algorithm>

namespace bimatch {

namespace {

Pt perp(const Pt& d) { return {-d.y, d.x}; }

// Affine frame in which a probe segment is vertical with its first endpoint
// lowest: optional coordinate swap, shear x' = x + lam*y, optional y flip.
struct Frame {
    bool swap = false;
    Rat lam = 0;
    bool negy = false;

    Pt fwd(const Pt& p) const {
        Pt q = swap ? Pt{p.y, p.x} : p;
        q.x += lam * q.y;
        if (negy) q.y = -q.y;
        return q;
    }
    Pt inv(const Pt& p) const {
        Pt q = p;
        if (negy) q.y = -q.y;
        q.x -= lam * q.y;
        return swap ? Pt{q.y, q.x} : q;
    }
};

Frame make_vertical(const Pt& a, const Pt& b) {
    Frame fr;
    fr.swap = (a.y == b.y);
    Pt a1 = fr.swap ? Pt{a.y, a.x} : a;
    Pt b1 = fr.swap ? Pt{b.y, b.x} : b;
    fr.lam = -(b1.x - a1.x) / (b1.y - a1.y);
    fr.negy = (a1.y > b1.y);
    return fr;
}

// Ordinate where the line p-q meets the vertical line x = c.
std::optional<Rat> crossing_y(const Pt& p, const Pt& q, const Rat& c) {
    if (p.x == q.x) return std::nullopt;
    return p.y + (c - p.x) * (q.y - p.y) / (q.x - p.x);
}

// Strict angular order of directions matching increasing atan2 values.
int atan2_class(const Pt& d) {
    if (d.y < 0) return 0;
    if (d.y == 0) return d.x > 0 ? 1 : 3;
    return 2;
}

bool ang_less(const Pt& d1, const Pt& d2) {
    int c1 = atan2_class(d1), c2 = atan2_class(d2);
    if (c1 != c2) return c1 < c2;
    return cross(d1, d2) > 0;
}

struct VerticalProbe {
    Rat c, ylo, yhi;
};

std::optional<Rat> brute_span(const std::vector<Pt>& g, const std::vector<Pt>& h,
                              const VerticalProbe& pr) {
    std::optional<Rat> best;
    for (const auto& p : g)
        for (const auto& q : h)
            if (auto y = crossing_y(p, q, pr.c))
                if (pr.ylo <= *y && *y <= pr.yhi && (!best || *y < *best)) best = *y;
    return best;
}

std::optional<Rat> rec_span(const std::vector<Pt>& g, const std::vector<Pt>& h,
                            const VerticalProbe& pr, int depth) {
    if (g.empty() || h.empty()) return std::nullopt;
    if (g.size() + h.size() <= 6 || depth > 200) return brute_span(g, h, pr);
    Pt a{pr.c, pr.ylo};
    const std::vector<Pt>& big = g.size() >= h.size() ? g : h;
    std::vector<Pt> s = big;
    std::sort(s.begin(), s.end(),
              [&](const Pt& p, const Pt& q) { return ang_less(p - a, q - a); });
    Pt m = s[s.size() / 2];
    auto side = [&](const Pt& p) { return sgn(cross(m - a, p - a)); };
    std::vector<Pt> gup, glo, hup, hlo;
    for (const auto& p : g) {
        if (side(p) >= 0) gup.push_back(p);
        if (side(p) <= 0) glo.push_back(p);
    }
    for (const auto& p : h) {
        if (side(p) >= 0) hup.push_back(p);
        if (side(p) <= 0) hlo.push_back(p);
    }
    std::optional<Rat> best;
    auto take = [&](const std::optional<Rat>& y) {
        if (y && (!best || *y < *best)) best = y;
    };
    // Within each same-side quadrant pair the lowest spanning pair is a hull
    // edge of the union that straddles the probe line.
    for (const auto* pair : {&gup, &glo}) {
        const std::vector<Pt>& x = *pair;
        const std::vector<Pt>& y = (pair == &gup) ? hup : hlo;
        if (x.empty() || y.empty()) continue;
        std::vector<Pt> uni = x;
        uni.insert(uni.end(), y.begin(), y.end());
        auto hull = convex_hull(uni);
        for (std::size_t i = 0; i < hull.size(); ++i) {
            const Pt& p = uni[hull[i]];
            const Pt& q = uni[hull[(i + 1) % hull.size()]];
            if ((p.x < pr.c) != (q.x < pr.c))
                if (auto cy = crossing_y(p, q, pr.c))
                    if (pr.ylo <= *cy && *cy <= pr.yhi) take(cy);
        }
    }
    // Mixed quadrants recurse; bail out to brute force if the split fails to
    // shrink (degenerate medians).
    std::size_t total = g.size() + h.size();
    if (gup.size() + hlo.size() >= total || glo.size() + hup.size() >= total)
        return brute_span(g, h, pr);
    take(rec_span(gup, hlo, pr, depth + 1));
    take(rec_span(glo, hup, pr, depth + 1));
    return best;
}

std::optional<Rat> one_sided_y(std::vector<Pt> pts, const VerticalProbe& pr) {
    Pt a{pr.c, pr.ylo};
    std::sort(pts.begin(), pts.end(),
              [&](const Pt& p, const Pt& q) { return ang_less(p - a, q - a); });
    std::optional<Rat> best;
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (auto y = crossing_y(pts[i - 1], pts[i], pr.c))
            if (pr.ylo <= *y && *y <= pr.yhi && (!best || *y < *best)) best = *y;
    return best;
}

struct SplitPoints {
    std::vector<Pt> left, right;  // x < c and x > c in the probe frame
};

SplitPoints split_by_probe(const std::vector<Pt>& f, const Frame& fr, const VerticalProbe& pr) {
    SplitPoints sp;
    for (const auto& p : f) {
        Pt q = fr.fwd(p);
        if (q.x < pr.c)
            sp.left.push_back(q);
        else if (q.x > pr.c)
            sp.right.push_back(q);
        else
            throw InputError("point collinear with probe segment");
    }
    return sp;
}

VerticalProbe probe_of(const Frame& fr, const Pt& lower, const Pt& upper) {
    Pt a = fr.fwd(lower), b = fr.fwd(upper);
    BIMATCH_CHECK(a.x == b.x && a.y < b.y, "probe frame construction failed");
    return {a.x, a.y, b.y};
}

}  // namespace

std::optional<Pt> lowest_crossing_spanning(const Pt& lower, const Pt& upper,
                                           const std::vector<Pt>& f) {
    if (lower == upper) throw InputError("degenerate probe segment");
    Frame fr = make_vertical(lower, upper);
    VerticalProbe pr = probe_of(fr, lower, upper);
    SplitPoints sp = split_by_probe(f, fr, pr);
    auto y = rec_span(sp.left, sp.right, pr, 0);
    if (!y) return std::nullopt;
    return fr.inv(Pt{pr.c, *y});
}

std::optional<Pt> lowest_crossing_one_sided(const Pt& lower, const Pt& upper,
                                            const std::vector<Pt>& f) {
    if (lower == upper) throw InputError("degenerate probe segment");
    Frame fr = make_vertical(lower, upper);
    VerticalProbe pr = probe_of(fr, lower, upper);
    SplitPoints sp = split_by_probe(f, fr, pr);
    if (!sp.left.empty() && !sp.right.empty())
        throw InputError("points on both sides of the probe line");
    auto y = one_sided_y(sp.left.empty() ? sp.right : sp.left, pr);
    if (!y) return std::nullopt;
    return fr.inv(Pt{pr.c, *y});
}

Pt general_position_point(const Pt& lower, const Pt& upper, const std::vector<Pt>& f) {
    if (lower == upper) throw InputError("degenerate probe segment");
    Frame fr = make_vertical(lower, upper);
    VerticalProbe pr = probe_of(fr, lower, upper);
    SplitPoints sp = split_by_probe(f, fr, pr);
    std::optional<Rat> best = rec_span(sp.left, sp.right, pr, 0);
    auto take = [&](const std::optional<Rat>& y) {
        if (y && (!best || *y < *best)) best = y;
    };
    take(one_sided_y(sp.left, pr));
    take(one_sided_y(sp.right, pr));
    Rat y = best ? (pr.ylo + *best) / 2 : (pr.ylo + pr.yhi) / 2;
    return fr.inv(Pt{pr.c, y});
}

namespace {

bool point_on_line(const DirectedLine& l, const Pt& p) { return l.side(p) == 0; }

bool any_point_on_line(const PointSet& ps, const DirectedLine& l) {
    for (const auto& p : ps.points())
        if (point_on_line(l, p.pos)) return true;
    return false;
}

bool valid_cut(const BRMatching& m, std::size_t i, std::size_t j, const DirectedLine& l) {
    auto crosses_interior = [&](std::size_t k) {
        return l.side(m.white_pt(k)) * l.side(m.black_pt(k)) < 0;
    };
    if (!crosses_interior(i) || !crosses_interior(j)) return false;
    if (l.side(m.black_pt(i)) * l.side(m.black_pt(j)) >= 0) return false;
    return !any_point_on_line(m.points(), l);
}

}  // namespace

ChromaticCutWitness chromatic_cut_from_pair(const BRMatching& m, std::size_t i, std::size_t j,
                                            const PairGeometry& geo) {
    if (geo.kind == PairGeometry::Kind::Antiparallel ||
        geo.kind == PairGeometry::Kind::CrossDifferentColorRays) {
        // Any line through inner points of both segments works; move the
        // inner points toward the white ends if it hits a set point.
        for (long k = 2; k <= 64; ++k) {
            Rat t = rat(1, k);
            Pt pa = m.white_pt(i) + (m.black_pt(i) - m.white_pt(i)) * t;
            Pt pb = m.white_pt(j) + (m.black_pt(j) - m.white_pt(j)) * t;
            DirectedLine l{pa, pb - pa};
            if (valid_cut(m, i, j, l)) return {l, i, j};
        }
        throw InternalError("no inner-point cut line found");
    }
    if (geo.kind == PairGeometry::Kind::RayCrossesSegment) {
        // One supporting line already crosses the other segment's interior;
        // tilt it slightly about its own midpoint so it crosses both.
        Pt x = *line_intersection(m.line(i), m.line(j));
        Pt di = m.black_pt(i) - m.white_pt(i);
        bool x_on_i = dot(x - m.white_pt(i), di) > 0 && dot(x - m.black_pt(i), di) < 0;
        std::size_t s = x_on_i ? j : i;  // segment whose line gets tilted
        Pt mid = (m.white_pt(s) + m.black_pt(s)) * rat(1, 2);
        Pt d = m.black_pt(s) - m.white_pt(s);
        Rat eps = rat(1, 2);
        for (int k = 0; k < 128; ++k, eps /= 2) {
            for (int sign : {1, -1}) {
                DirectedLine l{mid, d + perp(d) * (eps * sign)};
                if (valid_cut(m, i, j, l)) return {l, i, j};
            }
        }
        throw InternalError("no tilted cut line found");
    }
    throw InputError("pair geometry does not certify a chromatic cut");
}

namespace {

std::optional<DirectedLine> balanced_through_segment(const BRMatching& m, std::size_t seg) {
    const PointSet& ps = m.points();
    std::vector<Pt> others;
    others.reserve(ps.size() - 2);
    for (std::size_t k = 0; k < ps.size(); ++k)
        if (k != m[seg].white && k != m[seg].black) others.push_back(ps[k].pos);
    Pt p = general_position_point(m.white_pt(seg), m.black_pt(seg), others);

    // Candidate directions: strictly between consecutive rays of the
    // antipodally closed direction set toward all points, so no candidate
    // line passes through any point.
    std::vector<Pt> dirs;
    for (const auto& q : ps.points()) {
        dirs.push_back(q.pos - p);
        dirs.push_back(p - q.pos);
    }
    std::sort(dirs.begin(), dirs.end(), ang_less);
    dirs.erase(std::unique(dirs.begin(), dirs.end(),
                           [](const Pt& a, const Pt& b) {
                               return cross(a, b) == 0 && dot(a, b) > 0;
                           }),
               dirs.end());
    std::size_t k = dirs.size();
    for (std::size_t idx = 0; idx < k; ++idx) {
        const Pt& e1 = dirs[idx];
        const Pt& e2 = dirs[(idx + 1) % k];
        Pt d;
        if (cross(e1, e2) == 0)  // antipodal gap of exactly half a turn
            d = perp(e1);
        else
            d = e1 + e2;
        DirectedLine l{p, d};
        long wl = 0, bl = 0;
        bool clean = true;
        for (const auto& q : ps.points()) {
            int s = l.side(q.pos);
            if (s == 0) {
                clean = false;
                break;
            }
            if (s > 0) (q.color == Color::White ? wl : bl)++;
        }
        BIMATCH_CHECK(clean, "candidate balanced line hits a point");
        if (wl == bl) return l;
    }
    return std::nullopt;
}

}  // namespace

BalancedLine balanced_line_for_matching(const BRMatching& m, std::size_t i, std::size_t j) {
    if (auto l = balanced_through_segment(m, i)) return {*l, i};
    if (auto l = balanced_through_segment(m, j)) return {*l, j};
    throw InternalError("no balanced line through either segment of the witness pair");
}

}  // namespace bimatch
