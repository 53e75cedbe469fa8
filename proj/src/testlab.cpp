#include "bimatch/testlab.hpp"

#include <algorithm>
#include <random>

namespace bimatch {

namespace {

void oracle_rec(const PointSet& ps, const std::vector<std::size_t>& whites,
                const std::vector<std::size_t>& blacks, std::vector<char>& used,
                std::vector<Segment>& partial, std::shared_ptr<const PointSet> owner,
                std::vector<BRMatching>& out) {
    std::size_t k = partial.size();
    if (k == whites.size()) {
        out.emplace_back(owner, partial);
        return;
    }
    for (std::size_t bi = 0; bi < blacks.size(); ++bi) {
        if (used[bi]) continue;
        Segment cand{whites[k], blacks[bi]};
        bool ok = true;
        for (const Segment& s : partial)
            if (segments_cross(ps, s, cand)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        used[bi] = 1;
        partial.push_back(cand);
        oracle_rec(ps, whites, blacks, used, partial, owner, out);
        partial.pop_back();
        used[bi] = 0;
    }
}

}  // namespace

OracleResult enumerate_all_matchings(std::shared_ptr<const PointSet> f) {
    f->validate();
    if (f->pairs() > 8) throw InputError("oracle enumeration is limited to 8 segment pairs");
    std::vector<std::size_t> whites, blacks;
    for (std::size_t i = 0; i < f->size(); ++i)
        ((*f)[i].color == Color::White ? whites : blacks).push_back(i);
    OracleResult res;
    std::vector<char> used(blacks.size(), 0);
    std::vector<Segment> partial;
    oracle_rec(*f, whites, blacks, used, partial, f, res.all);
    return res;
}

GeneratedMatching gen_parallel(std::size_t n, long spacing) {
    if (n < 1 || spacing < 1) throw InputError("gen_parallel needs n >= 1 and spacing >= 1");
    // Whites on a flat upward parabola, blacks exactly one unit above them.
    // Any line through two whites stays below 1/2 over the occupied x-range,
    // while every black sits above 1/2 (and symmetrically for blacks), so no
    // three points are collinear; same-parabola triples are convex.
    Rat tau = Rat(1) / (Rat(8) * Rat((long)n) * Rat((long)n) * Rat((long)n));
    std::vector<Point> pts;
    pts.reserve(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
        Rat x = Rat(spacing) * Rat((long)k);
        Rat y = tau * Rat((long)k) * Rat((long)k);
        pts.push_back({{x, y}, Color::White});
    }
    for (std::size_t k = 0; k < n; ++k) {
        Rat x = Rat(spacing) * Rat((long)k);
        Rat y = Rat(1) + tau * Rat((long)k) * Rat((long)k);
        pts.push_back({{x, y}, Color::Black});
    }
    auto ps = std::make_shared<const PointSet>(std::move(pts));
    std::vector<Segment> segs;
    segs.reserve(n);
    for (std::size_t k = 0; k < n; ++k) segs.push_back({k, n + k});
    bool skip = n > 512;  // vertical disjoint segments; quadratic check is for desk scale
    return {ps, BRMatching(ps, std::move(segs), skip)};
}

GeneratedMatching gen_radial(std::size_t n, const std::vector<bool>& occupancy,
                             const Rat& inner_r, const Rat& outer_r) {
    if (n < 3) throw InputError("gen_radial needs n >= 3");
    if (occupancy.size() != n) throw InputError("occupancy must have one flag per line");
    if (!(0 < inner_r && inner_r < outer_r))
        throw InputError("radii must satisfy 0 < inner < outer");
    long ln = (long)n;
    std::vector<Pt> dirs;
    std::vector<int> sign;
    for (long k = 0; k < ln; ++k) {
        // Strictly increasing angles within the upper half-plane.
        dirs.push_back({rat(ln * ln - k * k), rat(2 * k * ln)});
        int s = (k % 2 == 0) ? 1 : -1;
        if (!occupancy[(std::size_t)k]) s = -s;
        sign.push_back(s);
    }
    for (int attempt = 0; attempt < 64; ++attempt) {
        // Scale both radii of segment k by a distinct factor to break any
        // accidental collinearity across three lines.
        Rat eps = Rat(1) / Rat((ln + 2) * (attempt + 2));
        std::vector<Point> pts(2 * n);
        for (long k = 0; k < ln; ++k) {
            Rat mul = Rat(1) + eps * Rat(k + 1);
            Pt d = dirs[(std::size_t)k] * (Rat(sign[(std::size_t)k]) * mul);
            pts[(std::size_t)k] = {d * inner_r, Color::White};
            pts[n + (std::size_t)k] = {d * outer_r, Color::Black};
        }
        if (find_collinear_triple(pts)) continue;
        auto ps = std::make_shared<const PointSet>(std::move(pts));
        ps->validate();
        std::vector<Segment> segs;
        for (std::size_t k = 0; k < n; ++k) segs.push_back({k, n + k});
        return {ps, BRMatching(ps, std::move(segs))};
    }
    throw InternalError("gen_radial could not reach general position");
}

std::shared_ptr<const PointSet> gen_duplication(const PointSet& f, Pt direction, Rat distance) {
    f.validate();
    if (direction.x == 0 && direction.y == 0) throw InputError("zero duplication direction");
    if (sgn(distance) <= 0) throw InputError("duplication distance must be positive");
    // Shrink the offset until every partner pair is far smaller than the gap
    // between original points; the partner matching then stays non-crossing
    // and, per segment, parallel.
    Rat min_d2 = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            Pt d = f[j].pos - f[i].pos;
            Rat d2 = dot(d, d);
            if (min_d2 == 0 || d2 < min_d2) min_d2 = d2;
        }
    Rat dir2 = dot(direction, direction);
    while (distance * distance * dir2 * 64 >= min_d2) distance /= 2;
    Pt perp{-direction.y, direction.x};
    for (int attempt = 0; attempt < 97; ++attempt) {
        // Tilt the offset direction and shrink its length on retry; either
        // alone can leave a collinearity intact (a fixed direction against a
        // pair of original points, a fixed length against an axis-aligned
        // original pair plus a third point at the matching offset).
        Pt d = direction + perp * rat(attempt, 97);
        Rat dist = distance / Rat(attempt + 1);
        std::vector<Point> pts;
        pts.reserve(2 * f.size());
        for (const Point& p : f.points()) {
            pts.push_back(p);
            Pt off = d * (p.color == Color::White ? dist : -dist);
            pts.push_back({p.pos + off, other(p.color)});
        }
        if (find_collinear_triple(pts)) continue;
        auto ps = std::make_shared<const PointSet>(std::move(pts));
        ps->validate();
        return ps;
    }
    throw InternalError("gen_duplication could not avoid collinearity");
}

GeneratedMatching gen_nonparallelizable() {
    // Frozen coordinates, found once by a slack-maximizing search over the
    // endpoint heights and verified exactly: the matching is linear (order
    // A, D, E, F, B, C) and in general position, while the orientation of
    // the tilted triple A, B, C blocks any parallel redrawing with the same
    // order type. Whites are the lower endpoints throughout.
    struct Raw {
        long wx, wy, bx, by;
    };
    static const Raw raw[6] = {
        {-12, -3000, -18, 3000},  // A
        {94, 2620, 82, 2714},     // B
        {126, 2658, 98, 2776},    // C
        {-4, 1662, -4, 1672},     // D
        {27, -2035, 27, -1971},   // E
        {77, 868, 77, 918},       // F
    };
    std::vector<Point> pts(12);
    for (std::size_t k = 0; k < 6; ++k) {
        pts[k] = {{rat(raw[k].wx), rat(raw[k].wy)}, Color::White};
        pts[6 + k] = {{rat(raw[k].bx), rat(raw[k].by)}, Color::Black};
    }
    auto ps = std::make_shared<const PointSet>(std::move(pts));
    ps->validate();
    std::vector<Segment> segs;
    for (std::size_t k = 0; k < 6; ++k) segs.push_back({k, 6 + k});
    return {ps, BRMatching(ps, std::move(segs))};
}

std::shared_ptr<const PointSet> gen_random(std::size_t n, std::uint64_t seed, long coord_bound) {
    if (n < 1) throw InputError("gen_random needs n >= 1");
    if (coord_bound < 4) throw InputError("coordinate bound too small");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(-coord_bound, coord_bound);
    for (int attempt = 0; attempt < 4096; ++attempt) {
        std::vector<Point> pts;
        pts.reserve(2 * n);
        bool dup = false;
        for (std::size_t i = 0; i < 2 * n && !dup; ++i) {
            Pt p{rat(coord(rng)), rat(coord(rng))};
            for (const Point& q : pts)
                if (q.pos == p) {
                    dup = true;
                    break;
                }
            pts.push_back({p, i < n ? Color::White : Color::Black});
        }
        if (dup || find_collinear_triple(pts)) continue;
        auto ps = std::make_shared<const PointSet>(std::move(pts));
        ps->validate();
        return ps;
    }
    throw InternalError("gen_random could not reach general position");
}

}  // namespace bimatch
