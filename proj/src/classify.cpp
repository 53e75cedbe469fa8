#include "bimatch/classify.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "bimatch/construct.hpp"

namespace bimatch {

namespace {

struct IncomparableFound {
    std::pair<std::size_t, std::size_t> pair_;
};

bool before(const BRMatching& m, std::size_t a, std::size_t b) {
    switch (sidedness(m, a, b)) {
        case SidednessOutcome::FirstBelowSecond:
            return true;
        case SidednessOutcome::SecondBelowFirst:
            return false;
        default:
            throw IncomparableFound{{a, b}};
    }
}

// Natural merge sort: split into maximal ascending runs, then merge pairwise.
// Near-sorted inputs cost close to n comparisons; each comparison is four
// orientation tests, so this matters at scale.
void msort(const BRMatching& m, std::vector<std::size_t>& v) {
    std::vector<std::size_t> bounds;  // run starts, plus v.size()
    bounds.push_back(0);
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!before(m, v[i - 1], v[i])) bounds.push_back(i);
    bounds.push_back(v.size());
    std::vector<std::size_t> buf(v.size());
    while (bounds.size() > 2) {
        std::vector<std::size_t> next;
        next.push_back(0);
        for (std::size_t r = 0; r + 2 < bounds.size(); r += 2) {
            std::size_t lo = bounds[r], mid = bounds[r + 1], hi = bounds[r + 2];
            std::size_t i = lo, j = mid, k = lo;
            while (i < mid && j < hi) buf[k++] = before(m, v[i], v[j]) ? v[i++] : v[j++];
            while (i < mid) buf[k++] = v[i++];
            while (j < hi) buf[k++] = v[j++];
            std::copy(buf.begin() + lo, buf.begin() + hi, v.begin() + lo);
            next.push_back(hi);
        }
        if (bounds.size() % 2 == 0) next.push_back(bounds.back());
        bounds = std::move(next);
    }
}

std::optional<std::pair<std::size_t, std::size_t>> sort_indices(const BRMatching& m,
                                                                std::vector<std::size_t>& v) {
    try {
        msort(m, v);
    } catch (const IncomparableFound& f) {
        return f.pair_;
    }
    return std::nullopt;
}

}  // namespace

SortOutcome sort_by_sidedness(const BRMatching& m) {
    SortOutcome out;
    out.order.resize(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) out.order[i] = i;
    out.incomparable = sort_indices(m, out.order);
    if (out.incomparable) {
        out.order.clear();
        return out;
    }
    out.consecutive_ok = true;
    for (std::size_t i = 0; i + 1 < out.order.size(); ++i) {
        if (sidedness(m, out.order[i], out.order[i + 1]) != SidednessOutcome::FirstBelowSecond) {
            out.consecutive_ok = false;
            break;
        }
    }
    return out;
}

DrumResult drum_property_check(const BRMatching& m, const std::vector<std::size_t>& sorted) {
    std::size_t n = sorted.size();
    if (n <= 1) return {true};
    auto pass = [&](auto at) -> std::optional<std::size_t> {
        int first = int(at(0));
        IncrementalHull hull(m.white_pt(at(0)), m.black_pt(at(0)), first);
        for (std::size_t j = 1; j < n; ++j) {
            int id = int(at(j));
            if (hull.extend(m.white_pt(at(j)), m.black_pt(at(j)), id, int(at(j - 1))) ==
                IncrementalHull::Extend::PointInside)
                return j;
            const auto& e = hull.segment_edges();
            if (e.size() != 2 || !e.count(first) || !e.count(id)) return j;
        }
        return std::nullopt;
    };
    if (auto f = pass([&](std::size_t j) { return sorted[j]; })) return {false, *f};
    if (auto f = pass([&](std::size_t j) { return sorted[n - 1 - j]; })) return {false, n - 1 - *f};
    return {true};
}

namespace {

// Verifies a submatching against its candidate order: consecutive relations
// plus the drum scan. nullopt = verified linear; a pair = incomparable
// witness; `failed` flag = non-witness failure (caller falls back).
struct LinearVerify {
    std::optional<std::pair<std::size_t, std::size_t>> witness;
    bool failed = false;
};

LinearVerify verify_linear(const BRMatching& m, const std::vector<std::size_t>& seq) {
    LinearVerify r;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        switch (sidedness(m, seq[i], seq[i + 1])) {
            case SidednessOutcome::FirstBelowSecond:
                break;
            case SidednessOutcome::Incomparable:
                r.witness = {seq[i], seq[i + 1]};
                return r;
            default:
                r.failed = true;
                return r;
        }
    }
    if (!drum_property_check(m, seq).ok) r.failed = true;
    return r;
}

std::optional<std::pair<std::size_t, std::size_t>> pairwise_scan(
    const BRMatching& m, const std::vector<std::size_t>& q) {
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = i + 1; j < q.size(); ++j)
            if (sidedness(m, q[i], q[j]) == SidednessOutcome::Incomparable)
                return std::make_pair(q[i], q[j]);
    return std::nullopt;
}

struct CircCtx {
    const BRMatching& m;
    std::vector<std::size_t> pos;  // segment -> cycle position
    bool order_broken = false;     // a verification step failed without a witness
};

// Splits q by the supporting line of segment a into left+{a} and right+{a},
// each sorted by candidate cycle order starting right after a (a itself
// first on the right, last on the left). A straddling segment is returned
// as an incomparable witness.
struct SideSplit {
    std::vector<std::size_t> leftp, rightp;
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

SideSplit split_sides(const CircCtx& cx, const std::vector<std::size_t>& q, std::size_t a) {
    SideSplit sp;
    DirectedLine g = cx.m.line(a);
    for (std::size_t x : q) {
        if (x == a) continue;
        int sw = g.side(cx.m.white_pt(x));
        int sb = g.side(cx.m.black_pt(x));
        BIMATCH_CHECK(sw != 0 && sb != 0, "segment endpoint on a supporting line");
        if (sw > 0 && sb > 0)
            sp.leftp.push_back(x);
        else if (sw < 0 && sb < 0)
            sp.rightp.push_back(x);
        else {
            sp.witness = {a, x};
            return sp;
        }
    }
    std::size_t n = cx.m.size();
    auto off = [&](std::size_t x) { return (cx.pos[x] - cx.pos[a] + n) % n; };
    auto cmp = [&](std::size_t x, std::size_t y) { return off(x) < off(y); };
    std::sort(sp.leftp.begin(), sp.leftp.end(), cmp);
    std::sort(sp.rightp.begin(), sp.rightp.end(), cmp);
    sp.rightp.insert(sp.rightp.begin(), a);  // a is the minimum of its right side
    sp.leftp.push_back(a);                   // and the maximum of its left side
    return sp;
}

std::optional<std::pair<std::size_t, std::size_t>> rec_nocut(CircCtx& cx,
                                                             const std::vector<std::size_t>& q) {
    if (cx.order_broken) return std::nullopt;
    if (q.size() <= 2) return pairwise_scan(cx.m, q);
    std::size_t a = q[0];
    SideSplit ma = split_sides(cx, q, a);
    if (ma.witness) return ma.witness;
    const std::vector<std::size_t>& larger =
        ma.leftp.size() >= ma.rightp.size() ? ma.leftp : ma.rightp;
    std::size_t b = larger[larger.size() / 2];
    if (b == a) b = larger[larger.size() / 2 > 0 ? larger.size() / 2 - 1 : 1];
    SideSplit nb = split_sides(cx, q, b);
    if (nb.witness) return nb.witness;
    for (const auto* seq : {&ma.leftp, &ma.rightp, &nb.leftp, &nb.rightp}) {
        LinearVerify v = verify_linear(cx.m, *seq);
        if (v.witness) return v.witness;
        if (v.failed) {
            cx.order_broken = true;
            return std::nullopt;
        }
    }
    std::unordered_set<std::size_t> n_left(nb.leftp.begin(), nb.leftp.end());
    std::vector<std::size_t> q1, q2;
    std::unordered_set<std::size_t> seen1, seen2;
    auto push = [](std::vector<std::size_t>& v, std::unordered_set<std::size_t>& s,
                   std::size_t x) {
        if (s.insert(x).second) v.push_back(x);
    };
    for (std::size_t x : ma.leftp)
        push(n_left.count(x) ? q1 : q2, n_left.count(x) ? seen1 : seen2, x);
    for (std::size_t x : ma.rightp)
        push(n_left.count(x) ? q2 : q1, n_left.count(x) ? seen2 : seen1, x);
    if (std::max(q1.size(), q2.size()) >= q.size()) return pairwise_scan(cx.m, q);
    if (auto w = rec_nocut(cx, q1)) return w;
    return rec_nocut(cx, q2);
}

}  // namespace

CircularResult is_circular(const BRMatching& m) {
    CircularResult res;
    auto runs = color_intervals(m.points());
    if (runs.size() != 1) {
        res.status = CircularResult::Status::WrongHullColors;
        return res;
    }
    std::size_t n = m.size();
    SideSplit top;
    {
        // Candidate cycle: segment 0, then its right side ascending, then
        // its left side ascending.
        DirectedLine g = m.line(0);
        std::vector<std::size_t> left, right;
        for (std::size_t x = 1; x < n; ++x) {
            int sw = g.side(m.white_pt(x)), sb = g.side(m.black_pt(x));
            BIMATCH_CHECK(sw != 0 && sb != 0, "segment endpoint on a supporting line");
            if (sw > 0 && sb > 0)
                left.push_back(x);
            else if (sw < 0 && sb < 0)
                right.push_back(x);
            else {
                res.status = CircularResult::Status::Incomparable;
                res.witness = {0, x};
                return res;
            }
        }
        for (auto* part : {&left, &right})
            if (auto w = sort_indices(m, *part)) {
                res.status = CircularResult::Status::Incomparable;
                res.witness = *w;
                return res;
            }
        res.cycle.push_back(0);
        res.cycle.insert(res.cycle.end(), right.begin(), right.end());
        res.cycle.insert(res.cycle.end(), left.begin(), left.end());
    }
    CircCtx cx{m, std::vector<std::size_t>(n), false};
    for (std::size_t i = 0; i < n; ++i) cx.pos[res.cycle[i]] = i;
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    auto w = rec_nocut(cx, all);
    if (!w && cx.order_broken) {
        // A verification step failed without producing a pair; the cut may
        // lie outside the subproblem at hand, so scan everything.
        w = has_chromatic_cut(m);
        BIMATCH_CHECK(w, "circular verification failed on a cut-free matching");
    }
    if (w) {
        res.status = CircularResult::Status::Incomparable;
        res.witness = *w;
        res.cycle.clear();
        return res;
    }
    for (std::size_t i = 0; i < n; ++i)
        BIMATCH_CHECK(sidedness(m, res.cycle[i], res.cycle[(i + 1) % n]) ==
                          SidednessOutcome::FirstBelowSecond,
                      "cycle consecutive relation violated");
    res.status = CircularResult::Status::Circular;
    return res;
}

Verdict classify(const BRMatching& m) {
    Verdict v;
    SortOutcome s = sort_by_sidedness(m);
    if (s.incomparable) {
        v.kind = Verdict::Kind::CutAdmitting;
        v.witness = *s.incomparable;
    } else if (s.consecutive_ok && drum_property_check(m, s.order).ok) {
        v.kind = Verdict::Kind::Linear;
        v.order = s.order;
    } else {
        CircularResult c = is_circular(m);
        switch (c.status) {
            case CircularResult::Status::Circular:
                v.kind = Verdict::Kind::Circular;
                v.order = c.cycle;
                break;
            case CircularResult::Status::Incomparable:
                v.kind = Verdict::Kind::CutAdmitting;
                v.witness = c.witness;
                break;
            case CircularResult::Status::WrongHullColors: {
                auto w = has_chromatic_cut(m);
                BIMATCH_CHECK(w, "non-linear matching with bichromatic hull has no cut");
                v.kind = Verdict::Kind::CutAdmitting;
                v.witness = *w;
                break;
            }
        }
    }
    // The hull color runs must agree with the verdict: linear matchings of
    // two or more segments show exactly two runs of size >= 2, circular
    // ones a monochromatic hull.
    auto runs = color_intervals(m.points());
    if (v.kind == Verdict::Kind::Linear && m.size() >= 2)
        BIMATCH_CHECK(runs.size() == 2 && runs[0].second >= 2 && runs[1].second >= 2,
                      "linear verdict contradicts hull color intervals");
    if (v.kind == Verdict::Kind::Circular)
        BIMATCH_CHECK(runs.size() == 1, "circular verdict with bichromatic hull");
    return v;
}

UniqueResult is_unique(std::shared_ptr<const PointSet> f) {
    BRMatching m = build_matching(std::move(f));
    SortOutcome s = sort_by_sidedness(m);
    if (!s.incomparable && s.consecutive_ok && drum_property_check(m, s.order).ok) {
        Verdict v;
        v.kind = Verdict::Kind::Linear;
        v.order = std::move(s.order);
        return {true, std::move(v), std::move(m)};
    }
    Verdict v = classify(m);
    BIMATCH_CHECK(v.kind != Verdict::Kind::Linear, "classification disagrees with drum scan");
    return {false, std::move(v), std::move(m)};
}

UniqueResult is_unique(const PointSet& f) {
    return is_unique(std::make_shared<const PointSet>(f));
}

ReferenceDirection reference_direction(const BRMatching& m, const Verdict& v) {
    if (v.kind != Verdict::Kind::Linear) throw InputError("reference direction needs a linear matching");
    std::vector<Pt> ds;
    ds.reserve(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) ds.push_back(m.black_pt(i) - m.white_pt(i));
    auto cls = [](const Pt& d) {
        if (d.y < 0) return 0;
        if (d.y == 0) return d.x > 0 ? 1 : 3;
        return 2;
    };
    std::sort(ds.begin(), ds.end(), [&](const Pt& p, const Pt& q) {
        int cp = cls(p), cq = cls(q);
        if (cp != cq) return cp < cq;
        return cross(p, q) > 0;
    });
    ds.erase(std::unique(ds.begin(), ds.end(),
                         [](const Pt& p, const Pt& q) { return cross(p, q) == 0 && dot(p, q) > 0; }),
             ds.end());
    Pt w;
    if (ds.size() == 1) {
        w = ds[0];
    } else {
        // The directions of a linear matching fit in an open half-circle:
        // exactly one circular gap between consecutive sorted directions
        // exceeds half a turn.
        std::optional<std::size_t> gap;
        for (std::size_t i = 0; i < ds.size(); ++i) {
            const Pt& u = ds[i];
            const Pt& nx = ds[(i + 1) % ds.size()];
            Rat c = cross(u, nx);
            if (c < 0 || (c == 0 && dot(u, nx) < 0)) {
                BIMATCH_CHECK(!gap, "segment directions span more than a half-circle");
                gap = i;
            }
        }
        BIMATCH_CHECK(gap, "segment directions span a full half-circle");
        const Pt& dmax = ds[*gap];
        const Pt& dmin = ds[(*gap + 1) % ds.size()];
        Pt u{dmax.y, -dmax.x};   // quarter turn clockwise from the last direction
        Pt vv{-dmin.y, dmin.x};  // quarter turn counterclockwise from the first
        BIMATCH_CHECK(cross(u, vv) != 0, "degenerate direction spread");
        w = u + vv;
    }
    for (std::size_t i = 0; i < m.size(); ++i)
        BIMATCH_CHECK(dot(w, m.black_pt(i) - m.white_pt(i)) > 0,
                      "reference direction fails forward projection");
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            DirectedLine gi = m.line(i), gj = m.line(j);
            if (cross(gi.dir, gj.dir) == 0) continue;
            Pt x = *line_intersection(gi, gj);
            Rat t = dot(x, w);
            Rat lo = dot(m.white_pt(i), w), hi = lo;
            for (const Pt* p : {&m.black_pt(i), &m.white_pt(j), &m.black_pt(j)}) {
                Rat s = dot(*p, w);
                lo = std::min(lo, s);
                hi = std::max(hi, s);
            }
            BIMATCH_CHECK(t < lo || t > hi,
                          "supporting-line crossing projects inside the segment shadows");
        }
    return {w};
}

TSetPartition tset_partition(const BRMatching& m, const std::vector<std::size_t>& cycle) {
    std::size_t n = cycle.size();
    if (n != m.size() || n < 3) throw InputError("tset partition needs a circular cycle");
    TSetPartition tp;
    tp.antipodal.resize(n, {0, 0});
    std::vector<int> side_of(n);
    for (std::size_t ci = 0; ci < n; ++ci) {
        std::size_t s = cycle[ci];
        DirectedLine g = m.line(s);
        for (std::size_t cj = 0; cj < n; ++cj) {
            if (cj == ci) continue;
            std::size_t x = cycle[cj];
            int sw = g.side(m.white_pt(x)), sb = g.side(m.black_pt(x));
            BIMATCH_CHECK(sw == sb && sw != 0, "segment straddles a supporting line");
            side_of[cj] = sw;
        }
        std::optional<std::size_t> found;
        for (std::size_t cj = 0; cj < n; ++cj) {
            std::size_t ck = (cj + 1) % n;
            if (cj == ci || ck == ci) continue;
            if (side_of[cj] != side_of[ck]) {
                BIMATCH_CHECK(!found, "multiple antipodal pairs");
                found = cj;
            }
        }
        BIMATCH_CHECK(found, "no antipodal pair");
        tp.antipodal[s] = {cycle[*found], cycle[(*found + 1) % n]};
    }
    // Twin classes: runs of equal antipodal pairs along the cycle.
    for (std::size_t ci = 0; ci < n; ++ci) {
        std::size_t s = cycle[ci];
        if (!tp.blocks.empty() && tp.antipodal[tp.blocks.back().back()] == tp.antipodal[s])
            tp.blocks.back().push_back(s);
        else
            tp.blocks.push_back({s});
    }
    if (tp.blocks.size() > 1 &&
        tp.antipodal[tp.blocks.front().front()] == tp.antipodal[tp.blocks.back().back()]) {
        auto& back = tp.blocks.back();
        back.insert(back.end(), tp.blocks.front().begin(), tp.blocks.front().end());
        tp.blocks.front() = std::move(back);
        tp.blocks.pop_back();
    }
    // Contiguity: no antipodal pair may label two different blocks.
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& b : tp.blocks)
        BIMATCH_CHECK(seen.insert(tp.antipodal[b.front()]).second, "twin class not contiguous");
    return tp;
}

bool circular_triple(const BRMatching& m, const std::vector<std::size_t>& cycle, std::size_t x,
                     std::size_t y, std::size_t z) {
    if (x == y || y == z || x == z) throw InputError("circular triple needs distinct segments");
    int cnt = 0;
    cnt += sidedness(m, x, y) == SidednessOutcome::FirstBelowSecond;
    cnt += sidedness(m, y, z) == SidednessOutcome::FirstBelowSecond;
    cnt += sidedness(m, z, x) == SidednessOutcome::FirstBelowSecond;
    bool rel = cnt >= 2;
    std::size_t n = cycle.size(), px = 0, py = 0, pz = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (cycle[i] == x) px = i;
        if (cycle[i] == y) py = i;
        if (cycle[i] == z) pz = i;
    }
    bool positional = ((py - px + n) % n) < ((pz - px + n) % n);
    BIMATCH_CHECK(rel == positional, "ternary relation disagrees with cycle positions");
    return rel;
}

std::uint64_t census_sidedness_relations(int n) {
    if (n < 3 || n > 20) throw InputError("census supports 3 <= n <= 20");
    // n lines through the origin with strictly increasing rational-slope
    // directions in the upper half-plane.
    std::vector<Pt> d(n);
    for (int k = 0; k < n; ++k)
        d[k] = Pt{rat(long(n) * n - long(k) * k), rat(2L * k * n)};
    // outcome[i][j][si][sj]: does segment i (on ray si of line i) precede
    // segment j? Computed from real coordinates; every pair is comparable.
    auto seg_pts = [&](int i, int s) {
        Pt w = d[i] * rat(s), b = d[i] * rat(2 * s);
        return std::make_pair(w, b);
    };
    std::vector<std::array<std::array<std::array<bool, 2>, 2>, 20>> outcome(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int si = 0; si < 2; ++si)
                for (int sj = 0; sj < 2; ++sj) {
                    auto [wi, bi] = seg_pts(i, si ? 1 : -1);
                    auto [wj, bj] = seg_pts(j, sj ? 1 : -1);
                    DirectedLine gi{wi, bi - wi}, gj{wj, bj - wj};
                    int a = gi.side(wj), b2 = gi.side(bj), c = gj.side(wi), e = gj.side(bi);
                    BIMATCH_CHECK(a != 0 && b2 != 0 && c != 0 && e != 0, "degenerate census pair");
                    bool i_first = a < 0 && b2 < 0 && c > 0 && e > 0;
                    bool j_first = a > 0 && b2 > 0 && c < 0 && e < 0;
                    BIMATCH_CHECK(i_first != j_first, "incomparable census pair");
                    outcome[i][j][si][sj] = i_first;
                }
    std::set<std::vector<char>> nonlinear;
    std::uint64_t total = std::uint64_t(1) << (n - 1);
    std::vector<int> ray(n);
    for (std::uint64_t occ = 0; occ < total; ++occ) {
        // Base pattern alternates rays; occupancy bit k flips line k (line 0
        // fixed occupied on its base ray).
        for (int k = 0; k < n; ++k) {
            bool base_up = (k % 2 == 0);
            bool flip = k > 0 && ((occ >> (k - 1)) & 1);
            ray[k] = (base_up != flip) ? 1 : 0;
        }
        std::vector<char> fp;
        fp.reserve(std::size_t(n) * (n - 1) / 2);
        std::vector<int> outdeg(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                bool f = outcome[i][j][ray[i]][ray[j]];
                fp.push_back(f ? 1 : 0);
                ++outdeg[f ? i : j];
            }
        std::vector<int> sorted_deg = outdeg;
        std::sort(sorted_deg.begin(), sorted_deg.end());
        bool linear = true;
        for (int k = 0; k < n; ++k)
            if (sorted_deg[k] != k) {
                linear = false;
                break;
            }
        if (!linear) nonlinear.insert(std::move(fp));
    }
    std::uint64_t count = nonlinear.size();
    BIMATCH_CHECK(count == total - std::uint64_t(n), "census disagrees with the closed formula");
    return count;
}

}  // namespace bimatch
