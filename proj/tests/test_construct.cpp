#include <algorithm>
#include <set>

#include "bimatch/classify.hpp"
#include "bimatch/construct.hpp"
#include "bimatch/testlab.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace bimatch;

namespace {

std::set<std::pair<std::size_t, std::size_t>> seg_set(const BRMatching& m) {
    std::set<std::pair<std::size_t, std::size_t>> s;
    for (const Segment& e : m.segments()) s.insert({e.white, e.black});
    return s;
}

bool oracle_contains(const OracleResult& o, const BRMatching& m) {
    auto want = seg_set(m);
    for (const BRMatching& c : o.all)
        if (seg_set(c) == want) return true;
    return false;
}

void check_balanced_split(const PointSet& ps) {
    HamSandwichCut cut = ham_sandwich(ps);
    long n = long(ps.pairs());
    long lw = 0, rw = 0, lb = 0, rb = 0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        int s = (i == cut.on_line[0] || i == cut.on_line[1]) ? 0 : cut.line.side(ps[i].pos);
        if (s == 0) continue;
        (ps[i].color == Color::White ? (s > 0 ? lw : rw) : (s > 0 ? lb : rb))++;
    }
    CHECK(lw <= n / 2);
    CHECK(rw <= n / 2);
    CHECK(lb <= n / 2);
    CHECK(rb <= n / 2);
    for (std::size_t i : cut.on_line) CHECK(cut.line.side(ps[i].pos) == 0);
}

}  // namespace

TEST_CASE("two-point balanced split") {
    check_balanced_split(*fx::square());
    check_balanced_split(*fx::star3());
    for (std::uint64_t seed = 1; seed <= 6; ++seed)
        check_balanced_split(*gen_random(4 + seed % 4, seed, 50));
}

TEST_CASE("constructed matchings are among the enumerated ones") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        auto ps = gen_random(3 + seed % 3, seed, 60);
        BRMatching m = build_matching(ps);  // constructor validates non-crossing
        OracleResult all = enumerate_all_matchings(ps);
        CHECK(all.count() >= 1);
        CHECK(oracle_contains(all, m));
    }
    BRMatching st = build_matching(fx::star3());
    CHECK(seg_set(st) == seg_set(fx::star3_m()));
}

TEST_CASE("exhaustive enumeration counts") {
    CHECK(enumerate_all_matchings(fx::square()).count() == 1);
    CHECK(enumerate_all_matchings(fx::anti()).count() == 2);
    CHECK(enumerate_all_matchings(fx::star3()).count() == 3);
    CHECK_THROWS_AS(enumerate_all_matchings(gen_parallel(9).points), InputError);
}

TEST_CASE("alternating path pair") {
    auto gp = gen_parallel(5);
    Verdict v = classify(gp.matching);
    REQUIRE(v.kind == Verdict::Kind::Linear);
    auto [fwd, rev] = build_alternating_paths(gp.matching, v.order);
    REQUIRE(fwd.vertices.size() == 10);
    REQUIRE(rev.vertices.size() == 10);
    const PointSet& ps = gp.matching.points();
    std::set<std::size_t> seen(fwd.vertices.begin(), fwd.vertices.end());
    CHECK(seen.size() == 10);
    for (std::size_t k = 0; k < fwd.vertices.size(); ++k) {
        Color want = k % 2 == 0 ? Color::White : Color::Black;
        CHECK(ps[fwd.vertices[k]].color == want);
        CHECK(ps[rev.vertices[k]].color == other(want));
    }
    // odd edges traverse matching segments
    for (std::size_t k = 0; k + 1 < fwd.vertices.size(); k += 2) {
        Segment s{fwd.vertices[k], fwd.vertices[k + 1]};
        CHECK(std::count(gp.matching.segments().begin(), gp.matching.segments().end(), s) == 1);
    }
    CHECK_THROWS_AS(build_alternating_paths(gp.matching, {0, 1}), InputError);
}

TEST_CASE("both cycle-shift alternatives of a circular matching") {
    BRMatching st = fx::star3_m();
    Verdict v = classify(st);
    REQUIRE(v.kind == Verdict::Kind::Circular);
    auto [m1, m2] = alternative_matchings_circular(st, v.order);
    CHECK(seg_set(m1) ==
          std::set<std::pair<std::size_t, std::size_t>>{{0, 4}, {1, 5}, {2, 3}});
    CHECK(seg_set(m2) ==
          std::set<std::pair<std::size_t, std::size_t>>{{1, 3}, {2, 4}, {0, 5}});
    OracleResult all = enumerate_all_matchings(fx::star3());
    CHECK(oracle_contains(all, m1));
    CHECK(oracle_contains(all, m2));
    CHECK_THROWS_AS(alternative_matchings_circular(st, {0, 1}), InputError);
}

TEST_CASE("rebuilding across a balanced line avoids the crossed segment") {
    BRMatching an = fx::anti_m();
    Verdict v = classify(an);
    REQUIRE(v.kind == Verdict::Kind::CutAdmitting);
    BalancedLine bl = balanced_line_for_matching(an, v.witness.first, v.witness.second);
    BRMatching alt = alternative_matching_via_balanced_line(an, bl);
    CHECK(seg_set(alt) == std::set<std::pair<std::size_t, std::size_t>>{{0, 3}, {1, 2}});
}
