#include <cstdint>

#include "bimatch/classify.hpp"
#include "bimatch/testlab.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace bimatch;

TEST_CASE("sidedness sort") {
    auto gp = gen_parallel(6);
    SortOutcome s = sort_by_sidedness(gp.matching);
    REQUIRE(!s.incomparable);
    CHECK(s.consecutive_ok);
    CHECK(s.order == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});

    SortOutcome a = sort_by_sidedness(fx::anti_m());
    REQUIRE(a.incomparable);
    CHECK(*a.incomparable == std::make_pair(std::size_t(0), std::size_t(1)));
    CHECK(a.order.empty());
}

TEST_CASE("cyclic relations slip past the sort but fail the drum scan") {
    BRMatching st = fx::star3_m();
    SortOutcome s = sort_by_sidedness(st);
    REQUIRE(!s.incomparable);
    CHECK(s.consecutive_ok);
    CHECK(!drum_property_check(st, s.order).ok);
}

TEST_CASE("drum scan accepts genuinely sorted matchings") {
    for (std::size_t n : {2, 5, 9}) {
        auto gp = gen_parallel(n);
        SortOutcome s = sort_by_sidedness(gp.matching);
        REQUIRE(!s.incomparable);
        CHECK(drum_property_check(gp.matching, s.order).ok);
    }
}

TEST_CASE("classification of the three shapes") {
    Verdict sq = classify(fx::square_m());
    CHECK(sq.kind == Verdict::Kind::Linear);
    CHECK(sq.order == std::vector<std::size_t>{0, 1});

    Verdict st = classify(fx::star3_m());
    CHECK(st.kind == Verdict::Kind::Circular);
    CHECK(st.order == std::vector<std::size_t>{0, 1, 2});

    Verdict an = classify(fx::anti_m());
    CHECK(an.kind == Verdict::Kind::CutAdmitting);
    CHECK(an.witness == std::make_pair(std::size_t(0), std::size_t(1)));
}

TEST_CASE("uniqueness decision") {
    CHECK(is_unique(fx::square()).unique);
    CHECK(!is_unique(fx::anti()).unique);
    UniqueResult st = is_unique(fx::star3());
    CHECK(!st.unique);
    CHECK(st.verdict.kind == Verdict::Kind::Circular);
}

TEST_CASE("reference direction") {
    auto gp = gen_parallel(5);
    Verdict v = classify(gp.matching);
    REQUIRE(v.kind == Verdict::Kind::Linear);
    ReferenceDirection rd = reference_direction(gp.matching, v);
    CHECK(cross(rd.direction, Pt{0, 1}) == 0);
    for (std::size_t i = 0; i < gp.matching.size(); ++i)
        CHECK(dot(rd.direction, gp.matching.black_pt(i) - gp.matching.white_pt(i)) > 0);

    auto np = gen_nonparallelizable();
    Verdict nv = classify(np.matching);
    REQUIRE(nv.kind == Verdict::Kind::Linear);
    ReferenceDirection nrd = reference_direction(np.matching, nv);
    for (std::size_t i = 0; i < np.matching.size(); ++i)
        CHECK(dot(nrd.direction, np.matching.black_pt(i) - np.matching.white_pt(i)) > 0);

    Verdict cv = classify(fx::star3_m());
    CHECK_THROWS_AS(reference_direction(fx::star3_m(), cv), InputError);
}

TEST_CASE("antipodal twin classes on the smallest cycle") {
    BRMatching st = fx::star3_m();
    Verdict v = classify(st);
    REQUIRE(v.kind == Verdict::Kind::Circular);
    TSetPartition tp = tset_partition(st, v.order);
    CHECK(tp.blocks.size() == 3);
    CHECK(tp.antipodal[0] == std::make_pair(std::size_t(1), std::size_t(2)));
    CHECK(tp.antipodal[1] == std::make_pair(std::size_t(2), std::size_t(0)));
    CHECK(tp.antipodal[2] == std::make_pair(std::size_t(0), std::size_t(1)));
    CHECK_THROWS_AS(tset_partition(st, {0, 1}), InputError);
}

TEST_CASE("ternary cyclic relation") {
    BRMatching st = fx::star3_m();
    std::vector<std::size_t> cycle{0, 1, 2};
    CHECK(circular_triple(st, cycle, 0, 1, 2));
    CHECK(circular_triple(st, cycle, 1, 2, 0));
    CHECK(!circular_triple(st, cycle, 0, 2, 1));
    CHECK_THROWS_AS(circular_triple(st, cycle, 0, 0, 1), InputError);
}

TEST_CASE("radial relation census, small values") {
    CHECK(census_sidedness_relations(3) == 1);
    CHECK(census_sidedness_relations(4) == 4);
    CHECK(census_sidedness_relations(5) == 11);
    CHECK(census_sidedness_relations(6) == 26);
    CHECK(census_sidedness_relations(7) == 57);
    CHECK(census_sidedness_relations(8) == 120);
    CHECK_THROWS_AS(census_sidedness_relations(2), InputError);
    CHECK_THROWS_AS(census_sidedness_relations(21), InputError);
}

TEST_CASE("tilted pinned configuration sorts as expected") {
    auto np = gen_nonparallelizable();
    SortOutcome s = sort_by_sidedness(np.matching);
    REQUIRE(!s.incomparable);
    CHECK(s.order == std::vector<std::size_t>{0, 3, 4, 5, 1, 2});
    CHECK(drum_property_check(np.matching, s.order).ok);
}
