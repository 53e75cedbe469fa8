#include <string>

#include "bimatch/io.hpp"
#include "bimatch/testlab.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace bimatch;

namespace {

std::size_t count_sub(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t at = hay.find(needle); at != std::string::npos;
         at = hay.find(needle, at + needle.size()))
        ++n;
    return n;
}

const char* kSquare =
    "2\n"
    "0 0 W\n"
    "0 2 B\n"
    "3 0 W\n"
    "3 2 B\n";

}  // namespace

TEST_CASE("point set round trip") {
    auto ps = parse_pointset(kSquare);
    CHECK(ps->pairs() == 2);
    CHECK(serialize_pointset(*ps) == kSquare);

    // fractions and blank lines survive
    auto f = parse_pointset("1\n\n  -1/2 2/3 W \n\n7 -8 B\n\n");
    CHECK((*f)[0].pos == Pt{rat(-1, 2), rat(2, 3)});
    CHECK(parse_pointset(serialize_pointset(*f))->points()[1].pos == Pt{7, -8});
}

TEST_CASE("point set parse errors") {
    CHECK_THROWS_AS(parse_pointset(""), InputError);
    CHECK_THROWS_AS(parse_pointset("x\n"), InputError);
    CHECK_THROWS_AS(parse_pointset("0\n"), InputError);
    CHECK_THROWS_AS(parse_pointset("2\n0 0 W\n"), InputError);                   // too few points
    CHECK_THROWS_AS(parse_pointset("1\n0 0 W\n1 1\n"), InputError);              // missing color
    CHECK_THROWS_AS(parse_pointset("1\n0 0 W\n1 1 R\n"), InputError);            // bad color
    CHECK_THROWS_AS(parse_pointset("1\n0 0 W\n1/0 1 B\n"), InputError);          // bad number
    CHECK_THROWS_AS(parse_pointset(std::string(kSquare) + "junk\n"), InputError);
    // duplicate point and collinear triple are caught by validation
    CHECK_THROWS_AS(parse_pointset("2\n0 0 W\n0 0 W\n1 0 B\n0 1 B\n"), InputError);
    CHECK_THROWS_AS(parse_pointset("2\n0 0 W\n1 1 W\n2 2 B\n0 5 B\n"), InputError);
}

TEST_CASE("matching round trip and errors") {
    auto ps = parse_pointset(kSquare);
    BRMatching m = parse_matching("2\n0 1\n2 3\n", ps);
    CHECK(serialize_matching(m) == "2\n0 1\n2 3\n");

    CHECK_THROWS_AS(parse_matching("1\n0 1\n", ps), InputError);        // size mismatch
    CHECK_THROWS_AS(parse_matching("2\n0 1\n2 9\n", ps), InputError);   // index range
    CHECK_THROWS_AS(parse_matching("2\n0 1\n2\n", ps), InputError);     // short line
    CHECK_THROWS_AS(parse_matching("2\n0 1\nx y\n", ps), InputError);   // not integers
    CHECK_THROWS_AS(parse_matching("2\n1 0\n3 2\n", ps), InputError);   // colors swapped
    CHECK_THROWS_AS(parse_matching("2\n0 3\n2 1\n", ps), InputError);   // crossing
}

TEST_CASE("svg rendering is deterministic and structured") {
    auto ps = fx::square();
    BRMatching m = fx::square_m();
    SvgOverlays ov;
    ov.lines.push_back(DirectedLine{{0, 1}, {1, 0}});
    ov.order = {0, 1};
    ov.annotations = {"example"};
    std::string svg = render_svg(*ps, &m, ov);
    CHECK(svg == render_svg(*ps, &m, ov));
    CHECK(count_sub(svg, "<circle") == 4);
    CHECK(count_sub(svg, "stroke=\"black\" fill=\"white\"") == 2);
    CHECK(count_sub(svg, "stroke=\"black\" fill=\"black\"") == 2);
    CHECK(count_sub(svg, "marker-end") == 2);
    CHECK(count_sub(svg, "stroke-dasharray") == 1);
    CHECK(count_sub(svg, ">example</text>") == 1);
    CHECK(count_sub(svg, "<text") == 3);  // two labels plus the annotation
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.rfind("</svg>\n") == svg.size() - 7);

    std::string bare = render_svg(*ps);
    CHECK(count_sub(bare, "<circle") == 4);
    CHECK(count_sub(bare, "marker-end") == 0);
}
