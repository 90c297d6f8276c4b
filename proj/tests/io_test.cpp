#include <doctest.h>

#include "lrrc/io.hpp"
#include "lrrc/lr.hpp"

using namespace lrrc;

TEST_CASE("text parsing")
{
    CHECK(parse_partition("5,4,3,2,2,1") == Partition{5, 4, 3, 2, 2, 1});
    CHECK(parse_partition("").empty());
    CHECK(format_partition({3, 1}) == "3,1");
    CHECK_THROWS(parse_partition("1,2"));
    CHECK_THROWS(parse_partition("a"));
    CHECK(parse_rects("3x2,2x4,1x3") == RectSeq{{3, 2}, {2, 4}, {1, 3}});
    CHECK(format_rects({{3, 2}, {1, 1}}) == "3x2,1x1");
    CHECK_THROWS(parse_rects("3"));
    CHECK_THROWS(parse_rects("0x2"));
}

TEST_CASE("tableau rendering")
{
    CHECK(format_tableau(Tableau{{{1, 3}, {2}}}) == "1 3\n2\n");
    auto ts = enumerate_clr({5, 4, 3, 2, 2, 1}, {{3, 2}, {2, 4}, {1, 3}});
    CHECK(format_tableaux(ts) ==
          "1 3 5 7 11\n2 4 6 12\n8 13 15\n9 14\n10 16\n17\n"
          "\n"
          "1 3 5 7 11\n2 4 6 15\n8 12 16\n9 13\n10 14\n17\n"
          "\n"
          "1 3 5 11 15\n2 4 6 12\n7 13 16\n8 14\n9 17\n10\n"
          "\n"
          "1 3 5 11 15\n2 4 6 16\n7 12 17\n8 13\n9 14\n10\n");
}

TEST_CASE("json round trips")
{
    Tableau t{{{1, 3, 5, 11, 15}, {2, 4, 6, 12}, {7, 13, 16}, {8, 14}, {9, 17}, {10}}};
    json j = to_json(t);
    CHECK(j["shape"] == json::array({5, 4, 3, 2, 2, 1}));
    CHECK(tableau_from_json(j) == t);
    RectSeq r{{3, 2}, {2, 4}, {1, 3}};
    CHECK(to_json(r) == json::parse("[[3,2],[2,4],[1,3]]"));
    CHECK(rects_from_json(to_json(r)) == r);
    RiggedConfig rc{{5, 4, 3, 2, 2, 1}, r, {{{3, 1}}, {{3, 0}, {1, 0}}, {{2, 0}, {1, 0}}, {{1, 0}}}};
    CHECK(rc_from_json(to_json(rc)) == rc);
    CHECK(to_json(rc)["nu"][1] == json::parse("[[3,0],[1,0]]"));
    CHECK(to_json(QPoly({0, 1, 1})) == json::parse("[0,1,1]"));
    CHECK_THROWS(rc_from_json(json::parse(R"({"lambda":[1],"rects":[[1,1]],"nu":[[[0,0]]]})")));
    CHECK_THROWS(tableau_from_json(json::parse(R"({"shape":[2],"rows":[[1]]})")));
}

TEST_CASE("rigged configuration rendering")
{
    RiggedConfig rc{{2}, {{1, 1}, {1, 1}}, {{{1, 0}}}};
    CHECK(!format_rc(rc).empty());
    CHECK(format_rc(rc).find("|1|") != std::string::npos);
}
