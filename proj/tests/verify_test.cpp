#include <doctest.h>

#include <stdexcept>

#include "lrrc/verify.hpp"

using namespace lrrc;

TEST_CASE("corpus")
{
    auto c = rect_corpus({2, 2, 2});
    CHECK(c.size() == 5);
    CHECK(c.front().empty());
    CHECK(dominated_sequences({{1, 2}}) == std::vector<RectSeq>{{{1, 1}, {1, 1}}, {{1, 2}}});
    for (const auto& r : rect_corpus({5, 3, 3}))
        for (const auto& rp : dominated_sequences(r))
            CHECK(dominates(r, rp));
}

TEST_CASE("small sweeps")
{
    for (const auto& name : theorem_names()) {
        CAPTURE(name);
        auto rep = verify(name, {4, 2, 2}, 1);
        CHECK(rep.passed());
        CHECK(rep.cases > 0);
        CHECK(rep.failures.empty());
    }
    auto all = verify("all", {3, 2, 2});
    CHECK(all.passed());
    CHECK(to_json(all)["failure_count"] == 0);
    CHECK(format_report(all).find("PASS") != std::string::npos);
    CHECK_THROWS(verify("nonsense", {3, 2, 2}));
}
