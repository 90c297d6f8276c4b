#include <doctest.h>

#include <map>
#include <tuple>

#include "lrrc/bijection.hpp"
#include "lrrc/errors.hpp"
#include "lrrc/lr.hpp"
#include "lrrc/verify.hpp"

using namespace lrrc;

namespace {

const RectSeq kR{{3, 2}, {2, 4}, {1, 3}};

Tableau third_example()
{
    return Tableau{{{1, 3, 5, 11, 15}, {2, 4, 6, 12}, {7, 13, 16}, {8, 14}, {9, 17}, {10}}};
}

RiggedConfig table_final()
{
    RiggedConfig rc{{5, 4, 3, 2, 2, 1}, kR, {{{3, 1}}, {{3, 0}, {1, 0}}, {{2, 0}, {1, 0}}, {{1, 0}}}};
    rc.canonicalize();
    return rc;
}

// (vacancy, length, label) per string of each rigged partition.
using Row = std::vector<std::vector<std::tuple<int, int, int>>>;

Row rendered(const RiggedConfig& rc)
{
    Row out;
    for (std::size_t k = 0; k < rc.nu.size(); ++k) {
        out.emplace_back();
        for (const auto& s : rc.nu[k])
            out.back().emplace_back(vacancy(rc, static_cast<int>(k) + 1, s.length), s.length, s.label);
    }
    return out;
}

} // namespace

TEST_CASE("golden trace")
{
    BijectionTrace tr;
    auto rc = phi_bar(third_example(), kR, &tr);
    CHECK(rc == table_final());
    REQUIRE(tr.size() == 17);
    std::map<int, Row> golden{
        {11, {{}, {{0, 1, 0}}, {{0, 1, 0}}}},
        {12, {{}, {{0, 2, 0}}, {{0, 2, 0}}}},
        {14, {{}, {{0, 2, 0}}, {{0, 2, 0}}}},
        {15, {{{1, 1, 1}}, {{0, 2, 0}, {0, 1, 0}}, {{0, 2, 0}, {0, 1, 0}}, {{0, 1, 0}}}},
        {16, {{{1, 2, 1}}, {{0, 3, 0}, {0, 1, 0}}, {{0, 2, 0}, {0, 1, 0}}, {{0, 1, 0}}}},
        {17, {{{1, 3, 1}}, {{1, 3, 0}, {0, 1, 0}}, {{0, 2, 0}, {0, 1, 0}}, {{0, 1, 0}}}},
    };
    for (const auto& [x, row] : golden) {
        CAPTURE(x);
        REQUIRE(tr[x - 1].letter == x);
        CHECK(rendered(tr[x - 1].rc) == row);
    }
    for (int x = 1; x <= 10; ++x)
        CHECK(tr[x - 1].rc.nu.empty());
    CHECK(tr[16].column == 2);
}

TEST_CASE("inverse and small cases")
{
    CHECK(phi_bar_inv(table_final()) == third_example());
    CHECK(phi_bar(Tableau{}, {}) == empty_rc({}, {}));
    CHECK(phi_bar_inv(empty_rc({}, {})) == Tableau{});
    auto single = phi_bar(Tableau{{{1, 3, 5}, {2, 4, 6}}}, {{3, 2}});
    CHECK(single.nu.empty());
    RectSeq boxes{{1, 1}, {1, 1}};
    auto two = phi_bar(Tableau{{{1, 2}}}, boxes);
    CHECK(two == RiggedConfig{{2}, boxes, {{{1, 0}}}});
    CHECK(phi_bar(Tableau{{{1}, {2}}}, boxes).nu.empty());
    CHECK(phi_bar_recursive(third_example(), kR) == table_final());
}

TEST_CASE("coquantum variant")
{
    for (const auto& r : rect_corpus({6, 3, 3}))
        for (const auto& [lam, ts] : enumerate_clr_all(r))
            for (const auto& t : ts) {
                CHECK(phi_tilde(t, r) == theta(phi_bar(t, r)));
                CHECK(phi_tilde_inv(phi_tilde(t, r)) == t);
            }
}

TEST_CASE("charge")
{
    RectSeq unit(3, Rect{1, 1});
    CHECK(charge(Tableau{{{1, 2}, {3}}}, unit) == 2);
    CHECK(charge(Tableau{{{1, 3}, {2}}}, unit) == 1);
    CHECK(charge(Tableau{{{1, 2, 3}}}, unit) == 3);
    CHECK(charge(Tableau{{{1}, {2}, {3}}}, unit) == 0);
    CHECK(charge(third_example(), kR) + cocharge(third_example(), kR) == 9);
    CHECK(charge(third_example(), kR) == cc(theta(table_final())));
    CHECK(charge(third_example(), kR) == 5);
}

TEST_CASE("embeddings")
{
    auto t = third_example();
    CHECK(embed(t, kR, kR) == t);
    RectSeq eq{{2, 1}, {2, 1}};
    for (const auto& [lam, ts] : enumerate_clr_all(eq))
        for (const auto& s : ts)
            CHECK(sigma_p(s, eq, 1) == s);
    RectSeq col{{1, 2}};
    RectSeq split{{1, 1}, {1, 1}};
    auto s = Tableau{{{1}, {2}}};
    auto img = i_plus(s, col, split);
    CHECK(img == s);
    CHECK_THROWS_AS(i_plus(s, col, col), math_error);
    for (const auto& r : rect_corpus({6, 3, 3}))
        for (const auto& rp : dominated_sequences(r))
            for (const auto& [lam, ts] : enumerate_clr_all(r))
                for (const auto& u : ts) {
                    auto v = embed(u, r, rp);
                    CHECK(is_clr(v, lam, rp));
                    CHECK(same_data(phi_tilde(v, rp), phi_tilde(u, r)));
                }
}

TEST_CASE("split contexts")
{
    CHECK(split_context(kR, 0).empty());
    CHECK(split_context(kR, 6) == RectSeq{{3, 2}});
    CHECK(total(split_context(kR, 12)) == 12);
}
