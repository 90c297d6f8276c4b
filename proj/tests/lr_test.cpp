#include <doctest.h>

#include <set>

#include "lrrc/errors.hpp"
#include "lrrc/lr.hpp"
#include "lrrc/verify.hpp"

using namespace lrrc;

namespace {

const RectSeq kR{{3, 2}, {2, 4}, {1, 3}};
const Partition kLambda{5, 4, 3, 2, 2, 1};

std::vector<Tableau> example_members()
{
    return {
        Tableau{{{1, 3, 5, 7, 11}, {2, 4, 6, 12}, {8, 13, 15}, {9, 14}, {10, 16}, {17}}},
        Tableau{{{1, 3, 5, 7, 11}, {2, 4, 6, 15}, {8, 12, 16}, {9, 13}, {10, 14}, {17}}},
        Tableau{{{1, 3, 5, 11, 15}, {2, 4, 6, 12}, {7, 13, 16}, {8, 14}, {9, 17}, {10}}},
        Tableau{{{1, 3, 5, 11, 15}, {2, 4, 6, 16}, {7, 12, 17}, {8, 13}, {9, 14}, {10}}},
    };
}

} // namespace

TEST_CASE("canonical fillings")
{
    auto ctx = make_context(kR);
    CHECK(ctx.zc[0] == Tableau{{{1, 3, 5}, {2, 4, 6}}});
    CHECK(ctx.zc[1] == Tableau{{{7, 11}, {8, 12}, {9, 13}, {10, 14}}});
    CHECK(ctx.zc[2] == Tableau{{{15}, {16}, {17}}});
    CHECK(ctx.zr[0] == Tableau{{{1, 2, 3}, {4, 5, 6}}});
    CHECK(ctx.block_of(7) == 1);
    CHECK(ctx.zc_cell(12) == Cell{2, 2});
    CHECK(ctx.size() == 17);
}

TEST_CASE("membership of the listed tableaux")
{
    for (const auto& t : example_members()) {
        CHECK(is_clr_insertion(t, kLambda, kR));
        CHECK(is_clr_fast(t, kLambda, kR));
    }
    Tableau s{{{1, 3}, {2, 4}}};
    RectSeq cols{{1, 2}, {1, 2}};
    CHECK(is_clr_insertion(s, {2, 2}, cols) == is_clr_fast(s, {2, 2}, cols));
    CHECK(is_clr(s, {2, 2}, cols));
    CHECK_FALSE(is_clr(Tableau{{{1, 2}, {3, 4}}}, {2, 2}, cols));
    CHECK_FALSE(is_clr(s, {3, 1}, cols));
}

TEST_CASE("enumeration")
{
    CHECK(enumerate_clr(kLambda, kR) == example_members());
    RectSeq boxes(3, Rect{1, 1});
    CHECK(enumerate_clr({2, 1}, boxes).size() == 2);
    auto single = enumerate_clr({3, 3}, {{3, 2}});
    REQUIRE(single.size() == 1);
    CHECK(single[0] == Tableau{{{1, 3, 5}, {2, 4, 6}}});
    CHECK(enumerate_clr({3}, {{1, 1}}).empty());
    CHECK(lr_coefficient(kLambda, kR) == 4);
    for (int n = 0; n <= 6; ++n) {
        RectSeq unit(n, Rect{1, 1});
        for (const auto& lam : partitions_of(n)) {
            auto a = enumerate_clr(lam, unit);
            auto b = standard_tableaux(lam);
            CHECK(std::set<Tableau>(a.begin(), a.end()) == std::set<Tableau>(b.begin(), b.end()));
            CHECK(a.size() == b.size());
        }
    }
}

TEST_CASE("membership predicates agree on all standard tableaux")
{
    for (const auto& r : rect_corpus({7, 3, 3}))
        for (const auto& lam : partitions_of(total(r))) {
            std::set<Tableau> members;
            for (const auto& s : standard_tableaux(lam)) {
                bool a = is_clr_insertion(s, lam, r);
                CHECK(a == is_clr_fast(s, lam, r));
                if (a)
                    members.insert(s);
            }
            auto e = enumerate_clr(lam, r);
            CHECK(std::set<Tableau>(e.begin(), e.end()) == members);
        }
}

TEST_CASE("relabelings and transposition")
{
    RectSeq unit(4, Rect{1, 1});
    for (const auto& s : enumerate_clr({2, 1, 1}, unit)) {
        CHECK(gamma(s, unit) == s);
        CHECK(tr_lr(s, unit) == transpose(s));
    }
    for (const auto& r : rect_corpus({6, 3, 3}))
        for (const auto& [lam, ts] : enumerate_clr_all(r))
            for (const auto& s : ts) {
                auto u = tr_lr(s, r);
                CHECK(is_clr(u, transpose(lam), transpose(r)));
                CHECK(tr_lr(u, transpose(r)) == s);
                CHECK(gamma_inv(gamma(s, r), r) == s);
                CHECK(beta(beta_inv(s, r), r) == s);
            }
}

TEST_CASE("beta standardizes for single rows")
{
    RectSeq rows{{2, 1}, {1, 1}, {2, 1}};
    for (const auto& lam : partitions_of(5))
        for (const auto& t : column_strict_tableaux(lam, {2, 1, 2})) {
            auto s = beta(t, rows);
            CHECK(s == standardize(t));
            CHECK(is_clr(s, lam, rows));
        }
    CHECK(lrt_content(kR) == std::vector<int>{3, 3, 2, 2, 2, 2, 1, 1, 1});
}

TEST_CASE("inclusions and deletions")
{
    auto t = example_members()[2];
    CHECK(i_hat(t, kR) == t);
    CHECK(clr_minus(t, kR) == minus(t));
    CHECK(minus(t).shape() == Partition{5, 4, 3, 2, 1, 1});
    CHECK_THROWS_AS(i_hat(Tableau{{{1, 2}, {3, 4}}}, {{1, 2}, {1, 2}}), math_error);
    for (const auto& r : rect_corpus({6, 3, 3})) {
        if (r.empty())
            continue;
        for (const auto& [lam, ts] : enumerate_clr_all(r))
            for (const auto& s : ts) {
                CHECK(i_hat(s, r) == s);
                CHECK(evacuate(clr_ev(s, r)) == s);
                CHECK(clr_ev(i_hat(s, r), hat(r)) == i_check(clr_ev(s, r), reversed(r)));
                CHECK(clr_ev(i_greater(s, r), split_last_row(r)) == i_less(clr_ev(s, r), reversed(r)));
            }
    }
}

TEST_CASE("minus is bijective when the last rectangle is a single cell")
{
    for (const auto& r : rect_corpus({6, 3, 3})) {
        if (r.empty() || r.back().width != 1 || r.back().height != 1)
            continue;
        RectSeq br = bar(r);
        std::set<Tableau> image;
        for (const auto& [lam, ts] : enumerate_clr_all(r))
            for (const auto& s : ts)
                image.insert(clr_minus(s, r));
        std::set<Tableau> all;
        for (const auto& [lam, ts] : enumerate_clr_all(br))
            all.insert(ts.begin(), ts.end());
        CHECK(image == all);
    }
}
