#include <doctest.h>

#include "lrrc/kostka.hpp"
#include "lrrc/verify.hpp"

using namespace lrrc;

namespace {

QPoly poly(std::vector<std::int64_t> c) { return QPoly(std::move(c)); }

} // namespace

TEST_CASE("classical values")
{
    RectSeq unit3(3, Rect{1, 1});
    CHECK(kostka_rc({2, 1}, unit3) == poly({0, 1, 1}));
    CHECK(kostka_rc({3}, unit3) == QPoly::monomial(3));
    CHECK(kostka_rc({1, 1, 1}, unit3) == QPoly::constant(1));

    RectSeq unit4(4, Rect{1, 1});
    CHECK(kostka_rc({4}, unit4) == QPoly::monomial(6));
    CHECK(kostka_rc({3, 1}, unit4) == poly({0, 0, 0, 1, 1, 1}));
    CHECK(kostka_rc({2, 2}, unit4) == poly({0, 0, 1, 0, 1}));
    CHECK(kostka_rc({2, 1, 1}, unit4) == poly({0, 1, 1, 1}));
    CHECK(kostka_rc({1, 1, 1, 1}, unit4) == QPoly::constant(1));

    RectSeq r211{{2, 1}, {1, 1}, {1, 1}};
    CHECK(kostka_rc({3, 1}, r211) == poly({0, 1, 1}));
    RectSeq r22{{2, 1}, {2, 1}};
    CHECK(kostka_rc({4}, r22) == QPoly::monomial(2));
    CHECK(kostka_rc({3, 1}, r22) == QPoly::monomial(1));
    CHECK(kostka_rc({2, 2}, r22) == QPoly::constant(1));

    CHECK(kostka_foulkes({2, 1}, {1, 1, 1}) == poly({0, 1, 1}));
    CHECK(kostka_foulkes({3, 1}, {1, 2, 1}) == poly({0, 1, 1}));
}

TEST_CASE("all three computations agree")
{
    const RectSeq r{{3, 2}, {2, 4}, {1, 3}};
    const Partition lam{5, 4, 3, 2, 2, 1};
    auto k = kostka_rc(lam, r);
    CHECK(k.eval(1) == 4);
    CHECK(kostka_qp(lam, r) == k);
    CHECK(kostka_charge(lam, r) == k);
    for (const auto& rs : rect_corpus({6, 3, 3}))
        for (const auto& l : partitions_of(total(rs))) {
            auto a = kostka_qp(l, rs);
            CHECK(a == kostka_rc(l, rs));
            CHECK(a == kostka_rc_enumerated(l, rs));
            CHECK(a == kostka_charge(l, rs));
            CHECK(a.nonnegative());
        }
}

TEST_CASE("degenerate inputs")
{
    CHECK(kostka_rc({3}, {{1, 1}}).is_zero());
    CHECK(kostka_qp({2, 2}, {{1, 1}, {1, 1}, {1, 1}}).is_zero());
    CHECK(kostka_rc({}, {}) == QPoly::constant(1));
    CHECK(kostka_rc({1, 1, 1}, {{3, 1}}).is_zero());
    CHECK(kostka_rc({3, 3}, {{3, 2}}) == QPoly::constant(1));
}

TEST_CASE("transpose duality")
{
    for (const auto& rs : rect_corpus({6, 3, 3})) {
        int n = pair_norm(rs);
        for (const auto& l : partitions_of(total(rs)))
            CHECK(kostka_rc(transpose(l), transpose(rs)) == kostka_rc(l, rs).reversed(n));
    }
}
