#include <doctest.h>

#include <numeric>

#include "lrrc/partition.hpp"
#include "lrrc/qpoly.hpp"

using namespace lrrc;

TEST_CASE("gaussian binomials")
{
    CHECK(gaussian_binomial(1, 1) == QPoly({1, 1}));
    CHECK(gaussian_binomial(1, 2) == QPoly({1, 1, 1}));
    CHECK(gaussian_binomial(3, 0) == QPoly::constant(1));
    CHECK(gaussian_binomial(-1, 2).is_zero());
    CHECK(gaussian_binomial(2, -1).is_zero());
    // Coefficients count partitions in an m x n box by size.
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n) {
            std::vector<std::int64_t> c(m * n + 1, 0);
            for (const auto& p : partitions_in_box(m, n))
                ++c[total(p)];
            CHECK(gaussian_binomial(m, n) == QPoly(c));
        }
}

TEST_CASE("arithmetic")
{
    QPoly a({1, 2});
    QPoly b({0, 0, 1});
    CHECK(a + b == QPoly({1, 2, 1}));
    CHECK(a - a == QPoly());
    CHECK(a * b == QPoly({0, 0, 1, 2}));
    CHECK((a * b).divided_by(b) == a);
    CHECK_THROWS(QPoly({1, 1}).divided_by(QPoly({0, 1})));
    CHECK(QPoly({1, 0, 0}).degree() == 0);
    CHECK(QPoly().is_zero());
    CHECK(QPoly::monomial(3, 2)[3] == 2);
}

TEST_CASE("evaluation, reversal and order")
{
    QPoly p({1, 0, 2, 1});
    CHECK(p.eval(1) == 4);
    CHECK(p.eval(2) == 1 + 8 + 8);
    CHECK(p.reversed(3) == QPoly({1, 2, 0, 1}));
    CHECK(p.reversed(5) == QPoly({0, 0, 1, 2, 0, 1}));
    CHECK_THROWS(p.reversed(2));
    CHECK(QPoly({1, 0, 1}).coefficientwise_le(p));
    CHECK_FALSE(p.coefficientwise_le(QPoly({1, 0, 1})));
    CHECK(p.nonnegative());
    CHECK_FALSE(QPoly({1, -1}).nonnegative());
}

TEST_CASE("text form")
{
    CHECK(QPoly().str() == "0");
    CHECK(QPoly::constant(1).str() == "1");
    CHECK(QPoly::monomial(1).str() == "q");
    CHECK(QPoly({1, 0, 2, 1}).str() == "1 + 2q^2 + q^3");
    CHECK(QPoly({0, 1, 1}).str() == "q + q^2");
}
