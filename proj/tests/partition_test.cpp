#include <doctest.h>

#include "lrrc/partition.hpp"

using namespace lrrc;

TEST_CASE("transpose and column sizes")
{
    CHECK(transpose(Partition{5, 4, 3, 2, 2, 1}) == Partition{6, 5, 3, 2, 1});
    CHECK(transpose(Partition{}) == Partition{});
    CHECK(column_size(Partition{3, 1}, 1) == 2);
    CHECK(column_size(Partition{3, 1}, 3) == 1);
    CHECK(column_size(Partition{3, 1}, 4) == 0);
}

TEST_CASE("transpose is an involution")
{
    for (int n = 0; n <= 9; ++n)
        for (const auto& p : partitions_of(n))
            CHECK(transpose(transpose(p)) == p);
}

TEST_CASE("partition counts")
{
    const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
    for (int n = 0; n <= 9; ++n)
        CHECK(partitions_of(n).size() == static_cast<std::size_t>(p[n]));
    CHECK(partitions_of(5, 2).size() == 3);
    CHECK(partitions_of(-1).empty());
}

TEST_CASE("box partitions are counted by binomials")
{
    // C(r+c, r)
    CHECK(partitions_in_box(2, 2).size() == 6);
    CHECK(partitions_in_box(3, 2).size() == 10);
    CHECK(partitions_in_box(0, 4).size() == 1);
    CHECK(partitions_in_box(3, 3).size() == 20);
}

TEST_CASE("Q_n and multiplicities")
{
    Partition p{3, 3, 1};
    CHECK(q_n(p, 0) == 0);
    CHECK(q_n(p, 1) == 3);
    CHECK(q_n(p, 2) == 5);
    CHECK(q_n(p, 9) == 7);
    CHECK(multiplicity(p, 3) == 2);
    CHECK(multiplicity(p, 2) == 0);
}

TEST_CASE("dominance")
{
    CHECK(dominates({3}, {2, 1}));
    CHECK(dominates({2, 1}, {1, 1, 1}));
    CHECK_FALSE(dominates({1, 1, 1}, {2, 1}));
    CHECK_FALSE(dominates({3, 1, 1, 1}, {2, 2, 2}));
    CHECK_FALSE(dominates({2, 2, 2}, {3, 1, 1, 1}));
    CHECK_FALSE(dominates({2}, {1}));
}

TEST_CASE("corners")
{
    Partition p{5, 4, 3, 2, 2, 1};
    CHECK(corner_row_in_column(p, 5) == 1);
    CHECK(corner_row_in_column(p, 4) == 2);
    CHECK(corner_row_in_column(p, 2) == 5);
    CHECK(corner_row_in_column(p, 1) == 6);
    CHECK(corner_row_in_column(Partition{2, 2}, 1) == 0);
}

TEST_CASE("normalization")
{
    CHECK(normalized({1, 0, 3, 2}) == Partition{3, 2, 1});
    CHECK(is_partition({3, 3, 1}));
    CHECK_FALSE(is_partition({1, 2}));
    CHECK_FALSE(is_partition({2, 0}));
    CHECK(part(Partition{4, 2}, 2) == 2);
    CHECK(part(Partition{4, 2}, 3) == 0);
}
