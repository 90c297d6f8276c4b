#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "lrrc/errors.hpp"
#include "lrrc/tableau.hpp"

using namespace lrrc;

namespace {

Tableau third_example()
{
    return Tableau{{{1, 3, 5, 11, 15}, {2, 4, 6, 12}, {7, 13, 16}, {8, 14}, {9, 17}, {10}}};
}

// Elementary Knuth moves yzx <-> yxz (x<y<z) and xzy <-> zxy.
std::vector<Word> knuth_neighbours(const Word& w)
{
    std::vector<Word> out;
    for (std::size_t i = 0; i + 2 < w.size(); ++i) {
        int a = w[i], b = w[i + 1], c = w[i + 2];
        Word v = w;
        if ((b < a && a < c) || (c < a && a < b)) {
            std::swap(v[i + 1], v[i + 2]);
            out.push_back(v);
        }
        v = w;
        if ((a < c && c < b) || (b < c && c < a)) {
            std::swap(v[i], v[i + 1]);
            out.push_back(v);
        }
    }
    return out;
}

} // namespace

TEST_CASE("row insertion")
{
    CHECK(schensted_p(Word{}).empty());
    CHECK(schensted_p(Word{2, 3, 1}) == Tableau{{{1, 3}, {2}}});
    auto t = third_example();
    CHECK(schensted_p(reading_word(t)) == t);
    Tableau cst{{{1, 1, 2}, {2, 3}}};
    CHECK(schensted_p(reading_word(cst)) == cst);
}

TEST_CASE("P is constant exactly on Knuth classes")
{
    for (int n = 1; n <= 7; ++n) {
        auto words = permutations(n);
        std::map<Word, int> cls;
        int next = 0;
        for (const auto& w : words) {
            if (cls.count(w))
                continue;
            std::vector<Word> queue{w};
            cls[w] = next;
            for (std::size_t i = 0; i < queue.size(); ++i)
                for (auto& v : knuth_neighbours(queue[i]))
                    if (!cls.count(v)) {
                        cls[v] = next;
                        queue.push_back(v);
                    }
            ++next;
        }
        std::map<Tableau, std::set<int>> by_p;
        std::map<int, std::set<Tableau>> by_class;
        for (const auto& w : words) {
            auto p = schensted_p(w);
            CHECK(is_standard(p));
            by_p[p].insert(cls[w]);
            by_class[cls[w]].insert(p);
        }
        for (const auto& [p, c] : by_p)
            CHECK(c.size() == 1);
        for (const auto& [c, p] : by_class)
            CHECK(p.size() == 1);
    }
}

TEST_CASE("restriction")
{
    Tableau s{{{1, 2}, {3}}};
    CHECK(as_straight(restrict(s, 1, 3)) == s);
    auto r = restrict(s, 2, 3);
    CHECK(r.inner == Partition{1});
    CHECK(r.rows == std::vector<std::vector<int>>{{2}, {3}});
    auto u = restrict(third_example(), 15, 17);
    CHECK(u.inner == Partition{4, 4, 2, 2, 1, 1});
    CHECK(u.rows == std::vector<std::vector<int>>{{15}, {}, {16}, {}, {17}});
}

TEST_CASE("standardization")
{
    CHECK(standardize(Tableau{{{1, 1}, {2}}}) == Tableau{{{1, 2}, {3}}});
    CHECK(standardize(Tableau{{{1, 2}, {2}}}) == Tableau{{{1, 3}, {2}}});
    Tableau s{{{1, 2, 4}, {3}}};
    CHECK(standardize(s) == s);
}

TEST_CASE("transpose")
{
    CHECK(transpose(Tableau{{{1, 2, 3}}}) == Tableau{{{1}, {2}, {3}}});
    CHECK(transpose(Tableau{{{1, 2}, {3}}}) == Tableau{{{1, 3}, {2}}});
    for (int n = 0; n <= 6; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& s : standard_tableaux(lam))
                CHECK(transpose(transpose(s)) == s);
}

TEST_CASE("minus, D and evacuation examples")
{
    CHECK(minus(Tableau{{{1, 2}, {3}}}) == Tableau{{{1, 2}}});
    CHECK(minus(Tableau{{{1}}}).empty());
    CHECK_THROWS_AS(minus(Tableau{}), math_error);
    CHECK(d_map(Tableau{{{1}}}).empty());
    CHECK(d_map(Tableau{{{1, 2}, {3}}}) == Tableau{{{1}, {2}}});
    CHECK(d_map(Tableau{{{1, 3}, {2}}}) == Tableau{{{1, 2}}});
    CHECK_THROWS_AS(d_map(Tableau{}), math_error);
    CHECK(evacuate(Tableau{}).empty());
    CHECK(evacuate(Tableau{{{1, 2}, {3}}}) == Tableau{{{1, 3}, {2}}});
    Tableau col{{{1}, {2}, {3}, {4}}};
    CHECK(evacuate(col) == col);
}

TEST_CASE("evacuation identities on standard tableaux")
{
    for (int n = 1; n <= 7; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& s : standard_tableaux(lam)) {
                auto e = evacuate(s);
                CHECK(is_standard(e));
                CHECK(e.shape() == s.shape());
                CHECK(evacuate(e) == s);
                CHECK(total(s.shape()) - total(minus(s).shape()) == 1);
                CHECK(evacuate(minus(s)) == d_map(e));
                CHECK(evacuate(d_map(s)) == minus(e));
                if (n >= 2)
                    CHECK(minus(d_map(s)) == d_map(minus(s)));
            }
}

TEST_CASE("LS charge of standard tableaux")
{
    CHECK(ls_charge(Tableau{{{1}, {2}, {3}}}) == 0);
    CHECK(ls_charge(Tableau{{{1, 2}, {3}}}) == 2);
    CHECK(ls_charge(Tableau{{{1, 3}, {2}}}) == 1);
    CHECK(ascents(Tableau{{{1, 2}, {3}}}) == 1);
    CHECK(is_descent(Tableau{{{1, 2}, {3}}}, 2));
    for (int n = 1; n <= 7; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& s : standard_tableaux(lam)) {
                CHECK(ls_charge(s) == ls_charge_recursive(s));
                CHECK(ls_charge(s) == ls_charge(minus(s)) + ascents(s));
            }
}

TEST_CASE("word charge")
{
    CHECK(word_charge({1, 2}) == 1);
    CHECK(word_charge({2, 1}) == 0);
    CHECK(word_charge({1, 1, 2}) == 1);
    CHECK(word_charge({}) == 0);
    // Standard words: charge agrees with the LS charge of the insertion tableau.
    for (int n = 1; n <= 6; ++n)
        for (const auto& w : permutations(n))
            CHECK(word_charge(w) == ls_charge(schensted_p(w)));
}

TEST_CASE("conjugation automorphisms")
{
    std::vector<std::vector<int>> contents = {{2, 1, 1}, {3, 2, 1}, {2, 2, 2}, {3, 1, 2}, {1, 3, 2}};
    for (const auto& mu : contents) {
        int n = std::accumulate(mu.begin(), mu.end(), 0);
        for (const auto& lam : partitions_of(n))
            for (const auto& t : column_strict_tableaux(lam, mu))
                for (int p = 1; p < static_cast<int>(mu.size()); ++p) {
                    auto u = ls_reflection(t, p);
                    CHECK(is_column_strict(u));
                    CHECK(u.shape() == t.shape());
                    CHECK(ls_reflection(u, p) == t);
                    std::vector<int> c(mu.size(), 0);
                    for (const auto& row : u.rows)
                        for (int x : row)
                            ++c[x - 1];
                    auto want = mu;
                    std::swap(want[p - 1], want[p]);
                    CHECK(c == want);
                }
    }
}

TEST_CASE("removing a rightmost letter")
{
    Tableau t{{{1, 1, 2}, {2, 3}}};
    CHECK(remove_rightmost(t, 3) == Tableau{{{1, 1, 2}, {2}}});
    CHECK(remove_rightmost(t, 2) == Tableau{{{1, 1}, {2, 3}}});
    CHECK_THROWS_AS(remove_rightmost(t, 4), math_error);
    CHECK_THROWS_AS(remove_rightmost(Tableau{{{1, 2}, {2}}}, 1), math_error);
}

TEST_CASE("enumeration of tableaux")
{
    // Hook length counts.
    CHECK(standard_tableaux({3, 2}).size() == 5);
    CHECK(standard_tableaux({3, 2, 1}).size() == 16);
    CHECK(standard_tableaux({}).size() == 1);
    // Kostka numbers K_{(3,2),(2,2,1)} = 2, K_{(2,2,1),(2,2,1)} = 1.
    CHECK(column_strict_tableaux({3, 2}, {2, 2, 1}).size() == 2);
    CHECK(column_strict_tableaux({2, 2, 1}, {2, 2, 1}).size() == 1);
    CHECK(permutations(4).size() == 24);
    CHECK(cell_of(third_example(), 17) == Cell{5, 2});
    auto pos = positions(third_example());
    CHECK(pos[15] == Cell{1, 5});
}
