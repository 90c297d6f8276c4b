#include "lrrc/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace lrrc {

int total(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

bool is_partition(const std::vector<int>& v)
{
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 1)
            return false;
        if (i > 0 && v[i] > v[i - 1])
            return false;
    }
    return true;
}

Partition normalized(std::vector<int> v)
{
    std::sort(v.begin(), v.end(), std::greater<>());
    while (!v.empty() && v.back() <= 0)
        v.pop_back();
    return v;
}

int part(const Partition& p, int i)
{
    if (i < 1 || i > static_cast<int>(p.size()))
        return 0;
    return p[i - 1];
}

Partition transpose(const Partition& p)
{
    if (p.empty())
        return {};
    Partition t(p[0], 0);
    for (int r : p)
        for (int c = 0; c < r; ++c)
            ++t[c];
    return t;
}

int q_n(const Partition& p, int n)
{
    int s = 0;
    for (int x : p)
        s += std::min(x, n);
    return s;
}

int multiplicity(const Partition& p, int n)
{
    return static_cast<int>(std::count(p.begin(), p.end(), n));
}

int column_size(const Partition& p, int n)
{
    int s = 0;
    for (int x : p)
        if (x >= n)
            ++s;
    return s;
}

static void partitions_rec(int n, int max_part, Partition& cur, std::vector<Partition>& out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(n - k, k, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions_of(int n, int max_part)
{
    std::vector<Partition> out;
    if (n < 0)
        return out;
    Partition cur;
    partitions_rec(n, max_part < 0 ? n : max_part, cur, out);
    return out;
}

static void box_rec(int rows, int max_part, Partition& cur, std::vector<Partition>& out)
{
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == rows)
        return;
    for (int k = 1; k <= max_part; ++k) {
        cur.push_back(k);
        box_rec(rows, k, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions_in_box(int rows, int cols)
{
    std::vector<Partition> out;
    if (rows < 0 || cols < 0)
        return out;
    Partition cur;
    box_rec(rows, cols, cur, out);
    return out;
}

bool dominates(const Partition& a, const Partition& b)
{
    if (total(a) != total(b))
        return false;
    int sa = 0, sb = 0;
    std::size_t len = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < len; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb)
            return false;
    }
    return true;
}

bool contains(const Partition& outer, const Partition& inner)
{
    if (inner.size() > outer.size())
        return false;
    for (std::size_t i = 0; i < inner.size(); ++i)
        if (inner[i] > outer[i])
            return false;
    return true;
}

int corner_row_in_column(const Partition& p, int c)
{
    int h = column_size(p, c);
    if (h == 0)
        return 0;
    if (p[h - 1] != c)
        return 0;
    return h;
}

} // namespace lrrc
