#include "lrrc/tableau.hpp"

#include <algorithm>
#include <numeric>

#include "lrrc/errors.hpp"

namespace lrrc {

Partition Tableau::shape() const
{
    Partition p;
    p.reserve(rows.size());
    for (const auto& r : rows)
        p.push_back(static_cast<int>(r.size()));
    return p;
}

int Tableau::size() const
{
    int n = 0;
    for (const auto& r : rows)
        n += static_cast<int>(r.size());
    return n;
}

bool is_column_strict(const Tableau& t)
{
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const auto& r = t.rows[i];
        if (r.empty())
            return false;
        if (i > 0 && r.size() > t.rows[i - 1].size())
            return false;
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (j > 0 && r[j] < r[j - 1])
                return false;
            if (i > 0 && r[j] <= t.rows[i - 1][j])
                return false;
        }
    }
    return true;
}

bool is_standard(const Tableau& t)
{
    if (!is_column_strict(t))
        return false;
    int n = t.size();
    std::vector<bool> seen(n + 1, false);
    for (const auto& r : t.rows)
        for (std::size_t j = 0; j < r.size(); ++j) {
            int x = r[j];
            if (x < 1 || x > n || seen[x])
                return false;
            if (j > 0 && x == r[j - 1])
                return false;
            seen[x] = true;
        }
    return true;
}

Word reading_word(const Tableau& t)
{
    Word w;
    for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it)
        w.insert(w.end(), it->begin(), it->end());
    return w;
}

Word reading_word(const SkewTableau& t)
{
    Word w;
    for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it)
        w.insert(w.end(), it->begin(), it->end());
    return w;
}

Tableau schensted_p(const Word& w)
{
    Tableau p;
    for (int x : w) {
        int cur = x;
        std::size_t r = 0;
        for (;;) {
            if (r == p.rows.size()) {
                p.rows.push_back({cur});
                break;
            }
            auto& row = p.rows[r];
            auto it = std::upper_bound(row.begin(), row.end(), cur);
            if (it == row.end()) {
                row.push_back(cur);
                break;
            }
            std::swap(*it, cur);
            ++r;
        }
    }
    return p;
}

Tableau schensted_p(const SkewTableau& t) { return schensted_p(reading_word(t)); }

SkewTableau restrict(const Tableau& t, int a, int b)
{
    SkewTableau s;
    std::size_t last = 0;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        int before = 0;
        std::vector<int> kept;
        for (int x : t.rows[i]) {
            if (x < a)
                ++before;
            else if (x <= b)
                kept.push_back(x);
        }
        s.inner.push_back(before);
        s.rows.push_back(std::move(kept));
        if (!s.rows.back().empty())
            last = i + 1;
    }
    s.rows.resize(last);
    while (!s.inner.empty() && s.inner.back() == 0)
        s.inner.pop_back();
    return s;
}

Tableau as_straight(const SkewTableau& t)
{
    if (!t.inner.empty())
        throw math_error("skew tableau has nonempty inner shape");
    Tableau r;
    r.rows = t.rows;
    return r;
}

Tableau standardize(const Tableau& t)
{
    struct Entry {
        int value, col, row;
    };
    std::vector<Entry> cells;
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (std::size_t j = 0; j < t.rows[i].size(); ++j)
            cells.push_back({t.rows[i][j], static_cast<int>(j), static_cast<int>(i)});
    std::sort(cells.begin(), cells.end(), [](const Entry& x, const Entry& y) {
        return x.value != y.value ? x.value < y.value : x.col < y.col;
    });
    Tableau s = t;
    int next = 1;
    for (const auto& e : cells)
        s.rows[e.row][e.col] = next++;
    return s;
}

Tableau transpose(const Tableau& t)
{
    Tableau r;
    if (t.rows.empty())
        return r;
    r.rows.resize(t.rows[0].size());
    for (const auto& row : t.rows)
        for (std::size_t j = 0; j < row.size(); ++j)
            r.rows[j].push_back(row[j]);
    return r;
}

Tableau shifted(const Tableau& t, int delta)
{
    Tableau r = t;
    for (auto& row : r.rows)
        for (int& x : row)
            x += delta;
    return r;
}

Word shifted(const Word& w, int delta)
{
    Word r = w;
    for (int& x : r)
        x += delta;
    return r;
}

std::vector<Cell> positions(const Tableau& s)
{
    std::vector<Cell> pos(s.size() + 1);
    for (std::size_t i = 0; i < s.rows.size(); ++i)
        for (std::size_t j = 0; j < s.rows[i].size(); ++j) {
            int x = s.rows[i][j];
            if (x >= 1 && x < static_cast<int>(pos.size()))
                pos[x] = {static_cast<int>(i) + 1, static_cast<int>(j) + 1};
        }
    return pos;
}

Cell cell_of(const Tableau& t, int letter)
{
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (std::size_t j = 0; j < t.rows[i].size(); ++j)
            if (t.rows[i][j] == letter)
                return {static_cast<int>(i) + 1, static_cast<int>(j) + 1};
    return {};
}

Tableau with_cell(const Tableau& t, int row, int letter)
{
    Tableau r = t;
    if (row < 1 || row > static_cast<int>(r.rows.size()) + 1)
        throw math_error("cannot add a cell in that row");
    if (row == static_cast<int>(r.rows.size()) + 1)
        r.rows.push_back({});
    auto& target = r.rows[row - 1];
    if (row > 1 && target.size() >= r.rows[row - 2].size())
        throw math_error("added cell is not an outer corner");
    target.push_back(letter);
    return r;
}

Tableau minus(const Tableau& s)
{
    if (s.empty())
        throw math_error("minus of the empty tableau");
    int n = s.size();
    Tableau r = s;
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        if (!r.rows[i].empty() && r.rows[i].back() == n) {
            r.rows[i].pop_back();
            if (r.rows[i].empty())
                r.rows.erase(r.rows.begin() + static_cast<long>(i));
            return r;
        }
    }
    throw math_error("maximum letter is not at a corner");
}

Tableau d_map(const Tableau& s)
{
    if (s.empty())
        throw math_error("D of the empty tableau");
    int n = s.size();
    return schensted_p(shifted(reading_word(restrict(s, 2, n)), -1));
}

Tableau evacuate(const Tableau& s)
{
    int n = s.size();
    Word w = reading_word(s);
    Word h(w.rbegin(), w.rend());
    for (int& x : h)
        x = n + 1 - x;
    return schensted_p(h);
}

int ascents(const Tableau& s)
{
    auto pos = positions(s);
    int n = s.size();
    int a = 0;
    for (int i = 1; i < n; ++i)
        if (pos[i + 1].col > pos[i].col)
            ++a;
    return a;
}

bool is_descent(const Tableau& s, int i)
{
    auto pos = positions(s);
    return pos[i + 1].row > pos[i].row;
}

int ls_charge(const Tableau& s)
{
    auto pos = positions(s);
    int n = s.size();
    int c = 0;
    for (int i = 1; i < n; ++i)
        if (pos[i + 1].col > pos[i].col)
            c += n - i;
    return c;
}

int ls_charge_recursive(const Tableau& s)
{
    int c = 0;
    Tableau cur = s;
    while (!cur.empty()) {
        c += ascents(cur);
        cur = minus(cur);
    }
    return c;
}

int word_charge(const Word& w)
{
    std::vector<int> letters = w;
    std::vector<bool> used(letters.size(), false);
    std::size_t remaining = letters.size();
    int charge = 0;
    while (remaining > 0) {
        int top = 0;
        for (std::size_t i = 0; i < letters.size(); ++i)
            if (!used[i])
                top = std::max(top, letters[i]);
        // Start to the right of the word, scan leftwards cyclically.
        long p = static_cast<long>(letters.size());
        int index = 0;
        for (int r = 1; r <= top; ++r) {
            long found = -1;
            for (long q = p - 1; q >= 0; --q)
                if (!used[q] && letters[q] == r) {
                    found = q;
                    break;
                }
            if (found < 0) {
                for (long q = static_cast<long>(letters.size()) - 1; q > p; --q)
                    if (!used[q] && letters[q] == r) {
                        found = q;
                        break;
                    }
                if (found < 0)
                    throw math_error("word content is not a partition");
                if (r > 1)
                    ++index;
            }
            charge += index;
            used[found] = true;
            --remaining;
            p = found;
        }
    }
    return charge;
}

Tableau ls_reflection(const Tableau& t, int p)
{
    std::vector<std::pair<std::size_t, std::size_t>> cells; // reading order
    for (std::size_t i = t.rows.size(); i-- > 0;)
        for (std::size_t j = 0; j < t.rows[i].size(); ++j)
            if (t.rows[i][j] == p || t.rows[i][j] == p + 1)
                cells.emplace_back(i, j);
    // Bracket each p+1 with a later p; what remains reads p^a (p+1)^b.
    std::vector<bool> paired(cells.size(), false);
    std::vector<std::size_t> open;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        int x = t.rows[cells[k].first][cells[k].second];
        if (x == p + 1) {
            open.push_back(k);
        } else if (!open.empty()) {
            paired[open.back()] = paired[k] = true;
            open.pop_back();
        }
    }
    std::vector<std::size_t> free;
    int a = 0;
    for (std::size_t k = 0; k < cells.size(); ++k)
        if (!paired[k]) {
            free.push_back(k);
            if (t.rows[cells[k].first][cells[k].second] == p)
                ++a;
        }
    int b = static_cast<int>(free.size()) - a;
    Tableau r = t;
    for (std::size_t i = 0; i < free.size(); ++i) {
        auto [row, col] = cells[free[i]];
        r.rows[row][col] = static_cast<int>(i) < b ? p : p + 1;
    }
    return r;
}

Tableau remove_rightmost(const Tableau& t, int letter)
{
    std::size_t best_row = 0, best_col = 0;
    bool found = false;
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (std::size_t j = 0; j < t.rows[i].size(); ++j)
            if (t.rows[i][j] == letter && (!found || j > best_col)) {
                best_row = i;
                best_col = j;
                found = true;
            }
    if (!found)
        throw math_error("letter " + std::to_string(letter) + " does not occur");
    Tableau r = t;
    auto& row = r.rows[best_row];
    if (best_col + 1 != row.size() ||
        (best_row + 1 < r.rows.size() && r.rows[best_row + 1].size() > best_col))
        throw math_error("rightmost occurrence is not at a corner");
    row.pop_back();
    if (row.empty())
        r.rows.erase(r.rows.begin() + static_cast<long>(best_row));
    return r;
}

static void syt_rec(const Partition& shape, Tableau& cur, int next, int n, std::vector<Tableau>& out)
{
    if (next > n) {
        out.push_back(cur);
        return;
    }
    for (std::size_t r = 0; r <= cur.rows.size() && r < shape.size(); ++r) {
        int len = r < cur.rows.size() ? static_cast<int>(cur.rows[r].size()) : 0;
        if (len >= shape[r])
            continue;
        if (r > 0 && len >= static_cast<int>(cur.rows[r - 1].size()))
            continue;
        if (r == cur.rows.size())
            cur.rows.push_back({});
        cur.rows[r].push_back(next);
        syt_rec(shape, cur, next + 1, n, out);
        cur.rows[r].pop_back();
        if (cur.rows[r].empty())
            cur.rows.pop_back();
    }
}

std::vector<Tableau> standard_tableaux(const Partition& shape)
{
    std::vector<Tableau> out;
    Tableau cur;
    syt_rec(shape, cur, 1, total(shape), out);
    return out;
}

static void strip_choices(const Partition& lambda, const Partition& mu, int k, std::size_t r,
                          Partition& nu, std::vector<Partition>& out)
{
    if (r == lambda.size()) {
        if (k == 0)
            out.push_back(nu);
        return;
    }
    int lo = part(mu, static_cast<int>(r) + 1);
    int hi = lambda[r];
    if (r > 0)
        hi = std::min(hi, part(mu, static_cast<int>(r)));
    for (int v = lo; v <= hi && v - lo <= k; ++v) {
        nu[r] = v;
        strip_choices(lambda, mu, k - (v - lo), r + 1, nu, out);
    }
}

static void cst_rec(const Partition& lambda, const std::vector<int>& content, std::size_t letter,
                    const Partition& mu, Tableau& cur, std::vector<Tableau>& out)
{
    if (letter == content.size()) {
        if (mu == lambda)
            out.push_back(cur);
        return;
    }
    std::vector<Partition> nus;
    Partition nu(lambda.size(), 0);
    strip_choices(lambda, mu, content[letter], 0, nu, nus);
    for (auto& next : nus) {
        Tableau t = cur;
        for (std::size_t r = 0; r < next.size(); ++r) {
            int from = part(mu, static_cast<int>(r) + 1);
            if (next[r] > from && t.rows.size() <= r)
                t.rows.resize(r + 1);
            for (int c = from; c < next[r]; ++c)
                t.rows[r].push_back(static_cast<int>(letter) + 1);
        }
        cst_rec(lambda, content, letter + 1, normalized(next), t, out);
    }
}

std::vector<Tableau> column_strict_tableaux(const Partition& shape, const std::vector<int>& content)
{
    std::vector<Tableau> out;
    int sum = std::accumulate(content.begin(), content.end(), 0);
    if (sum != total(shape))
        return out;
    Tableau cur;
    cst_rec(shape, content, 0, {}, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> permutations(int n)
{
    std::vector<Word> out;
    Word w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

} // namespace lrrc
