#include "lrrc/lr.hpp"

#include <algorithm>
#include <optional>

#include "lrrc/errors.hpp"

namespace lrrc {

int LrContext::size() const { return offset.empty() ? 0 : offset.back() + rects.back().size(); }

int LrContext::block_of(int x) const
{
    for (int j = static_cast<int>(rects.size()) - 1; j >= 0; --j)
        if (x > offset[j])
            return j;
    throw math_error("letter outside the alphabet");
}

Cell LrContext::zc_cell(int x) const
{
    int j = block_of(x);
    int i = x - offset[j] - 1;
    int mu = rects[j].height;
    return {i % mu + 1, i / mu + 1};
}

Tableau columnwise(const Rect& r, int offset)
{
    Tableau t;
    t.rows.assign(r.height, std::vector<int>(r.width));
    for (int row = 0; row < r.height; ++row)
        for (int col = 0; col < r.width; ++col)
            t.rows[row][col] = offset + col * r.height + row + 1;
    return t;
}

Tableau rowwise(const Rect& r, int offset)
{
    Tableau t;
    t.rows.assign(r.height, std::vector<int>(r.width));
    for (int row = 0; row < r.height; ++row)
        for (int col = 0; col < r.width; ++col)
            t.rows[row][col] = offset + row * r.width + col + 1;
    return t;
}

LrContext make_context(const RectSeq& rects)
{
    LrContext ctx;
    ctx.rects = rects;
    int off = 0;
    for (const auto& r : rects) {
        ctx.offset.push_back(off);
        ctx.zc.push_back(columnwise(r, off));
        ctx.zr.push_back(rowwise(r, off));
        off += r.size();
    }
    return ctx;
}

static bool basic_shape_ok(const Tableau& s, const Partition& lambda, const RectSeq& rects)
{
    return s.shape() == normalized(lambda) && s.size() == total(rects) && is_standard(s);
}

bool is_clr_insertion(const Tableau& s, const Partition& lambda, const RectSeq& rects)
{
    if (!basic_shape_ok(s, lambda, rects))
        return false;
    LrContext ctx = make_context(rects);
    for (std::size_t j = 0; j < rects.size(); ++j) {
        int a = ctx.offset[j] + 1;
        int b = ctx.offset[j] + rects[j].size();
        if (schensted_p(restrict(s, a, b)) != ctx.zc[j])
            return false;
    }
    return true;
}

bool is_clr_fast(const Tableau& s, const Partition& lambda, const RectSeq& rects)
{
    if (!basic_shape_ok(s, lambda, rects))
        return false;
    LrContext ctx = make_context(rects);
    auto pos = positions(s);
    for (int x = 1; x <= s.size(); ++x) {
        int j = ctx.block_of(x);
        Cell z = ctx.zc_cell(x);
        if (z.row >= 2 && pos[x].row <= pos[x - 1].row)
            return false;
        int mu = rects[j].height;
        if (z.col >= 2 && pos[x - mu].col >= pos[x].col)
            return false;
    }
    return true;
}

bool is_clr(const Tableau& s, const Partition& lambda, const RectSeq& rects)
{
    return is_clr_insertion(s, lambda, rects);
}

namespace {

struct Enumerator {
    const LrContext& ctx;
    std::optional<Partition> bound;
    int n;
    Tableau cur;
    std::vector<Cell> pos;
    std::vector<Tableau> out;

    void run(int x)
    {
        if (x > n) {
            out.push_back(cur);
            return;
        }
        int j = ctx.block_of(x);
        Cell z = ctx.zc_cell(x);
        int mu = ctx.rects[j].height;
        int rows = static_cast<int>(cur.rows.size());
        for (int r = 0; r <= rows; ++r) {
            int len = r < rows ? static_cast<int>(cur.rows[r].size()) : 0;
            if (r > 0 && len >= static_cast<int>(cur.rows[r - 1].size()))
                continue;
            if (bound && len >= part(*bound, r + 1))
                continue;
            Cell c{r + 1, len + 1};
            if (z.row >= 2 && c.row <= pos[x - 1].row)
                continue;
            if (z.col >= 2 && pos[x - mu].col >= c.col)
                continue;
            if (r == rows)
                cur.rows.push_back({});
            cur.rows[r].push_back(x);
            pos[x] = c;
            run(x + 1);
            cur.rows[r].pop_back();
            if (cur.rows[r].empty())
                cur.rows.pop_back();
        }
    }
};

std::vector<Tableau> enumerate_impl(const std::optional<Partition>& bound, const RectSeq& rects)
{
    LrContext ctx = make_context(rects);
    int n = ctx.size();
    Enumerator e{ctx, bound, n, {}, std::vector<Cell>(n + 1), {}};
    e.run(1);
    std::vector<Tableau> out;
    for (auto& t : e.out) {
        if (bound && t.shape() != *bound)
            continue;
        if (!is_clr_insertion(t, t.shape(), rects))
            throw internal_error("enumerated tableau fails the insertion membership test");
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Tableau> enumerate_clr(const Partition& lambda, const RectSeq& rects)
{
    Partition lam = normalized(lambda);
    if (total(lam) != total(rects))
        return {};
    return enumerate_impl(lam, rects);
}

std::map<Partition, std::vector<Tableau>> enumerate_clr_all(const RectSeq& rects)
{
    std::map<Partition, std::vector<Tableau>> out;
    for (auto& t : enumerate_impl(std::nullopt, rects))
        out[t.shape()].push_back(std::move(t));
    return out;
}

long lr_coefficient(const Partition& lambda, const RectSeq& rects)
{
    return static_cast<long>(enumerate_clr(lambda, rects).size());
}

static Tableau relabel(const Tableau& s, const RectSeq& rects, bool forward)
{
    LrContext ctx = make_context(rects);
    if (s.size() != ctx.size())
        throw math_error("tableau size does not match the rectangle sequence");
    Tableau t = s;
    for (auto& row : t.rows)
        for (int& x : row) {
            int j = ctx.block_of(x);
            int i = x - ctx.offset[j] - 1;
            int eta = rects[j].width, mu = rects[j].height;
            if (forward) {
                int r = i % mu, c = i / mu;
                x = ctx.offset[j] + r * eta + c + 1;
            } else {
                int r = i / eta, c = i % eta;
                x = ctx.offset[j] + c * mu + r + 1;
            }
        }
    return t;
}

Tableau gamma(const Tableau& s, const RectSeq& rects) { return relabel(s, rects, true); }
Tableau gamma_inv(const Tableau& s, const RectSeq& rects) { return relabel(s, rects, false); }
Tableau tr_lr(const Tableau& s, const RectSeq& rects) { return transpose(gamma(s, rects)); }

std::vector<int> lrt_content(const RectSeq& rects)
{
    std::vector<int> c;
    for (const auto& r : rects)
        for (int i = 0; i < r.height; ++i)
            c.push_back(r.width);
    return c;
}

Tableau beta(const Tableau& t, const RectSeq& rects)
{
    // letter -> (block, row)
    std::vector<std::pair<int, int>> where;
    for (std::size_t j = 0; j < rects.size(); ++j)
        for (int r = 1; r <= rects[j].height; ++r)
            where.emplace_back(static_cast<int>(j), r);
    LrContext ctx = make_context(rects);
    std::vector<int> seen(where.size(), 0);
    struct Site {
        int col, row;
    };
    std::vector<std::vector<Site>> sites(where.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (std::size_t c = 0; c < t.rows[i].size(); ++c) {
            int x = t.rows[i][c];
            if (x < 1 || x > static_cast<int>(where.size()))
                throw math_error("letter outside the LRT alphabet");
            sites[x - 1].push_back({static_cast<int>(c), static_cast<int>(i)});
        }
    Tableau s = t;
    for (std::size_t x = 0; x < where.size(); ++x) {
        auto [j, r] = where[x];
        auto& v = sites[x];
        if (static_cast<int>(v.size()) != rects[j].width)
            throw math_error("tableau content does not match the rectangle sequence");
        std::sort(v.begin(), v.end(), [](const Site& a, const Site& b) { return a.col < b.col; });
        for (int k = 0; k < static_cast<int>(v.size()); ++k)
            s.rows[v[k].row][v[k].col] = ctx.offset[j] + k * rects[j].height + r;
    }
    return s;
}

Tableau beta_inv(const Tableau& s, const RectSeq& rects)
{
    LrContext ctx = make_context(rects);
    std::vector<int> base(rects.size(), 0);
    for (std::size_t j = 1; j < rects.size(); ++j)
        base[j] = base[j - 1] + rects[j - 1].height;
    Tableau t = s;
    for (auto& row : t.rows)
        for (int& x : row) {
            int j = ctx.block_of(x);
            x = base[j] + ctx.zc_cell(x).row;
        }
    return t;
}

static Tableau certified(Tableau t, const RectSeq& rects, const char* what)
{
    if (!is_clr(t, t.shape(), rects))
        throw internal_error(std::string(what) + " produced a non-member");
    return t;
}

static void require_member(const Tableau& s, const RectSeq& rects)
{
    if (!is_clr(s, s.shape(), rects))
        throw math_error("tableau is not in CLR(" + format_rects(rects) + ")");
}

Tableau i_hat(const Tableau& s, const RectSeq& rects)
{
    require_member(s, rects);
    return certified(s, hat(rects), "i_hat");
}

Tableau i_check(const Tableau& s, const RectSeq& rects)
{
    require_member(s, rects);
    return certified(s, check(rects), "i_check");
}

Tableau i_less(const Tableau& s, const RectSeq& rects)
{
    require_member(s, rects);
    RectSeq rt = transpose(rects);
    Tableau t = i_check(tr_lr(s, rects), rt);
    return certified(tr_lr(t, check(rt)), split_first_row(rects), "i_less");
}

Tableau i_greater(const Tableau& s, const RectSeq& rects)
{
    require_member(s, rects);
    RectSeq rt = transpose(rects);
    Tableau t = i_hat(tr_lr(s, rects), rt);
    return certified(tr_lr(t, hat(rt)), split_last_row(rects), "i_greater");
}

Tableau i_plus_inclusion(const Tableau& s, const RectSeq& rects, const RectSeq& target)
{
    bool ok = (e1_applicable(rects) && e1_step(rects) == target) ||
              (e1_split_applicable(rects) && e1_split(rects) == target);
    if (!ok)
        throw math_error("i_plus_inclusion requires an E1 relation between the rectangle sequences");
    require_member(s, rects);
    Tableau t = tr_lr(s, rects);
    if (!is_clr(t, t.shape(), transpose(target)))
        throw math_error("transposed tableau is not a member over " + format_rects(transpose(target)));
    return certified(tr_lr(t, transpose(target)), target, "i_plus_inclusion");
}

Tableau clr_minus(const Tableau& s, const RectSeq& rects)
{
    if (rects.empty() || rects.back().width != 1)
        throw math_error("minus requires the last rectangle to be a single column");
    require_member(s, rects);
    return certified(minus(s), bar(rects), "minus");
}

Tableau clr_d(const Tableau& s, const RectSeq& rects)
{
    if (rects.empty() || rects.front().width != 1)
        throw math_error("D requires the first rectangle to be a single column");
    require_member(s, rects);
    return certified(d_map(s), tilde(rects), "D");
}

Tableau clr_ev(const Tableau& s, const RectSeq& rects)
{
    require_member(s, rects);
    return certified(evacuate(s), reversed(rects), "ev");
}

static int added_row(const Partition& outer, const Partition& inner)
{
    for (int i = 1; i <= static_cast<int>(outer.size()); ++i)
        if (part(outer, i) != part(inner, i))
            return i;
    throw math_error("shapes do not differ by a cell");
}

bool in_minus_image(const Tableau& t, const Partition& lambda, const RectSeq& rects)
{
    if (rects.back().height == 1)
        return true;
    int r = added_row(normalized(lambda), t.shape());
    int rp = added_row(t.shape(), minus(t).shape());
    return rp < r;
}

bool in_d_image(const Tableau& t, const Partition& lambda, const RectSeq& rects)
{
    if (rects.front().height == 1)
        return true;
    int r = added_row(normalized(lambda), t.shape());
    int rp = added_row(t.shape(), d_map(t).shape());
    return rp < r;
}

} // namespace lrrc
