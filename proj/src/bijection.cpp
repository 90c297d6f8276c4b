#include "lrrc/bijection.hpp"

#include "lrrc/errors.hpp"
#include "lrrc/lr.hpp"

namespace lrrc {

RectSeq split_context(const RectSeq& rects, int x)
{
    RectSeq out;
    int off = 0;
    for (const auto& r : rects) {
        if (x <= off)
            break;
        if (x >= off + r.size()) {
            out.push_back(r);
        } else {
            int i = x - off - 1;
            int row = i % r.height + 1, col = i / r.height + 1;
            out.push_back({col, row});
            out.push_back({col - 1, r.height - row});
        }
        off += r.size();
    }
    return cleaned(out);
}

static void require_member(const Tableau& t, const RectSeq& rects)
{
    if (!is_clr(t, t.shape(), rects))
        throw math_error("tableau is not in CLR(" + format_rects(rects) + ")");
}

RiggedConfig phi_bar(const Tableau& t, const RectSeq& rects, BijectionTrace* trace)
{
    require_member(t, rects);
    LrContext ctx = make_context(rects);
    auto pos = positions(t);
    int n = t.size();
    RiggedConfig rc = empty_rc({}, {});
    Tableau prefix;
    for (int x = 1; x <= n; ++x) {
        int c = pos[x].col;
        int cp = ctx.zc_cell(x).col;
        if (cp > c)
            throw internal_error("letter sits left of its ZC column");
        std::vector<std::pair<int, int>> sel;
        std::vector<int> pick(c, -1);
        bool bounded = false;
        int bound = 0;
        for (int k = c - 1; k >= cp; --k) {
            const auto& rp = rc.at(k);
            int best = -1;
            for (int i = 0; i < static_cast<int>(rp.size()); ++i) {
                const auto& s = rp[i];
                if ((bounded && s.length > bound) || !is_singular(rc, k, s))
                    continue;
                if (best < 0 || s.length > rp[best].length)
                    best = i;
            }
            pick[k] = best;
            bound = best < 0 ? 0 : rp[best].length;
            bounded = true;
            sel.emplace_back(k, bound);
        }
        prefix = with_cell(prefix, pos[x].row, x);
        RiggedConfig next = rc;
        next.lambda = prefix.shape();
        next.rects = split_context(rects, x);
        std::vector<std::pair<int, int>> grown;
        for (int k = cp; k < c; ++k) {
            if (static_cast<int>(next.nu.size()) < k)
                next.nu.resize(k);
            auto& rp = next.nu[k - 1];
            if (pick[k] < 0) {
                rp.push_back({1, 0});
                grown.emplace_back(k, static_cast<int>(rp.size()) - 1);
            } else {
                ++rp[pick[k]].length;
                grown.emplace_back(k, pick[k]);
            }
        }
        Configuration nu = next.configuration();
        for (auto [k, i] : grown) {
            auto& s = next.nu[k - 1][i];
            s.label = vacancy(nu, next.rects, k, s.length);
        }
        next.canonicalize();
        if (cp >= 2 && next.at(cp - 1) != rc.at(cp - 1))
            throw internal_error("direct algorithm modified nu^(c'-1)");
        if (!is_valid(next))
            throw internal_error("direct algorithm left the admissible set at letter " +
                                 std::to_string(x));
        rc = std::move(next);
        if (trace)
            trace->push_back({x, c, cp, sel, rc});
    }
    rc.lambda = t.shape();
    rc.rects = rects;
    return rc;
}

RiggedConfig phi_bar_recursive(const Tableau& t, const RectSeq& rects)
{
    if (rects.empty()) {
        if (!t.empty())
            throw math_error("nonempty tableau over the empty rectangle sequence");
        return empty_rc({}, {});
    }
    require_member(t, rects);
    if (rects.back().width == 1) {
        int c = cell_of(t, t.size()).col;
        RiggedConfig rc = phi_bar_recursive(clr_minus(t, rects), bar(rects));
        return delta_bar_inv(rc, t.shape(), rects, c);
    }
    return j_hat_inv(phi_bar_recursive(i_hat(t, rects), hat(rects)), rects);
}

static Tableau phi_bar_inv_rec(const RiggedConfig& rc)
{
    if (rc.rects.empty()) {
        if (!rc.lambda.empty() || !rc.nu.empty())
            throw internal_error("nonempty rigged configuration over the empty rectangle sequence");
        return {};
    }
    if (rc.rects.back().width == 1) {
        DeltaResult d = delta_bar(rc);
        Tableau t = phi_bar_inv_rec(d.rc);
        int row = corner_row_in_column(rc.lambda, d.rank);
        return with_cell(t, row, total(rc.rects));
    }
    return phi_bar_inv_rec(j_hat(rc));
}

Tableau phi_bar_inv(const RiggedConfig& rc)
{
    if (!is_valid(rc))
        throw math_error("rigged configuration is not admissible");
    Tableau t = phi_bar_inv_rec(rc);
    if (!is_clr(t, rc.lambda, rc.rects))
        throw internal_error("inverse bijection produced a non-member");
    return t;
}

RiggedConfig phi_tilde(const Tableau& t, const RectSeq& rects) { return theta(phi_bar(t, rects)); }

Tableau phi_tilde_inv(const RiggedConfig& rc) { return phi_bar_inv(theta(rc)); }

int charge(const Tableau& t, const RectSeq& rects) { return cc(phi_tilde(t, rects)); }

int cocharge(const Tableau& t, const RectSeq& rects) { return pair_norm(rects) - charge(t, rects); }

Tableau sigma_p(const Tableau& t, const RectSeq& rects, int p)
{
    if (p < 1 || p >= static_cast<int>(rects.size()))
        throw math_error("sigma_p index out of range");
    RiggedConfig rc = phi_bar(t, rects);
    rc.rects = swap_adjacent(rects, p);
    return phi_bar_inv(rc);
}

Tableau i_plus(const Tableau& t, const RectSeq& rects, const RectSeq& target)
{
    if (e1_split_applicable(rects) && e1_split(rects) == target)
        return i_plus_inclusion(t, rects, target);
    if (!(e1_applicable(rects) && e1_step(rects) == target))
        throw math_error("i_plus requires an E1 relation between the rectangle sequences");
    return phi_bar_inv(j_plus(phi_bar(t, rects), target));
}

Tableau embed(const Tableau& t, const RectSeq& rects, const RectSeq& target, bool alternate)
{
    require_member(t, rects);
    Tableau cur = t;
    RectSeq r = rects;
    for (const auto& m : decompose(rects, target, alternate)) {
        RectSeq next = apply_move(r, m);
        cur = m.kind == Move::E2 ? sigma_p(cur, r, m.p) : i_plus(cur, r, next);
        r = next;
    }
    if (r != target)
        throw internal_error("move sequence does not reach the target");
    return cur;
}

} // namespace lrrc
