#include "lrrc/rigged.hpp"

#include <algorithm>
#include <functional>

#include "lrrc/errors.hpp"

namespace lrrc {

namespace {

const RiggedPartition kEmptyRigged;

void sort_strings(RiggedPartition& rp)
{
    std::sort(rp.begin(), rp.end(), [](const RString& a, const RString& b) {
        return a.length != b.length ? a.length > b.length : a.label > b.label;
    });
}

RiggedPartition& slot(RiggedConfig& rc, int k)
{
    if (static_cast<int>(rc.nu.size()) < k)
        rc.nu.resize(k);
    return rc.nu[k - 1];
}

// Remove the corner cell of lambda in column c.
Partition remove_corner(const Partition& lambda, int c)
{
    int r = corner_row_in_column(lambda, c);
    if (r == 0)
        throw internal_error("no corner cell in column " + std::to_string(c));
    Partition p = lambda;
    --p[r - 1];
    return normalized(p);
}

using Selection = std::vector<int>; // index into nu^(k), or -1

} // namespace

Partition RiggedConfig::shape(int k) const
{
    Partition p;
    if (k < 1 || k > static_cast<int>(nu.size()))
        return p;
    for (const auto& s : nu[k - 1])
        p.push_back(s.length);
    return normalized(p);
}

Configuration RiggedConfig::configuration() const
{
    Configuration c;
    for (int k = 1; k <= static_cast<int>(nu.size()); ++k)
        c.push_back(shape(k));
    return c;
}

const RiggedPartition& RiggedConfig::at(int k) const
{
    if (k < 1 || k > static_cast<int>(nu.size()))
        return kEmptyRigged;
    return nu[k - 1];
}

void RiggedConfig::canonicalize()
{
    for (auto& rp : nu) {
        std::erase_if(rp, [](const RString& s) { return s.length <= 0; });
        sort_strings(rp);
    }
    while (!nu.empty() && nu.back().empty())
        nu.pop_back();
}

bool same_data(const RiggedConfig& a, const RiggedConfig& b)
{
    RiggedConfig x = a, y = b;
    x.canonicalize();
    y.canonicalize();
    return x.nu == y.nu;
}

RiggedConfig empty_rc(const Partition& lambda, const RectSeq& rects)
{
    return {normalized(lambda), rects, {}};
}

RiggedConfig from_configuration(const Partition& lambda, const RectSeq& rects,
                                const Configuration& nu)
{
    RiggedConfig rc{normalized(lambda), rects, {}};
    for (const auto& p : nu) {
        RiggedPartition rp;
        for (int x : p)
            rp.push_back({x, 0});
        rc.nu.push_back(rp);
    }
    rc.canonicalize();
    return rc;
}

int config_size(const Partition& lambda, const RectSeq& rects, int k)
{
    Partition lt = transpose(lambda);
    int s = 0;
    for (int j = k + 1; j <= static_cast<int>(lt.size()); ++j)
        s += lt[j - 1];
    for (const auto& r : rects)
        s -= r.height * std::max(r.width - k, 0);
    return s;
}

static const Partition& config_at(const Configuration& nu, int k)
{
    static const Partition empty;
    if (k < 1 || k > static_cast<int>(nu.size()))
        return empty;
    return nu[k - 1];
}

int vacancy(const Configuration& nu, const RectSeq& rects, int k, int n)
{
    int q = 0;
    for (const auto& r : rects)
        if (r.width == k)
            q += std::min(r.height, n);
    return q_n(config_at(nu, k - 1), n) - 2 * q_n(config_at(nu, k), n) +
           q_n(config_at(nu, k + 1), n) + q;
}

int vacancy(const RiggedConfig& rc, int k, int n) { return vacancy(rc.configuration(), rc.rects, k, n); }

int colabel(const RiggedConfig& rc, int k, const RString& s) { return vacancy(rc, k, s.length) - s.label; }

bool is_singular(const RiggedConfig& rc, int k, const RString& s) { return colabel(rc, k, s) == 0; }

int config_depth(const Configuration& nu, const RectSeq& rects)
{
    return std::max(static_cast<int>(nu.size()), max_width(rects)) + 1;
}

int config_extent(const Configuration& nu, const RectSeq& rects)
{
    int m = 1;
    for (const auto& p : nu)
        if (!p.empty())
            m = std::max(m, p[0]);
    for (const auto& r : rects)
        m = std::max(m, r.height);
    return m;
}

bool has_config_sizes(const Partition& lambda, const RectSeq& rects, const Configuration& nu)
{
    if (total(lambda) != total(rects))
        return false;
    int depth = std::max({config_depth(nu, rects), part(lambda, 1) + 1});
    for (int k = 1; k <= depth; ++k)
        if (total(config_at(nu, k)) != config_size(lambda, rects, k))
            return false;
    return true;
}

bool is_admissible(const Configuration& nu, const RectSeq& rects)
{
    int depth = config_depth(nu, rects);
    int extent = config_extent(nu, rects);
    for (int k = 1; k <= depth; ++k)
        for (int n = 1; n <= extent; ++n)
            if (vacancy(nu, rects, k, n) < 0)
                return false;
    return true;
}

bool is_valid(const RiggedConfig& rc)
{
    if (!is_partition(rc.lambda))
        return false;
    Configuration nu = rc.configuration();
    if (!has_config_sizes(rc.lambda, rc.rects, nu) || !is_admissible(nu, rc.rects))
        return false;
    for (int k = 1; k <= static_cast<int>(rc.nu.size()); ++k)
        for (const auto& s : rc.nu[k - 1]) {
            if (s.length < 1 || s.label < 0 || s.label > vacancy(nu, rc.rects, k, s.length))
                return false;
        }
    return true;
}

namespace {

// Vacancy numbers at index k only involve nu^(k-1), nu^(k), nu^(k+1).
bool row_admissible(const Configuration& nu, const RectSeq& rects, int k, int extent)
{
    for (int n = 1; n <= extent; ++n)
        if (vacancy(nu, rects, k, n) < 0)
            return false;
    return true;
}

void configs_rec(const std::vector<int>& sizes, const Partition& lt, const RectSeq& rects,
                 bool pruned, int extent, Configuration& cur, std::vector<Configuration>& out)
{
    int k = static_cast<int>(cur.size()) + 1;
    if (k > static_cast<int>(sizes.size())) {
        if (k >= 2 && !row_admissible(cur, rects, k - 1, extent))
            return;
        Configuration c = cur;
        while (!c.empty() && c.back().empty())
            c.pop_back();
        if (is_admissible(c, rects))
            out.push_back(c);
        return;
    }
    int bound = pruned ? part(lt, k + 1) : sizes[k - 1];
    for (const auto& p : partitions_of(sizes[k - 1], bound)) {
        cur.push_back(p);
        if (k < 2 || row_admissible(cur, rects, k - 1, extent))
            configs_rec(sizes, lt, rects, pruned, extent, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Configuration> enumerate_configs(const Partition& lambda, const RectSeq& rects,
                                             bool pruned)
{
    std::vector<Configuration> out;
    Partition lam = normalized(lambda);
    if (total(lam) != total(rects))
        return out;
    int depth = std::max(part(lam, 1), max_width(rects));
    std::vector<int> sizes;
    for (int k = 1; k <= depth; ++k) {
        int s = config_size(lam, rects, k);
        if (s < 0)
            return out;
        sizes.push_back(s);
    }
    while (!sizes.empty() && sizes.back() == 0)
        sizes.pop_back();
    int extent = 1;
    for (int s : sizes)
        extent = std::max(extent, s);
    for (const auto& r : rects)
        extent = std::max(extent, r.height);
    Configuration cur;
    configs_rec(sizes, transpose(lam), rects, pruned, extent, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RiggedConfig> riggings_of(const Partition& lambda, const RectSeq& rects,
                                      const Configuration& nu)
{
    struct Block {
        int k, n;
        std::vector<Partition> choices;
    };
    std::vector<Block> blocks;
    for (int k = 1; k <= static_cast<int>(nu.size()); ++k) {
        Partition distinct = nu[k - 1];
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int n : distinct) {
            int m = multiplicity(nu[k - 1], n);
            int p = vacancy(nu, rects, k, n);
            if (p < 0)
                return {};
            blocks.push_back({k, n, partitions_in_box(m, p)});
        }
    }
    std::vector<RiggedConfig> out;
    RiggedConfig base{normalized(lambda), rects, std::vector<RiggedPartition>(nu.size())};
    std::function<void(std::size_t, RiggedConfig&)> rec = [&](std::size_t b, RiggedConfig& cur) {
        if (b == blocks.size()) {
            RiggedConfig c = cur;
            c.canonicalize();
            out.push_back(std::move(c));
            return;
        }
        const Block& blk = blocks[b];
        int m = multiplicity(nu[blk.k - 1], blk.n);
        auto& rp = cur.nu[blk.k - 1];
        for (const auto& labels : blk.choices) {
            for (int i = 0; i < m; ++i)
                rp.push_back({blk.n, part(labels, i + 1)});
            rec(b + 1, cur);
            rp.resize(rp.size() - m);
        }
    };
    rec(0, base);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RiggedConfig> enumerate_rcs(const Partition& lambda, const RectSeq& rects)
{
    std::vector<RiggedConfig> out;
    for (const auto& nu : enumerate_configs(lambda, rects)) {
        auto r = riggings_of(lambda, rects, nu);
        out.insert(out.end(), r.begin(), r.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

int cc_config(const Configuration& nu)
{
    int s = 0;
    for (int k = 1; k <= static_cast<int>(nu.size()); ++k) {
        int top = part(nu[k - 1], 1);
        for (int n = 1; n <= top; ++n) {
            int a = column_size(nu[k - 1], n);
            int b = column_size(config_at(nu, k + 1), n);
            s += a * (a - b);
        }
    }
    return s;
}

int cc(const RiggedConfig& rc)
{
    int s = cc_config(rc.configuration());
    for (const auto& rp : rc.nu)
        for (const auto& x : rp)
            s += x.label;
    return s;
}

QPoly rigging_gf(const Configuration& nu, const RectSeq& rects)
{
    QPoly r = QPoly::constant(1);
    for (int k = 1; k <= static_cast<int>(nu.size()); ++k) {
        Partition distinct = nu[k - 1];
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int n : distinct) {
            int m = multiplicity(nu[k - 1], n);
            int p = vacancy(nu, rects, k, n);
            if (p < 0)
                return {};
            QPoly box;
            for (const auto& j : partitions_in_box(m, p))
                box += QPoly::monomial(total(j));
            r = r * box;
        }
    }
    return r;
}

RiggedConfig theta(const RiggedConfig& rc)
{
    Configuration nu = rc.configuration();
    RiggedConfig out = rc;
    for (int k = 1; k <= static_cast<int>(out.nu.size()); ++k)
        for (auto& s : out.nu[k - 1])
            s.label = vacancy(nu, rc.rects, k, s.length) - s.label;
    out.canonicalize();
    return out;
}

RiggedConfig theta_ev(const RiggedConfig& rc)
{
    RiggedConfig out = theta(rc);
    out.rects = reversed(rc.rects);
    return out;
}

RiggedConfig j_hat(const RiggedConfig& rc)
{
    if (rc.rects.empty())
        throw math_error("j_hat on the empty rectangle sequence");
    Rect last = rc.rects.back();
    RiggedConfig out = rc;
    out.rects = hat(rc.rects);
    if (last.width == 1)
        return out;
    for (int k = 1; k < last.width; ++k)
        slot(out, k).push_back({last.height, 0});
    Configuration nu = out.configuration();
    for (int k = 1; k < last.width; ++k) {
        auto& rp = out.nu[k - 1];
        // The freshly added string is the last with this length and label 0.
        for (auto it = rp.rbegin(); it != rp.rend(); ++it)
            if (it->length == last.height && it->label == 0) {
                it->label = vacancy(nu, out.rects, k, last.height);
                break;
            }
    }
    out.canonicalize();
    return out;
}

RiggedConfig j_hat_inv(const RiggedConfig& rc, const RectSeq& target)
{
    if (target.empty())
        throw math_error("j_hat inverse onto the empty rectangle sequence");
    if (hat(target) != rc.rects)
        throw math_error("rigged configuration does not live over hat(R)");
    Rect last = target.back();
    RiggedConfig out = rc;
    out.rects = target;
    if (last.width == 1)
        return out;
    for (int k = 1; k < last.width; ++k) {
        auto& rp = slot(out, k);
        auto it = std::find_if(rp.begin(), rp.end(), [&](const RString& s) {
            return s.length == last.height && is_singular(rc, k, s);
        });
        if (it == rp.end())
            throw math_error("not in the image of j_hat: no singular string of length " +
                             std::to_string(last.height) + " in nu^(" + std::to_string(k) + ")");
        rp.erase(it);
    }
    out.canonicalize();
    return out;
}

RiggedConfig j_check(const RiggedConfig& rc)
{
    if (rc.rects.empty())
        throw math_error("j_check on the empty rectangle sequence");
    Rect first = rc.rects.front();
    RiggedConfig out = rc;
    out.rects = check(rc.rects);
    for (int k = 1; k < first.width; ++k)
        slot(out, k).push_back({first.height, 0});
    out.canonicalize();
    return out;
}

RiggedConfig j_greater(const RiggedConfig& rc)
{
    RiggedConfig out = rc;
    out.rects = split_last_row(rc.rects);
    return out;
}

RiggedConfig j_less(const RiggedConfig& rc)
{
    if (rc.rects.empty())
        throw math_error("j_less on the empty rectangle sequence");
    Rect first = rc.rects.front();
    RiggedConfig out = rc;
    out.rects = split_first_row(rc.rects);
    if (first.width <= static_cast<int>(out.nu.size()))
        for (auto& s : out.nu[first.width - 1])
            if (s.length >= 1 && s.length < first.height)
                ++s.label;
    out.canonicalize();
    return out;
}

RiggedConfig with_colabels(const RiggedConfig& rc, const RectSeq& target)
{
    Configuration nu = rc.configuration();
    RiggedConfig out = rc;
    out.rects = target;
    for (int k = 1; k <= static_cast<int>(out.nu.size()); ++k)
        for (auto& s : out.nu[k - 1])
            s.label = vacancy(nu, target, k, s.length) - (vacancy(nu, rc.rects, k, s.length) - s.label);
    out.canonicalize();
    return out;
}

RiggedConfig j_plus(const RiggedConfig& rc, const RectSeq& target)
{
    bool ok = (e1_applicable(rc.rects) && e1_step(rc.rects) == target) ||
              (e1_split_applicable(rc.rects) && e1_split(rc.rects) == target);
    if (!ok)
        throw math_error("j_plus requires an E1 relation between the rectangle sequences");
    return with_colabels(rc, target);
}

namespace {

struct Chain {
    Selection picks; // picks[k-1] for k < rank
    std::vector<std::optional<int>> lengths;
    int rank = 0;
};

// Select, for k >= start, minimal strings of length >= the previous choice
// satisfying `eligible`.
Chain select_upward(const RiggedConfig& rc, int start, int initial,
                    const std::function<bool(int, const RString&)>& eligible)
{
    Chain ch;
    for (int k = 0; k < start; ++k)
        ch.lengths.push_back(initial);
    for (int k = 1; k < start; ++k)
        ch.picks.push_back(-1);
    int prev = initial;
    for (int k = start;; ++k) {
        const auto& rp = rc.at(k);
        int best = -1;
        for (int i = 0; i < static_cast<int>(rp.size()); ++i) {
            const auto& s = rp[i];
            if (s.length < prev || !eligible(k, s))
                continue;
            if (best < 0 || s.length < rp[best].length)
                best = i;
        }
        if (best < 0) {
            ch.rank = k;
            ch.lengths.push_back(std::nullopt);
            return ch;
        }
        ch.picks.push_back(best);
        prev = rp[best].length;
        ch.lengths.push_back(prev);
    }
}

// Shorten picked strings; `relabel` fixes labels in the new context.
RiggedConfig shorten(const RiggedConfig& rc, const Chain& ch, const Partition& lambda,
                     const RectSeq& rects, bool keep_zero)
{
    RiggedConfig out = rc;
    out.lambda = lambda;
    out.rects = rects;
    std::vector<std::vector<bool>> picked(rc.nu.size());
    for (std::size_t k = 0; k < rc.nu.size(); ++k)
        picked[k].assign(rc.nu[k].size(), false);
    for (std::size_t k = 0; k < ch.picks.size(); ++k)
        if (ch.picks[k] >= 0) {
            --out.nu[k][ch.picks[k]].length;
            picked[k][ch.picks[k]] = true;
        }
    Configuration nu = out.configuration();
    Configuration old = rc.configuration();
    for (std::size_t k = 0; k < out.nu.size(); ++k)
        for (std::size_t i = 0; i < out.nu[k].size(); ++i) {
            auto& s = out.nu[k][i];
            if (s.length == 0)
                continue;
            int kk = static_cast<int>(k) + 1;
            if (picked[k][i])
                s.label = keep_zero ? 0 : vacancy(nu, rects, kk, s.length);
            else if (keep_zero)
                s.label = vacancy(nu, rects, kk, s.length) -
                          (vacancy(old, rc.rects, kk, s.length) - s.label);
        }
    out.canonicalize();
    return out;
}

} // namespace

int rank_bar(const RiggedConfig& rc)
{
    if (rc.rects.empty() || rc.rects.back().width != 1)
        throw math_error("delta_bar requires the last rectangle to be a single column");
    return select_upward(rc, 1, rc.rects.back().height,
                         [&](int k, const RString& s) { return is_singular(rc, k, s); })
        .rank;
}

int rank_tilde(const RiggedConfig& rc) { return rank_bar(theta_ev(rc)); }

DeltaResult delta_bar(const RiggedConfig& rc)
{
    if (rc.rects.empty() || rc.rects.back().width != 1)
        throw math_error("delta_bar requires the last rectangle to be a single column");
    Chain ch = select_upward(rc, 1, rc.rects.back().height,
                             [&](int k, const RString& s) { return is_singular(rc, k, s); });
    Partition rho = remove_corner(rc.lambda, ch.rank);
    return {shorten(rc, ch, rho, bar(rc.rects), false), ch.rank, ch.lengths};
}

RiggedConfig delta_bar_inv(const RiggedConfig& rc, const Partition& lambda, const RectSeq& target,
                           int c, std::vector<std::optional<int>>* selected)
{
    if (target.empty() || target.back().width != 1)
        throw math_error("delta_bar inverse requires the last rectangle to be a single column");
    if (bar(target) != rc.rects)
        throw math_error("rigged configuration does not live over bar(R)");
    Partition lam = normalized(lambda);
    if (corner_row_in_column(lam, c) == 0 || remove_corner(lam, c) != rc.lambda)
        throw math_error("lambda/rho is not a cell in column " + std::to_string(c));
    if (target.back().height > 1) {
        int r = rank_bar(rc);
        if (r < c)
            throw math_error("not in the image of delta_bar: rank " + std::to_string(r) +
                             " is below column " + std::to_string(c));
    }
    RiggedConfig out = rc;
    out.lambda = lam;
    out.rects = target;
    std::vector<int> pick(c, -1);
    std::optional<int> bound;
    for (int k = c - 1; k >= 1; --k) {
        const auto& rp = rc.at(k);
        int best = -1;
        for (int i = 0; i < static_cast<int>(rp.size()); ++i) {
            const auto& s = rp[i];
            if ((bound && s.length > *bound) || !is_singular(rc, k, s))
                continue;
            if (best < 0 || s.length > rp[best].length)
                best = i;
        }
        pick[k] = best;
        bound = best < 0 ? 0 : rp[best].length;
    }
    if (selected) {
        selected->assign(c + 1, std::nullopt);
        (*selected)[0] = target.back().height - 1;
        for (int k = 1; k < c; ++k)
            (*selected)[k] = pick[k] < 0 ? 0 : rc.at(k)[pick[k]].length;
    }
    std::vector<std::pair<int, int>> grown; // (k, index) of grown strings
    for (int k = 1; k < c; ++k) {
        auto& rp = slot(out, k);
        if (pick[k] < 0) {
            rp.push_back({1, 0});
            grown.emplace_back(k, static_cast<int>(rp.size()) - 1);
        } else {
            ++rp[pick[k]].length;
            grown.emplace_back(k, pick[k]);
        }
    }
    Configuration nu = out.configuration();
    for (auto [k, i] : grown) {
        auto& s = out.nu[k - 1][i];
        s.label = vacancy(nu, target, k, s.length);
    }
    out.canonicalize();
    return out;
}

DeltaResult delta_tilde(const RiggedConfig& rc)
{
    if (rc.rects.empty() || rc.rects.front().width != 1)
        throw math_error("delta_tilde requires the first rectangle to be a single column");
    Chain ch = select_upward(rc, 1, rc.rects.front().height,
                             [](int, const RString& s) { return s.label == 0; });
    Partition rho = remove_corner(rc.lambda, ch.rank);
    return {shorten(rc, ch, rho, tilde(rc.rects), true), ch.rank, ch.lengths};
}

DeltaResult delta_tilde_conjugated(const RiggedConfig& rc)
{
    if (rc.rects.empty() || rc.rects.front().width != 1)
        throw math_error("delta_tilde requires the first rectangle to be a single column");
    DeltaResult d = delta_bar(theta_ev(rc));
    d.rc = theta_ev(d.rc);
    return d;
}

DeltaResult partial_del(const RiggedConfig& rc)
{
    if (rc.rects.empty() || rc.rects.back().height != 1)
        throw math_error("partial_del requires the last rectangle to be a single row");
    int eta = rc.rects.back().width;
    Chain ch = select_upward(rc, eta, 1,
                             [&](int k, const RString& s) { return is_singular(rc, k, s); });
    RectSeq rects = rc.rects;
    --rects.back().width;
    rects = cleaned(rects);
    Partition rho = remove_corner(rc.lambda, ch.rank);
    return {shorten(rc, ch, rho, rects, false), ch.rank, ch.lengths};
}

RiggedConfig tr_rc(const RiggedConfig& rc)
{
    Configuration nu = rc.configuration();
    const Partition& lam = rc.lambda;
    int bound = std::max({static_cast<int>(lam.size()), part(lam, 1), max_width(rc.rects),
                          config_extent(nu, rc.rects), static_cast<int>(nu.size()) + 1}) +
                1;
    // alpha[i][j] = size of column j of nu^(i), i = 0..bound, j = 1..bound.
    auto alpha = [&](int i, int j) { return column_size(config_at(nu, i), j); };
    auto m = [&](int i, int j) { return alpha(i - 1, j) - alpha(i, j); };
    auto in_rects = [&](int i, int j) {
        int s = 0;
        for (const auto& r : rc.rects)
            if (i <= r.height && j <= r.width)
                ++s;
        return s;
    };
    Configuration nut;
    std::vector<int> prev(bound + 1, 0);
    for (int i = 1; i <= bound; ++i) {
        std::vector<int> col(bound + 1, 0);
        for (int j = 1; j <= bound; ++j) {
            int mt = -m(j, i) + (j <= part(lam, i) ? 1 : 0) - in_rects(i, j);
            col[j] = prev[j] - mt;
            if (col[j] < 0)
                throw internal_error("tr_rc produced a negative column size");
            if (j > 1 && col[j] > col[j - 1])
                throw internal_error("tr_rc column sizes are not a partition");
        }
        if (col[bound] != 0)
            throw internal_error("tr_rc bound too small");
        Partition cols(col.begin() + 1, col.end());
        nut.push_back(transpose(normalized(cols)));
        prev = col;
    }
    if (std::any_of(prev.begin(), prev.end(), [](int x) { return x != 0; }))
        throw internal_error("tr_rc configuration does not terminate");
    while (!nut.empty() && nut.back().empty())
        nut.pop_back();

    RiggedConfig out = from_configuration(transpose(lam), transpose(rc.rects), nut);
    // Labels for strings of length k in nut^(n) come from J_n^(k).
    for (int k = 1; k <= static_cast<int>(nu.size()); ++k) {
        Partition distinct = nu[k - 1];
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int n : distinct) {
            int mult = multiplicity(nu[k - 1], n);
            int p = vacancy(nu, rc.rects, k, n);
            if (p == 0)
                continue;
            Partition labels;
            for (const auto& s : rc.nu[k - 1])
                if (s.length == n)
                    labels.push_back(s.label);
            std::sort(labels.begin(), labels.end(), std::greater<>());
            Partition comp;
            for (int i = mult - 1; i >= 0; --i)
                comp.push_back(p - labels[i]);
            Partition jt = transpose(normalized(comp));
            jt.resize(p, 0);
            if (multiplicity(config_at(nut, n), k) != p)
                throw internal_error("tr_rc rigging rectangles are incompatible");
            auto& rp = out.nu[n - 1];
            std::size_t idx = 0;
            for (auto& s : rp)
                if (s.length == k)
                    s.label = jt[idx++];
        }
    }
    out.canonicalize();
    return out;
}

} // namespace lrrc
