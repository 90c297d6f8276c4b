#include "lrrc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "lrrc/bijection.hpp"
#include "lrrc/errors.hpp"
#include "lrrc/io.hpp"
#include "lrrc/kostka.hpp"
#include "lrrc/lr.hpp"
#include "lrrc/rigged.hpp"

namespace lrrc {

namespace {

constexpr std::size_t kMaxFailures = 20;

struct Sink {
    std::map<std::string, long> checks;
    long failure_count = 0;
    std::vector<Failure> failures;
    long cases = 0;

    void fail(const std::string& name, const std::string& detail, json input)
    {
        ++failure_count;
        if (failures.size() < kMaxFailures)
            failures.push_back({name, detail, std::move(input)});
    }

    template <class F>
    void expect(const std::string& name, bool ok, F&& input)
    {
        ++checks[name];
        if (!ok)
            fail(name, "", input());
    }

    // Run body; any exception counts as a failure of `name`.
    template <class Body, class F>
    void guard(const std::string& name, Body&& body, F&& input)
    {
        try {
            body();
        } catch (const std::exception& e) {
            ++checks[name];
            fail(name, e.what(), input());
        }
    }
};

using Task = std::function<void(Sink&)>;

json in_t(const RectSeq& r, const Tableau& t)
{
    return {{"rects", to_json(r)}, {"tableau", to_json(t)}};
}

json in_rc(const RiggedConfig& rc) { return to_json(rc); }

json in_lr(const Partition& lambda, const RectSeq& r)
{
    return {{"lambda", lambda}, {"rects", to_json(r)}};
}

bool all_unit(const RectSeq& r)
{
    return std::all_of(r.begin(), r.end(), [](const Rect& x) { return x.width == 1 && x.height == 1; });
}

bool single_rows(const RectSeq& r)
{
    return std::all_of(r.begin(), r.end(), [](const Rect& x) { return x.height == 1; });
}

bool widths_decreasing(const RectSeq& r)
{
    for (std::size_t i = 1; i < r.size(); ++i)
        if (r[i].width > r[i - 1].width)
            return false;
    return true;
}

RectSeq rows_rects(const std::vector<int>& widths)
{
    RectSeq r;
    for (int w : widths)
        r.push_back({w, 1});
    return r;
}

bool throws_math(const std::function<void()>& f)
{
    try {
        f();
    } catch (const math_error&) {
        return true;
    }
    return false;
}

// Vacancy difference predicted by a selected length sequence.
// open_low: chi(l^{k-1} <= n < l^k) when false, chi(s^{k-1} < n <= s^k) when true.
int window(const std::vector<std::optional<int>>& s, int k, int n, bool open_low)
{
    if (k < 1 || k >= static_cast<int>(s.size()) + 0)
        return 0;
    auto lo = s[k - 1];
    auto hi = s[k];
    if (!lo)
        return 0;
    if (open_low)
        return n > *lo && (!hi || n <= *hi) ? 1 : 0;
    return n >= *lo && (!hi || n < *hi) ? 1 : 0;
}

// Pad a selection sequence with the unbounded sentinel up to index m.
std::vector<std::optional<int>> padded(std::vector<std::optional<int>> s, int m)
{
    while (static_cast<int>(s.size()) <= m)
        s.push_back(std::nullopt);
    return s;
}

int max_k(const RiggedConfig& a, const RiggedConfig& b)
{
    int k = std::max(config_depth(a.configuration(), a.rects), config_depth(b.configuration(), b.rects));
    return k + 2;
}

int max_n(const RiggedConfig& a, const RiggedConfig& b)
{
    int n = std::max(config_extent(a.configuration(), a.rects), config_extent(b.configuration(), b.rects));
    return n + 2;
}

// P(before) - P(after) against the window prediction, all k, n >= 1.
bool vacancy_change_matches(const RiggedConfig& before, const RiggedConfig& after,
                            const std::vector<std::optional<int>>& sel, bool open_low)
{
    int km = max_k(before, after);
    int nm = max_n(before, after);
    auto s = padded(sel, km + 1);
    for (int k = 1; k <= km; ++k)
        for (int n = 1; n <= nm; ++n) {
            int d = vacancy(before, k, n) - vacancy(after, k, n);
            int want = window(s, k, n, open_low) - window(s, k + 1, n, open_low);
            if (d != want)
                return false;
        }
    return true;
}

std::vector<Partition> shapes_of(int n) { return partitions_of(n); }

std::vector<Partition> removable_shapes(const Partition& lambda, std::vector<int>* cols)
{
    std::vector<Partition> out;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (i + 1 < lambda.size() && lambda[i + 1] == lambda[i])
            continue;
        Partition rho = lambda;
        --rho[i];
        if (cols)
            cols->push_back(lambda[i]);
        out.push_back(normalized(rho));
    }
    return out;
}

// ---------------------------------------------------------------- bijectivity

void bijectivity(const RectSeq& r, Sink& sink)
{
    int n = total(r);
    for (const auto& lambda : shapes_of(n)) {
        auto clr = enumerate_clr(lambda, r);
        auto rcs = enumerate_rcs(lambda, r);
        ++sink.cases;
        sink.expect("counts agree", clr.size() == rcs.size(), [&] { return in_lr(lambda, r); });
        std::vector<RiggedConfig> images;
        for (const auto& t : clr) {
            sink.guard("forward", [&] {
                auto rc = phi_bar(t, r);
                sink.expect("image valid", is_valid(rc), [&] { return in_t(r, t); });
                sink.expect("direct equals recursive", rc == phi_bar_recursive(t, r), [&] { return in_t(r, t); });
                sink.expect("inverse after forward", phi_bar_inv(rc) == t, [&] { return in_t(r, t); });
                sink.expect("coquantum round trip", phi_tilde_inv(phi_tilde(t, r)) == t, [&] { return in_t(r, t); });
                images.push_back(rc);
            }, [&] { return in_t(r, t); });
        }
        std::sort(images.begin(), images.end());
        bool distinct = std::adjacent_find(images.begin(), images.end()) == images.end();
        sink.expect("injective", distinct, [&] { return in_lr(lambda, r); });
        sink.expect("image equals RC", images == rcs, [&] { return in_lr(lambda, r); });
        for (const auto& rc : rcs)
            sink.guard("backward", [&] {
                auto t = phi_bar_inv(rc);
                sink.expect("forward after inverse", phi_bar(t, r) == rc, [&] { return in_rc(rc); });
            }, [&] { return in_rc(rc); });
        if (n <= 7)
            for (const auto& s : standard_tableaux(lambda))
                sink.expect("membership tests agree",
                            is_clr_fast(s, lambda, r) == is_clr_insertion(s, lambda, r),
                            [&] { return in_t(r, s); });
    }
}

// ---------------------------------------------------------------- evacuation

void evacuation(const RectSeq& r, Sink& sink)
{
    int n = total(r);
    RectSeq rev = reversed(r);
    for (const auto& lambda : shapes_of(n)) {
        for (const auto& t : enumerate_clr(lambda, r)) {
            ++sink.cases;
            auto in = [&] { return in_t(r, t); };
            sink.guard("evacuation", [&] {
                auto e = clr_ev(t, r);
                sink.expect("ev involution", evacuate(e) == t, in);
                sink.expect("evacuation theorem", theta_ev(phi_bar(t, r)) == phi_bar(e, rev), in);
                if (!r.empty()) {
                    sink.expect("ev i_hat = i_check ev", clr_ev(i_hat(t, r), hat(r)) == i_check(e, rev), in);
                    sink.expect("ev i_greater = i_less ev",
                                clr_ev(i_greater(t, r), split_last_row(r)) == i_less(e, rev), in);
                }
                for (int i = 1; i <= n; ++i)
                    for (int j = i; j <= n; ++j) {
                        auto lhs = schensted_p(shifted(reading_word(restrict(e, i, j)), -(i - 1)));
                        auto sub = schensted_p(shifted(reading_word(restrict(t, n + 1 - j, n + 1 - i)), -(n - j)));
                        sink.expect("ev of intervals", lhs == evacuate(sub), in);
                    }
            }, in);
        }
        for (const auto& rc : enumerate_rcs(lambda, r)) {
            auto in = [&] { return in_rc(rc); };
            sink.guard("theta", [&] {
                auto x = theta_ev(rc);
                sink.expect("theta_ev valid", is_valid(x), in);
                sink.expect("theta_ev involution", theta_ev(x) == rc, in);
                sink.expect("theta involution", theta(theta(rc)) == rc, in);
                if (!r.empty())
                    sink.expect("theta_ev j_hat = j_check theta_ev", theta_ev(j_hat(rc)) == j_check(x), in);
            }, in);
        }
    }
}

// ---------------------------------------------------------------- transpose

void transposition(const RectSeq& r, Sink& sink)
{
    int n = total(r);
    RectSeq rt = transpose(r);
    int norm = pair_norm(r);
    for (const auto& lambda : shapes_of(n)) {
        Partition lt = transpose(lambda);
        for (const auto& t : enumerate_clr(lambda, r)) {
            ++sink.cases;
            auto in = [&] { return in_t(r, t); };
            sink.guard("transpose", [&] {
                auto u = tr_lr(t, r);
                sink.expect("tr_lr lands in CLR", is_clr(u, lt, rt), in);
                sink.expect("tr_lr involution", tr_lr(u, rt) == t, in);
                sink.expect("transpose theorem", tr_rc(phi_bar(t, r)) == phi_bar(u, rt), in);
            }, in);
        }
        for (const auto& rc : enumerate_rcs(lambda, r)) {
            auto in = [&] { return in_rc(rc); };
            sink.guard("tr_rc", [&] {
                auto x = tr_rc(rc);
                sink.expect("tr_rc valid", is_valid(x), in);
                sink.expect("tr_rc involution", tr_rc(x) == rc, in);
                sink.expect("cc plus cc tr equals norm", cc(rc) + cc(x) == norm, in);
            }, in);
        }
        sink.guard("duality", [&] {
            auto k = kostka_rc(lambda, r);
            auto kt = kostka_rc(lt, rt);
            sink.expect("duality", k.degree() <= norm && kt == k.reversed(norm),
                        [&] { return in_lr(lambda, r); });
        }, [&] { return in_lr(lambda, r); });
    }
}

// ---------------------------------------------------------------- involutions

void involutions(const RectSeq& r, Sink& sink)
{
    int n = total(r);
    RectSeq rt = transpose(r);
    int norm = pair_norm(r);
    for (const auto& lambda : shapes_of(n)) {
        for (const auto& t : enumerate_clr(lambda, r)) {
            ++sink.cases;
            auto in = [&] { return in_t(r, t); };
            sink.guard("tableau involutions", [&] {
                sink.expect("ev", evacuate(clr_ev(t, r)) == t, in);
                sink.expect("tr_lr", tr_lr(tr_lr(t, r), rt) == t, in);
            }, in);
        }
        for (const auto& rc : enumerate_rcs(lambda, r)) {
            auto in = [&] { return in_rc(rc); };
            sink.guard("rc involutions", [&] {
                sink.expect("theta", theta(theta(rc)) == rc, in);
                sink.expect("theta_ev", theta_ev(theta_ev(rc)) == rc, in);
                auto x = tr_rc(rc);
                sink.expect("tr_rc", tr_rc(x) == rc, in);
                sink.expect("cc plus cc tr", cc(rc) + cc(x) == norm, in);
            }, in);
        }
        sink.guard("duality", [&] {
            auto k = kostka_rc(lambda, r);
            sink.expect("duality", k.degree() <= norm && kostka_rc(transpose(lambda), rt) == k.reversed(norm),
                        [&] { return in_lr(lambda, r); });
        }, [&] { return in_lr(lambda, r); });
    }
}

// ---------------------------------------------------------------- embedding

std::vector<RectSeq> neighbours(const RectSeq& r)
{
    std::vector<RectSeq> out;
    for (int p = 1; p + 1 <= static_cast<int>(r.size()); ++p)
        if (r[p - 1] != r[p])
            out.push_back(swap_adjacent(r, p));
    if (e1_applicable(r))
        out.push_back(e1_step(r));
    if (e1_split_applicable(r))
        out.push_back(e1_split(r));
    return out;
}

void embedding(const RectSeq& r, Sink& sink)
{
    int n = total(r);
    auto targets = dominated_sequences(r);
    for (const auto& rp : targets)
        sink.expect("reachable sequences are dominated", dominates(r, rp),
                    [&] { return json{{"rects", to_json(r)}, {"target", to_json(rp)}}; });
    for (const auto& lambda : shapes_of(n)) {
        auto clr = enumerate_clr(lambda, r);
        if (clr.empty())
            continue;
        auto k = kostka_rc(lambda, r);
        for (const auto& rp : targets) {
            ++sink.cases;
            auto lin = [&] { return json{{"lambda", lambda}, {"rects", to_json(r)}, {"target", to_json(rp)}}; };
            std::vector<Tableau> images;
            for (const auto& t : clr) {
                auto in = [&] { return json{{"rects", to_json(r)}, {"target", to_json(rp)}, {"tableau", to_json(t)}}; };
                sink.guard("embed", [&] {
                    auto e = embed(t, r, rp);
                    sink.expect("path independent", embed(t, r, rp, true) == e, in);
                    sink.expect("embedding theorem", same_data(phi_tilde(e, rp), phi_tilde(t, r)), in);
                    images.push_back(e);
                }, in);
            }
            std::sort(images.begin(), images.end());
            sink.expect("embedding injective", std::adjacent_find(images.begin(), images.end()) == images.end(), lin);
            sink.guard("monotone", [&] {
                sink.expect("kostka monotone", k.coefficientwise_le(kostka_rc(lambda, rp)), lin);
            }, lin);
        }
        std::vector<RectSeq> plus;
        if (e1_applicable(r))
            plus.push_back(e1_step(r));
        if (e1_split_applicable(r))
            plus.push_back(e1_split(r));
        for (const auto& t : clr) {
            auto in = [&] { return in_t(r, t); };
            sink.guard("single moves", [&] {
                auto rc = phi_bar(t, r);
                for (const auto& rp : plus) {
                    auto img = i_plus(t, r, rp);
                    sink.expect("i_plus diagram", phi_bar(img, rp) == j_plus(rc, rp), in);
                    // The transposed inclusion, where it stays inside CLR, is the embedding.
                    try {
                        sink.expect("transposed inclusion agrees", i_plus_inclusion(t, r, rp) == img, in);
                    } catch (const math_error&) {
                        sink.expect("transposed inclusion defined for splits", !e1_split_applicable(r) || e1_split(r) != rp, in);
                    }
                }
                int len = static_cast<int>(r.size());
                for (int p = 1; p < len; ++p) {
                    RectSeq sr = swap_adjacent(r, p);
                    auto s = sigma_p(t, r, p);
                    sink.expect("sigma_p inverse", sigma_p(s, sr, p) == t, in);
                    if (p < len - 1) {
                        int m = n - r.back().size();
                        RectSeq head(r.begin(), r.end() - 1);
                        auto rest = as_straight(restrict(t, 1, m));
                        bool ok = as_straight(restrict(s, 1, m)) == sigma_p(rest, head, p);
                        for (int x = m + 1; x <= n && ok; ++x)
                            ok = cell_of(s, x) == cell_of(t, x);
                        sink.expect("sigma_p restriction", ok, in);
                    } else {
                        sink.expect("sigma_p evacuation",
                                    clr_ev(s, sr) == sigma_p(clr_ev(t, r), reversed(r), 1), in);
                    }
                    if (single_rows(r))
                        sink.expect("sigma_p is the automorphism of conjugation",
                                    beta_inv(s, sr) == ls_reflection(beta_inv(t, r), p), in);
                }
            }, in);
        }
        for (int p = 1; p < static_cast<int>(r.size()); ++p)
            sink.guard("reordering", [&] {
                sink.expect("kostka invariant under reordering",
                            kostka_rc(lambda, swap_adjacent(r, p)) == k, [&] { return in_lr(lambda, r); });
            }, [&] { return in_lr(lambda, r); });
    }
}

// ---------------------------------------------------------------- statistics

void statistics(const RectSeq& r, Sink& sink)
{
    int n = total(r);
    int norm = pair_norm(r);
    bool unit = all_unit(r);
    bool decreasing = widths_decreasing(r);
    RectSeq rows = rows_of(r);
    for (const auto& lambda : shapes_of(n)) {
        for (const auto& t : enumerate_clr(lambda, r)) {
            ++sink.cases;
            auto in = [&] { return in_t(r, t); };
            sink.guard("statistics", [&] {
                auto rc = phi_tilde(t, r);
                int c = cc(rc);
                sink.expect("charge within range", c >= 0 && c <= norm, in);
                sink.expect("charge matches cocharge", c + cocharge(t, r) == norm, in);
                if (unit) {
                    sink.expect("charge equals LS charge", c == ls_charge(t), in);
                    sink.expect("LS charge recursion", ls_charge(t) == ls_charge_recursive(t), in);
                    if (n >= 1) {
                        int alpha = column_size(rc.shape(1), 1);
                        auto d = delta_tilde(rc);
                        sink.expect("ascents equal first column", ascents(t) == alpha, in);
                        sink.expect("charge drop equals first column", c - cc(d.rc) == alpha, in);
                        sink.expect("minus matches delta_tilde", phi_tilde(minus(t), bar(r)) == d.rc, in);
                        sink.expect("LS charge drop", ls_charge(t) - ls_charge(minus(t)) == ascents(t), in);
                    }
                }
                if (decreasing) {
                    auto u = embed(t, r, rows);
                    sink.expect("charge equals word charge of rows", c == word_charge(reading_word(beta_inv(u, rows))), in);
                }
                if (single_rows(r) && decreasing)
                    sink.expect("charge equals classical charge", c == word_charge(reading_word(beta_inv(t, r))), in);
            }, in);
        }
        sink.guard("kostka", [&] {
            sink.expect("charge sum equals kostka", kostka_charge(lambda, r) == kostka_rc(lambda, r),
                        [&] { return in_lr(lambda, r); });
        }, [&] { return in_lr(lambda, r); });
    }
}

int n_of(const std::vector<int>& mu)
{
    int s = 0;
    for (std::size_t i = 0; i < mu.size(); ++i)
        s += static_cast<int>(i) * mu[i];
    return s;
}

// Cocharge recursion for column-strict tableaux of partition content.
void cocharge_recursion(int max_size, Sink& sink)
{
    for (int n = 1; n <= max_size; ++n)
        for (const auto& mu : partitions_of(n)) {
            RectSeq rr = rows_rects(mu);
            int len = static_cast<int>(mu.size());
            for (const auto& lambda : partitions_of(n))
                for (const auto& t : column_strict_tableaux(lambda, mu)) {
                    ++sink.cases;
                    for (int p = 1; p <= len; ++p) {
                        if (p < len && mu[p - 1] == mu[p])
                            continue;
                        auto in = [&] { return json{{"content", mu}, {"tableau", to_json(t)}, {"r", p}}; };
                        sink.guard("cocharge recursion", [&] {
                            Tableau s = t;
                            for (int q = p; q < len; ++q)
                                s = ls_reflection(s, q);
                            s = remove_rightmost(s, len);
                            for (int q = len - 1; q >= p; --q)
                                s = ls_reflection(s, q);
                            std::vector<int> mu2 = mu;
                            --mu2[p - 1];
                            while (!mu2.empty() && mu2.back() == 0)
                                mu2.pop_back();
                            bool ok = is_column_strict(s) && total(s.shape()) == n - 1;
                            std::vector<int> content(len, 0);
                            for (const auto& row : s.rows)
                                for (int x : row)
                                    ++content[x - 1];
                            while (!content.empty() && content.back() == 0)
                                content.pop_back();
                            ok = ok && content == mu2;
                            sink.expect("reduced tableau has reduced content", ok, in);
                            int co = n_of(mu) - word_charge(reading_word(t));
                            int co2 = n_of(mu2) - word_charge(reading_word(s));
                            auto b = beta(t, rr);
                            auto rc = phi_tilde(tr_lr(b, rr), transpose(rr));
                            int alpha = column_size(rc.shape(1), mu[p - 1]);
                            sink.expect("cocharge drop", co - co2 == alpha, in);
                        }, in);
                    }
                }
        }
}

// ---------------------------------------------------------------- commutation

void commutation(const RectSeq& r, Sink& sink)
{
    int n = total(r);
    int len = static_cast<int>(r.size());
    bool first_col = len > 0 && r.front().width == 1;
    bool last_col = len > 0 && r.back().width == 1;
    bool last_row = len > 0 && r.back().height == 1;
    std::vector<RectSeq> plus;
    if (e1_applicable(r))
        plus.push_back(e1_step(r));
    if (e1_split_applicable(r))
        plus.push_back(e1_split(r));
    for (const auto& lambda : shapes_of(n)) {
        Partition lt = transpose(lambda);
        auto clr = enumerate_clr(lambda, r);
        auto rcs = enumerate_rcs(lambda, r);
        if (len <= 2)
            sink.expect("at most one tableau for two rectangles", clr.size() <= 1,
                        [&] { return in_lr(lambda, r); });
        for (const auto& rc : rcs) {
            ++sink.cases;
            auto in = [&] { return in_rc(rc); };
            sink.guard("rc maps", [&] {
                if (len == 0)
                    return;
                auto h = j_hat(rc);
                auto c = j_check(rc);
                sink.expect("j_hat valid", is_valid(h), in);
                sink.expect("j_check valid", is_valid(c), in);
                sink.expect("j_hat inverse", j_hat_inv(h, r) == rc, in);
                sink.expect("j_hat j_check commute", j_hat(c) == j_check(h), in);
                auto l = j_less(rc);
                sink.expect("j_less valid", is_valid(l), in);
                sink.expect("j_less keeps colabels", with_colabels(rc, split_first_row(r)) == l, in);
                sink.expect("j_greater valid", is_valid(j_greater(rc)), in);
                sink.expect("tr_rc j_hat = j_greater tr_rc", tr_rc(h) == j_greater(tr_rc(rc)), in);
                for (const auto& rp : plus) {
                    auto x = j_plus(rc, rp);
                    sink.expect("j_plus valid", is_valid(x), in);
                    auto th = theta(rc);
                    th.rects = rp;
                    sink.expect("j_plus is the theta-conjugated inclusion", x == theta(th), in);
                }
                if (last_col) {
                    auto d = delta_bar(rc);
                    sink.expect("delta_bar valid", is_valid(d.rc), in);
                    sink.expect("delta_bar rank", d.rank == rank_bar(rc), in);
                    sink.expect("delta_bar inverse", delta_bar_inv(d.rc, lambda, r, d.rank) == rc, in);
                    sink.expect("delta_bar vacancy change", vacancy_change_matches(rc, d.rc, d.lengths, false), in);
                    if (!bar(r).empty()) {
                        auto dc = delta_bar(c);
                        sink.expect("delta_bar j_check commute", dc.rc == j_check(d.rc) && dc.rank == d.rank, in);
                    }
                    sink.expect("tr_rc delta_bar = del tr_rc", tr_rc(d.rc) == partial_del(tr_rc(rc)).rc, in);
                    if (last_row)
                        sink.expect("del equals delta_bar on a cell", partial_del(rc).rc == d.rc, in);
                }
                if (last_row) {
                    auto p = partial_del(rc);
                    auto q = delta_bar(h);
                    sink.expect("del equals delta_bar j_hat", p.rc == q.rc && p.rank == q.rank, in);
                    sink.expect("del valid", is_valid(p.rc), in);
                }
                if (first_col) {
                    auto t = delta_tilde(rc);
                    auto tc = delta_tilde_conjugated(rc);
                    sink.expect("delta_tilde valid", is_valid(t.rc), in);
                    sink.expect("delta_tilde rank", t.rank == rank_tilde(rc), in);
                    sink.expect("delta_tilde conjugation formula", t.rc == tc.rc && t.rank == tc.rank, in);
                    sink.expect("delta_tilde vacancy change", vacancy_change_matches(rc, t.rc, t.lengths, false), in);
                }
                if (first_col && last_col && n >= 2) {
                    auto db = delta_bar(rc);
                    auto dt = delta_tilde(rc);
                    auto a = delta_tilde(db.rc);
                    auto b = delta_bar(dt.rc);
                    sink.expect("delta_bar delta_tilde commute",
                                a.rc.configuration() == b.rc.configuration() && same_data(a.rc, b.rc), in);
                    bool alt1 = b.rank == db.rank && a.rank == dt.rank;
                    bool alt2 = b.rank == db.rank - 1 && a.rank == dt.rank - 1 && db.rank == dt.rank &&
                                db.rank >= 2 && part(lt, db.rank) == part(lt, db.rank - 1);
                    sink.expect("ranks after both deletions", alt1 || alt2, in);
                }
            }, in);
        }
        for (const auto& t : clr) {
            auto in = [&] { return in_t(r, t); };
            sink.guard("tableau maps", [&] {
                if (len == 0)
                    return;
                auto rc = phi_bar(t, r);
                if (last_col) {
                    auto d = delta_bar(rc);
                    sink.expect("minus diagram", phi_bar(clr_minus(t, r), bar(r)) == d.rc, in);
                    sink.expect("minus rank is column of largest letter", d.rank == cell_of(t, n).col, in);
                } else {
                    sink.expect("hat diagram", phi_bar(i_hat(t, r), hat(r)) == j_hat(rc), in);
                }
                sink.expect("check diagram", phi_bar(i_check(t, r), check(r)) == j_check(rc), in);
                sink.expect("less diagram", phi_bar(i_less(t, r), split_first_row(r)) == j_less(rc), in);
                sink.expect("greater diagram", phi_bar(i_greater(t, r), split_last_row(r)) == j_greater(rc), in);
                if (first_col)
                    sink.expect("D diagram", phi_bar(clr_d(t, r), tilde(r)) == delta_tilde(rc).rc, in);
                if (last_row) {
                    RectSeq bh = bar(hat(r));
                    auto m = minus(t);
                    sink.expect("minus lands in CLR for del", is_clr(m, m.shape(), bh), in);
                    sink.expect("del diagram", phi_bar(m, bh) == partial_del(rc).rc, in);
                }
                if (first_col && last_col && n >= 2)
                    sink.expect("minus D commute", minus(d_map(t)) == d_map(minus(t)), in);
            }, in);
        }
        if (last_col) {
            std::vector<int> cols;
            auto rhos = removable_shapes(lambda, &cols);
            std::set<Tableau> minus_image;
            for (const auto& t : clr)
                minus_image.insert(clr_minus(t, r));
            RectSeq br = bar(r);
            for (std::size_t i = 0; i < rhos.size(); ++i) {
                int c = cols[i];
                for (const auto& x : enumerate_clr(rhos[i], br))
                    sink.expect("minus image test", in_minus_image(x, lambda, r) == (minus_image.count(x) > 0),
                                [&] { return json{{"lambda", lambda}, {"rects", to_json(r)}, {"tableau", to_json(x)}}; });
                for (const auto& x : enumerate_rcs(rhos[i], br)) {
                    auto in = [&] { return json{{"lambda", lambda}, {"rects", to_json(r)}, {"column", c}, {"rc", in_rc(x)}}; };
                    sink.guard("delta_bar inverse", [&] {
                        bool image = r.back().height == 1 || (!br.empty() && rank_bar(x) >= c);
                        if (!image) {
                            sink.expect("delta_bar inverse rejects", throws_math([&] { delta_bar_inv(x, lambda, r, c); }), in);
                            return;
                        }
                        std::vector<std::optional<int>> sel;
                        auto y = delta_bar_inv(x, lambda, r, c, &sel);
                        sink.expect("delta_bar inverse valid", is_valid(y), in);
                        auto d = delta_bar(y);
                        sink.expect("delta_bar after inverse", d.rc == x && d.rank == c, in);
                        sink.expect("delta_bar inverse vacancy change", vacancy_change_matches(y, x, sel, true), in);
                    }, in);
                }
            }
        }
        if (first_col) {
            std::set<Tableau> d_image;
            for (const auto& t : clr)
                d_image.insert(clr_d(t, r));
            RectSeq tr = tilde(r);
            for (const auto& rho : removable_shapes(lambda, nullptr))
                for (const auto& x : enumerate_clr(rho, tr))
                    sink.expect("D image test", in_d_image(x, lambda, r) == (d_image.count(x) > 0),
                                [&] { return json{{"lambda", lambda}, {"rects", to_json(r)}, {"tableau", to_json(x)}}; });
        }
    }
}

// ---------------------------------------------------------------- vacancy

void vacancy_suite(const RectSeq& r, Sink& sink)
{
    int n = total(r);
    for (const auto& lambda : shapes_of(n)) {
        Partition lt = transpose(lambda);
        auto configs = enumerate_configs(lambda, r);
        ++sink.cases;
        sink.expect("pruned enumeration complete", configs == enumerate_configs(lambda, r, false),
                    [&] { return in_lr(lambda, r); });
        for (const auto& nu : configs) {
            auto in = [&] { return json{{"lambda", lambda}, {"rects", to_json(r)}, {"nu", nu}}; };
            int km = config_depth(nu, r) + 1;
            int nm = config_extent(nu, r) + 2;
            auto p = [&](int k, int m) { return vacancy(nu, r, k, m); };
            bool zero = true, large = true, convex = true, low = true, vanish = true, ones = true;
            for (int k = 1; k <= km; ++k) {
                Partition nk = k <= static_cast<int>(nu.size()) ? nu[k - 1] : Partition{};
                zero = zero && p(k, 0) == 0;
                for (int m = 1; m <= nm; ++m) {
                    if (m >= part(lt, k) && p(k, m) != part(lt, k) - part(lt, k + 1))
                        large = false;
                    if (multiplicity(nk, m) == 0 && 2 * p(k, m) < p(k, m - 1) + p(k, m + 1))
                        convex = false;
                }
                for (int a = 0; a <= nm; ++a)
                    for (int b = a + 1; b <= nm; ++b) {
                        bool empty_window = true;
                        for (int m = a + 1; m < b; ++m)
                            if (multiplicity(nk, m) > 0)
                                empty_window = false;
                        if (!empty_window)
                            break;
                        int lo = std::min(p(k, a), p(k, b));
                        bool has_zero = false, has_ones = false;
                        for (int m = a; m <= b; ++m) {
                            if (p(k, m) < lo)
                                low = false;
                            if (m > a && m < b && p(k, m) == 0)
                                has_zero = true;
                            if (m < b && p(k, m) == 1 && p(k, m + 1) == 1)
                                has_ones = true;
                        }
                        for (int m = a; m <= b; ++m) {
                            if (has_zero && p(k, m) != 0)
                                vanish = false;
                            if (has_ones && m > a && m < b && p(k, m) != 1)
                                ones = false;
                        }
                    }
            }
            sink.expect("vacancy at zero", zero, in);
            sink.expect("vacancy for long strings", large, in);
            sink.expect("vacancy convex off the parts", convex, in);
            sink.expect("vacancy lower bound on windows", low, in);
            sink.expect("vacancy zero spreads", vanish, in);
            sink.expect("vacancy one plateau", ones, in);
            if (!r.empty()) {
                auto x = from_configuration(lambda, r, nu);
                auto h = j_hat(x);
                auto c = j_check(x);
                bool hat_ok = true, check_ok = true;
                for (int k = 1; k <= km + 1; ++k)
                    for (int m = 1; m <= nm; ++m) {
                        if (vacancy(h, k, m) != vacancy(x, k, m))
                            hat_ok = false;
                        if (vacancy(c, k, m) != vacancy(x, k, m))
                            check_ok = false;
                    }
                sink.expect("j_hat preserves vacancy", hat_ok, in);
                sink.expect("j_check preserves vacancy", check_ok, in);
            }
        }
        auto rcs = enumerate_rcs(lambda, r);
        sink.guard("counts", [&] {
            sink.expect("rigging count", static_cast<std::int64_t>(rcs.size()) == kostka_rc(lambda, r).eval(1),
                        [&] { return in_lr(lambda, r); });
        }, [&] { return in_lr(lambda, r); });
        for (const auto& rc : rcs)
            sink.expect("theta valid", is_valid(theta(rc)), [&] { return in_rc(rc); });
    }
}

// ---------------------------------------------------------------- kostka

void kostka_suite(const RectSeq& r, Sink& sink)
{
    int n = total(r);
    for (const auto& lambda : shapes_of(n)) {
        ++sink.cases;
        auto in = [&] { return in_lr(lambda, r); };
        sink.guard("kostka", [&] {
            auto qp = kostka_qp(lambda, r);
            auto rc = kostka_rc(lambda, r);
            auto ch = kostka_charge(lambda, r);
            sink.expect("qp equals rc", qp == rc, in);
            sink.expect("rc equals charge", rc == ch, in);
            sink.expect("rc equals enumerated rc", rc == kostka_rc_enumerated(lambda, r), in);
            sink.expect("value at one is the LR coefficient", rc.eval(1) == lr_coefficient(lambda, r), in);
            sink.expect("nonnegative", rc.nonnegative(), in);
        }, in);
    }
}

// ---------------------------------------------------------------- classical

void compositions_rec(int n, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = 1; k <= n; ++k) {
        cur.push_back(k);
        compositions_rec(n - k, cur, out);
        cur.pop_back();
    }
}

std::vector<Task> classical_tasks(int max_size)
{
    std::vector<Task> tasks;
    for (int n = 0; n <= max_size; ++n) {
        std::vector<std::vector<int>> comps;
        std::vector<int> cur;
        compositions_rec(n, cur, comps);
        for (const auto& eta : comps)
            tasks.push_back([eta, n](Sink& sink) {
                RectSeq r = rows_rects(eta);
                for (const auto& lambda : partitions_of(n)) {
                    ++sink.cases;
                    auto in = [&] { return in_lr(lambda, r); };
                    sink.guard("classical", [&] {
                        sink.expect("rc equals Kostka-Foulkes", kostka_rc(lambda, r) == kostka_foulkes(lambda, eta), in);
                    }, in);
                }
            });
        tasks.push_back([n](Sink& sink) {
            RectSeq unit(n, Rect{1, 1});
            for (const auto& lambda : partitions_of(n)) {
                auto in = [&] { return in_lr(lambda, unit); };
                sink.guard("classical", [&] {
                    QPoly ls;
                    for (const auto& s : standard_tableaux(lambda))
                        ls += QPoly::monomial(ls_charge(s));
                    sink.expect("rc equals LS charge sum", kostka_rc(lambda, unit) == ls, in);
                }, in);
            }
        });
    }
    return tasks;
}

// ---------------------------------------------------------------- driver

using Suite = void (*)(const RectSeq&, Sink&);

std::vector<Task> per_rects(const Bounds& b, Suite suite)
{
    std::vector<Task> tasks;
    for (const auto& r : rect_corpus(b))
        tasks.push_back([r, suite](Sink& sink) { suite(r, sink); });
    return tasks;
}

std::vector<Task> tasks_for(const std::string& name, const Bounds& b)
{
    if (name == "bijectivity")
        return per_rects(b, bijectivity);
    if (name == "evacuation")
        return per_rects(b, evacuation);
    if (name == "transpose")
        return per_rects(b, transposition);
    if (name == "embedding")
        return per_rects(b, embedding);
    if (name == "statistics") {
        auto tasks = per_rects(b, statistics);
        int m = std::min(b.max_size, 6);
        tasks.push_back([m](Sink& sink) { cocharge_recursion(m, sink); });
        return tasks;
    }
    if (name == "commutation")
        return per_rects(b, commutation);
    if (name == "vacancy")
        return per_rects(b, vacancy_suite);
    if (name == "kostka")
        return per_rects(b, kostka_suite);
    if (name == "classical")
        return classical_tasks(b.max_size);
    if (name == "involution")
        return per_rects(b, involutions);
    throw math_error("unknown theorem: " + name);
}

void merge(Sink& into, Sink&& from)
{
    into.cases += from.cases;
    for (const auto& [k, v] : from.checks)
        into.checks[k] += v;
    into.failure_count += from.failure_count;
    for (auto& f : from.failures)
        if (into.failures.size() < kMaxFailures)
            into.failures.push_back(std::move(f));
}

Sink run_pool(const std::vector<Task>& tasks, unsigned threads)
{
    std::vector<Sink> sinks(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                tasks[i](sinks[i]);
            } catch (const std::exception& e) {
                sinks[i].fail("task", e.what(), json{{"task", i}});
            }
        }
    };
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<std::size_t>(1, tasks.size()));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    Sink all;
    for (auto& s : sinks)
        merge(all, std::move(s));
    return all;
}

void corpus_rec(const Bounds& b, int size, int len, RectSeq& cur, std::vector<RectSeq>& out)
{
    if (static_cast<int>(cur.size()) == len) {
        if (total(cur) == size)
            out.push_back(cur);
        return;
    }
    int used = total(cur);
    for (int w = 1; w <= b.max_dim; ++w)
        for (int h = 1; h <= b.max_dim; ++h) {
            if (used + w * h > size)
                continue;
            cur.push_back({w, h});
            corpus_rec(b, size, len, cur, out);
            cur.pop_back();
        }
}

} // namespace

const std::vector<std::string>& theorem_names()
{
    static const std::vector<std::string> names = {
        "bijectivity", "evacuation", "transpose", "embedding", "statistics",
        "commutation", "vacancy", "kostka", "classical", "involution"};
    return names;
}

std::vector<RectSeq> rect_corpus(const Bounds& b)
{
    std::vector<RectSeq> out;
    for (int size = 0; size <= b.max_size; ++size)
        for (int len = 0; len <= b.max_rects; ++len) {
            RectSeq cur;
            corpus_rec(b, size, len, cur, out);
        }
    return out;
}

std::vector<RectSeq> dominated_sequences(const RectSeq& r)
{
    std::set<RectSeq> seen{r};
    std::vector<RectSeq> queue{r};
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (auto& next : neighbours(queue[i]))
            if (seen.insert(next).second)
                queue.push_back(std::move(next));
    return {seen.begin(), seen.end()};
}

Report verify(const std::string& theorem, const Bounds& b, unsigned threads)
{
    auto start = std::chrono::steady_clock::now();
    Report rep;
    rep.theorem = theorem;
    rep.bounds = b;
    Sink all;
    if (theorem == "all") {
        for (const auto& name : theorem_names()) {
            Sink s = run_pool(tasks_for(name, b), threads);
            Sink renamed;
            renamed.cases = s.cases;
            renamed.failure_count = s.failure_count;
            for (auto& [k, v] : s.checks)
                renamed.checks[name + ": " + k] = v;
            for (auto& f : s.failures) {
                f.check = name + ": " + f.check;
                renamed.failures.push_back(std::move(f));
            }
            merge(all, std::move(renamed));
        }
    } else {
        all = run_pool(tasks_for(theorem, b), threads);
    }
    rep.cases = all.cases;
    rep.checks = std::move(all.checks);
    rep.failure_count = all.failure_count;
    rep.failures = std::move(all.failures);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

json to_json(const Report& r)
{
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"check", f.check}, {"detail", f.detail}, {"input", f.input}});
    return {{"theorem", r.theorem},
            {"range", {{"max_size", r.bounds.max_size}, {"max_rects", r.bounds.max_rects}, {"max_dim", r.bounds.max_dim}}},
            {"cases", r.cases},
            {"checks", r.checks},
            {"failure_count", r.failure_count},
            {"failures", failures},
            {"passed", r.passed()},
            {"seconds", r.seconds}};
}

std::string format_report(const Report& r)
{
    std::ostringstream os;
    os << "theorem " << r.theorem << "  |R| <= " << r.bounds.max_size << ", L <= " << r.bounds.max_rects
       << ", eta,mu <= " << r.bounds.max_dim << "\n";
    os << "cases " << r.cases << "\n";
    for (const auto& [k, v] : r.checks)
        os << "  " << k << ": " << v << "\n";
    os << "failures " << r.failure_count << "\n";
    for (const auto& f : r.failures) {
        os << "  " << f.check;
        if (!f.detail.empty())
            os << " (" << f.detail << ")";
        os << ": " << f.input.dump() << "\n";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", r.seconds);
    os << (r.passed() ? "PASS" : "FAIL") << "  " << buf << "s\n";
    return os.str();
}

} // namespace lrrc
