#include "lrrc/rect_seq.hpp"

#include <algorithm>
#include <sstream>

#include "lrrc/errors.hpp"

namespace lrrc {

int total(const RectSeq& r)
{
    int s = 0;
    for (const auto& x : r)
        s += x.size();
    return s;
}

RectSeq cleaned(RectSeq r)
{
    std::erase_if(r, [](const Rect& x) { return x.width <= 0 || x.height <= 0; });
    return r;
}

RectSeq hat(const RectSeq& r)
{
    if (r.empty())
        throw math_error("hat of the empty rectangle sequence");
    RectSeq out = r;
    Rect last = out.back();
    out.pop_back();
    out.push_back({last.width - 1, last.height});
    out.push_back({1, last.height});
    return cleaned(out);
}

RectSeq bar(const RectSeq& r)
{
    if (r.empty() || r.back().width != 1)
        throw math_error("bar requires the last rectangle to be a single column");
    RectSeq out = r;
    --out.back().height;
    return cleaned(out);
}

RectSeq check(const RectSeq& r)
{
    if (r.empty())
        throw math_error("check of the empty rectangle sequence");
    RectSeq out;
    out.push_back({1, r[0].height});
    out.push_back({r[0].width - 1, r[0].height});
    out.insert(out.end(), r.begin() + 1, r.end());
    return cleaned(out);
}

RectSeq tilde(const RectSeq& r)
{
    if (r.empty() || r.front().width != 1)
        throw math_error("tilde requires the first rectangle to be a single column");
    RectSeq out = r;
    --out.front().height;
    return cleaned(out);
}

RectSeq reversed(const RectSeq& r) { return RectSeq(r.rbegin(), r.rend()); }

RectSeq split_last_row(const RectSeq& r)
{
    if (r.empty())
        throw math_error("split of the empty rectangle sequence");
    RectSeq out = r;
    Rect last = out.back();
    out.pop_back();
    out.push_back({last.width, last.height - 1});
    out.push_back({last.width, 1});
    return cleaned(out);
}

RectSeq split_first_row(const RectSeq& r)
{
    if (r.empty())
        throw math_error("split of the empty rectangle sequence");
    RectSeq out;
    out.push_back({r[0].width, 1});
    out.push_back({r[0].width, r[0].height - 1});
    out.insert(out.end(), r.begin() + 1, r.end());
    return cleaned(out);
}

RectSeq rows_of(const RectSeq& r)
{
    RectSeq out;
    for (const auto& x : r)
        for (int i = 0; i < x.height; ++i)
            out.push_back({x.width, 1});
    return out;
}

RectSeq transpose(const RectSeq& r)
{
    RectSeq out;
    for (const auto& x : r)
        out.push_back({x.height, x.width});
    return out;
}

Partition xi(const RectSeq& r, int k)
{
    Partition p;
    for (const auto& x : r)
        if (x.width == k)
            p.push_back(x.height);
    return normalized(p);
}

int max_width(const RectSeq& r)
{
    int m = 0;
    for (const auto& x : r)
        m = std::max(m, x.width);
    return m;
}

bool dominates(const RectSeq& r, const RectSeq& rp)
{
    int w = std::max(max_width(r), max_width(rp));
    for (int k = 1; k <= w; ++k)
        if (!dominates(xi(r, k), xi(rp, k)))
            return false;
    return true;
}

bool e1_applicable(const RectSeq& r)
{
    return r.size() >= 2 && r[0].width == r[1].width && r[0].height - 1 >= r[1].height + 1;
}

RectSeq e1_step(const RectSeq& r)
{
    if (!e1_applicable(r))
        throw math_error("E1 requires (c^a),(c^b) with a-1 >= b+1 in front");
    RectSeq out = r;
    --out[0].height;
    ++out[1].height;
    return out;
}

bool e1_split_applicable(const RectSeq& r) { return !r.empty() && r[0].height >= 2; }

RectSeq e1_split(const RectSeq& r)
{
    if (!e1_split_applicable(r))
        throw math_error("E1 split requires a first rectangle of height at least 2");
    RectSeq out = r;
    --out[0].height;
    out.insert(out.begin() + 1, Rect{r[0].width, 1});
    return out;
}

RectSeq swap_adjacent(const RectSeq& r, int p)
{
    if (p < 1 || p >= static_cast<int>(r.size()))
        throw math_error("swap index out of range");
    RectSeq out = r;
    std::swap(out[p - 1], out[p]);
    return out;
}

RectSeq apply_move(const RectSeq& r, const Move& m)
{
    switch (m.kind) {
    case Move::E1:
        return e1_step(r);
    case Move::E1Split:
        return e1_split(r);
    case Move::E2:
        return swap_adjacent(r, m.p);
    }
    throw internal_error("unknown move");
}

RectSeq replay(RectSeq r, const std::vector<Move>& moves)
{
    for (const auto& m : moves)
        r = apply_move(r, m);
    return r;
}

namespace {

// Bubble the rectangle at 0-based index i left to index dest.
void bring_to(RectSeq& cur, std::size_t i, std::size_t dest, std::vector<Move>& moves)
{
    while (i > dest) {
        if (cur[i - 1] != cur[i])
            moves.push_back({Move::E2, static_cast<int>(i)});
        std::swap(cur[i - 1], cur[i]);
        --i;
    }
}

struct Transfer {
    int from, to;
};

bool find_transfer(const Partition& a, const Partition& target, bool alternate, Transfer& out)
{
    std::vector<int> donors(a.begin(), a.end());
    std::vector<int> receivers(a.begin(), a.end());
    receivers.push_back(0);
    std::sort(donors.begin(), donors.end(), std::greater<>());
    donors.erase(std::unique(donors.begin(), donors.end()), donors.end());
    std::sort(receivers.begin(), receivers.end());
    receivers.erase(std::unique(receivers.begin(), receivers.end()), receivers.end());
    if (alternate) {
        std::reverse(donors.begin(), donors.end());
        std::reverse(receivers.begin(), receivers.end());
    }
    for (int d : donors)
        for (int e : receivers) {
            if (d - 1 < e + 1)
                continue;
            Partition next = a;
            *std::find(next.begin(), next.end(), d) -= 1;
            if (e == 0)
                next.push_back(1);
            else
                *std::find(next.begin(), next.end(), e) += 1;
            if (dominates(normalized(next), target)) {
                out = {d, e};
                return true;
            }
        }
    return false;
}

} // namespace

std::vector<Move> decompose(const RectSeq& r, const RectSeq& rp, bool alternate)
{
    if (!dominates(r, rp))
        throw math_error("decompose requires R to dominate R'");
    RectSeq cur = r;
    std::vector<Move> moves;
    int w = std::max(max_width(r), max_width(rp));
    for (;;) {
        int k = 0;
        for (int c = 1; c <= w; ++c)
            if (xi(cur, c) != xi(rp, c)) {
                k = c;
                if (!alternate)
                    break;
            }
        if (k == 0)
            break;
        Transfer t{};
        if (!find_transfer(xi(cur, k), xi(rp, k), alternate, t))
            throw internal_error("no dominance-preserving transfer found");
        auto di = std::find(cur.begin(), cur.end(), Rect{k, t.from}) - cur.begin();
        bring_to(cur, static_cast<std::size_t>(di), 0, moves);
        if (t.to == 0) {
            moves.push_back({Move::E1Split, 0});
            cur = e1_split(cur);
        } else {
            auto ri = std::find(cur.begin() + 1, cur.end(), Rect{k, t.to}) - cur.begin();
            bring_to(cur, static_cast<std::size_t>(ri), 1, moves);
            moves.push_back({Move::E1, 0});
            cur = e1_step(cur);
        }
    }
    for (std::size_t p = 0; p < rp.size(); ++p) {
        auto i = std::find(cur.begin() + static_cast<long>(p), cur.end(), rp[p]) - cur.begin();
        bring_to(cur, static_cast<std::size_t>(i), p, moves);
    }
    if (cur != rp)
        throw internal_error("decompose did not reach the target");
    return moves;
}

int pair_norm(const RectSeq& r)
{
    int s = 0;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j)
            s += std::min(r[i].width, r[j].width) * std::min(r[i].height, r[j].height);
    return s;
}

std::vector<bool> termination_sequence(const RectSeq& r)
{
    std::vector<bool> steps;
    RectSeq cur = cleaned(r);
    while (!cur.empty()) {
        bool b = cur.back().width == 1;
        steps.push_back(b);
        cur = b ? bar(cur) : hat(cur);
    }
    return steps;
}

RectSeq parse_rects(const std::string& text)
{
    RectSeq out;
    std::string s;
    for (char ch : text)
        if (ch != ' ')
            s.push_back(ch);
    if (s.empty())
        return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto x = item.find_first_of("xX");
        if (x == std::string::npos || x == 0 || x + 1 == item.size())
            throw std::invalid_argument("bad rectangle '" + item + "', expected WxH");
        std::size_t used1 = 0, used2 = 0;
        int w = std::stoi(item.substr(0, x), &used1);
        int h = std::stoi(item.substr(x + 1), &used2);
        if (used1 != x || used2 != item.size() - x - 1 || w < 1 || h < 1)
            throw std::invalid_argument("bad rectangle '" + item + "', expected WxH");
        out.push_back({w, h});
    }
    return out;
}

std::string format_rects(const RectSeq& r)
{
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(r[i].width) + "x" + std::to_string(r[i].height);
    }
    return s;
}

std::string format_move(const Move& m)
{
    switch (m.kind) {
    case Move::E1:
        return "E1";
    case Move::E1Split:
        return "E1split";
    case Move::E2:
        return "s" + std::to_string(m.p);
    }
    return "?";
}

} // namespace lrrc
