#pragma once

#include <compare>
#include <string>
#include <vector>

#include "lrrc/partition.hpp"

namespace lrrc {

// Rectangle with `width` columns and `height` rows.
struct Rect {
    int width = 0;
    int height = 0;
    int size() const { return width * height; }
    auto operator<=>(const Rect&) const = default;
};

using RectSeq = std::vector<Rect>;

int total(const RectSeq& r);

// Drop empty rectangles.
RectSeq cleaned(RectSeq r);

RectSeq hat(const RectSeq& r);
RectSeq bar(const RectSeq& r);
RectSeq check(const RectSeq& r);
RectSeq tilde(const RectSeq& r);
RectSeq reversed(const RectSeq& r);
RectSeq split_last_row(const RectSeq& r);
RectSeq split_first_row(const RectSeq& r);
RectSeq rows_of(const RectSeq& r);
RectSeq transpose(const RectSeq& r);

// Heights of the width-k rectangles, sorted decreasingly.
Partition xi(const RectSeq& r, int k);
int max_width(const RectSeq& r);

bool dominates(const RectSeq& r, const RectSeq& rp);

// First two rectangles (c^a),(c^b) become (c^{a-1}),(c^{b+1}).
bool e1_applicable(const RectSeq& r);
RectSeq e1_step(const RectSeq& r);
// First rectangle (c^a), a >= 2, becomes (c^{a-1}),(c^1).
bool e1_split_applicable(const RectSeq& r);
RectSeq e1_split(const RectSeq& r);
// Exchange R_p and R_{p+1}, 1-based.
RectSeq swap_adjacent(const RectSeq& r, int p);

struct Move {
    enum Kind { E1, E1Split, E2 } kind;
    int p = 0;
    auto operator<=>(const Move&) const = default;
};

RectSeq apply_move(const RectSeq& r, const Move& m);
RectSeq replay(RectSeq r, const std::vector<Move>& moves);

// Canonical E1/E2 path from r to rp. With `alternate` the transfers are
// chosen from the other end, giving a second path for comparison.
std::vector<Move> decompose(const RectSeq& r, const RectSeq& rp, bool alternate = false);

int pair_norm(const RectSeq& r);

// Sequence of bar/hat steps reducing r to the empty sequence; true means bar.
std::vector<bool> termination_sequence(const RectSeq& r);

RectSeq parse_rects(const std::string& text);
std::string format_rects(const RectSeq& r);
std::string format_move(const Move& m);

} // namespace lrrc
