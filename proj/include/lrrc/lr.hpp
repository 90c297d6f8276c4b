#pragma once

#include <map>
#include <vector>

#include "lrrc/rect_seq.hpp"
#include "lrrc/tableau.hpp"

namespace lrrc {

// Alphabets and canonical fillings attached to a rectangle sequence.
struct LrContext {
    RectSeq rects;
    std::vector<int> offset; // letters of B_j are offset[j]+1 .. offset[j]+|R_j|
    std::vector<Tableau> zc;
    std::vector<Tableau> zr;

    int size() const;
    // 0-based block index of letter x.
    int block_of(int x) const;
    // Cell (1-based) of letter x inside ZC of its block.
    Cell zc_cell(int x) const;
};

LrContext make_context(const RectSeq& rects);
Tableau columnwise(const Rect& r, int offset);
Tableau rowwise(const Rect& r, int offset);

// P(S|B_j) = ZC_j for all j.
bool is_clr_insertion(const Tableau& s, const Partition& lambda, const RectSeq& rects);
// Cell constraints: south neighbours strictly lower, west neighbours strictly left.
bool is_clr_fast(const Tableau& s, const Partition& lambda, const RectSeq& rects);
bool is_clr(const Tableau& s, const Partition& lambda, const RectSeq& rects);

std::vector<Tableau> enumerate_clr(const Partition& lambda, const RectSeq& rects);
std::map<Partition, std::vector<Tableau>> enumerate_clr_all(const RectSeq& rects);
long lr_coefficient(const Partition& lambda, const RectSeq& rects);

Tableau gamma(const Tableau& s, const RectSeq& rects);
Tableau gamma_inv(const Tableau& s, const RectSeq& rects);
Tableau tr_lr(const Tableau& s, const RectSeq& rects);

// Tableaux of LRT(lambda;R): block j uses the letters mu_1+...+mu_{j-1}+r.
Tableau beta(const Tableau& t, const RectSeq& rects);
Tableau beta_inv(const Tableau& s, const RectSeq& rects);
// Content of LRT tableaux for R: row r of R_j contributes eta_j copies.
std::vector<int> lrt_content(const RectSeq& rects);

Tableau i_hat(const Tableau& s, const RectSeq& rects);
Tableau i_check(const Tableau& s, const RectSeq& rects);
Tableau i_less(const Tableau& s, const RectSeq& rects);
Tableau i_greater(const Tableau& s, const RectSeq& rects);
// tr_LR-conjugated inclusion for an E1 or E1split relation R -> target.
// Throws math_error when the transposed tableau is not a member over target^t.
Tableau i_plus_inclusion(const Tableau& s, const RectSeq& rects, const RectSeq& target);

Tableau clr_minus(const Tableau& s, const RectSeq& rects);
Tableau clr_d(const Tableau& s, const RectSeq& rects);
Tableau clr_ev(const Tableau& s, const RectSeq& rects);

// Image tests for minus and D: t lives over bar(R) (resp. tilde(R)) and
// lambda/shape(t) is one cell.
bool in_minus_image(const Tableau& t, const Partition& lambda, const RectSeq& rects);
bool in_d_image(const Tableau& t, const Partition& lambda, const RectSeq& rects);

} // namespace lrrc
