#pragma once

#include <utility>
#include <vector>

#include "lrrc/rect_seq.hpp"
#include "lrrc/rigged.hpp"
#include "lrrc/tableau.hpp"

namespace lrrc {

struct TraceStep {
    int letter = 0;
    int column = 0;    // column of the letter in T
    int zc_column = 0; // column of the letter in ZC_j
    // (k, s^(k)) for k = c-1 down to c'; 0 means a new string.
    std::vector<std::pair<int, int>> selected;
    // State after the letter, over shape(T|[1,x]) and the split sequence R_(x).
    RiggedConfig rc;
};

using BijectionTrace = std::vector<TraceStep>;

// Rectangles of the shape filled by the letters 1..x of the ZC tableaux.
RectSeq split_context(const RectSeq& rects, int x);

// Direct algorithm.
RiggedConfig phi_bar(const Tableau& t, const RectSeq& rects, BijectionTrace* trace = nullptr);
// Recursive definition through minus / delta_bar and i_hat / j_hat.
RiggedConfig phi_bar_recursive(const Tableau& t, const RectSeq& rects);
Tableau phi_bar_inv(const RiggedConfig& rc);

RiggedConfig phi_tilde(const Tableau& t, const RectSeq& rects);
Tableau phi_tilde_inv(const RiggedConfig& rc);

int charge(const Tableau& t, const RectSeq& rects);
int cocharge(const Tableau& t, const RectSeq& rects);

// Embedding for an E1 or E1split relation R -> target. Splits use the
// transposed inclusion; E1 transfers pull j_plus back through the bijection.
Tableau i_plus(const Tableau& t, const RectSeq& rects, const RectSeq& target);

// CLR(lambda;R) -> CLR(lambda;s_pR), p 1-based.
Tableau sigma_p(const Tableau& t, const RectSeq& rects, int p);

// Composite embedding CLR(lambda;R) -> CLR(lambda;R') along decompose(R, R').
Tableau embed(const Tableau& t, const RectSeq& rects, const RectSeq& target, bool alternate = false);

} // namespace lrrc
