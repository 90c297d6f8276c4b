#pragma once

#include <vector>

#include "lrrc/partition.hpp"
#include "lrrc/qpoly.hpp"
#include "lrrc/rect_seq.hpp"

namespace lrrc {

// Quasi-particle sum over admissible configurations.
QPoly kostka_qp(const Partition& lambda, const RectSeq& rects);
// Sum of q^cc over rigged configurations, riggings counted per configuration.
QPoly kostka_rc(const Partition& lambda, const RectSeq& rects);
// Same sum over the explicitly enumerated rigged configurations.
QPoly kostka_rc_enumerated(const Partition& lambda, const RectSeq& rects);
// Sum of q^charge over CLR(lambda;R).
QPoly kostka_charge(const Partition& lambda, const RectSeq& rects);

// Classical Kostka-Foulkes polynomial: sum of q^charge(word T) over
// CST(lambda; content). The content is sorted into a partition first.
QPoly kostka_foulkes(const Partition& lambda, std::vector<int> content);

} // namespace lrrc
