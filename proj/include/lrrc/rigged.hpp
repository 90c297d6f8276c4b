#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "lrrc/partition.hpp"
#include "lrrc/qpoly.hpp"
#include "lrrc/rect_seq.hpp"

namespace lrrc {

// A part of length `length` carrying the rigging `label`.
struct RString {
    int length = 0;
    int label = 0;
    auto operator<=>(const RString&) const = default;
};

// Strings kept sorted by (length desc, label desc).
using RiggedPartition = std::vector<RString>;
using Configuration = std::vector<Partition>;

// Element of RC(lambda^t; R^t). nu[k-1] is the rigged partition nu^(k).
struct RiggedConfig {
    Partition lambda;
    RectSeq rects;
    std::vector<RiggedPartition> nu;

    // Underlying partition of nu^(k), k >= 1; empty past the end.
    Partition shape(int k) const;
    Configuration configuration() const;
    const RiggedPartition& at(int k) const;

    // Sort strings and trim trailing empty rigged partitions.
    void canonicalize();

    bool operator==(const RiggedConfig&) const = default;
    auto operator<=>(const RiggedConfig&) const = default;
};

// Equal riggings and configurations, contexts ignored.
bool same_data(const RiggedConfig& a, const RiggedConfig& b);

RiggedConfig empty_rc(const Partition& lambda, const RectSeq& rects);
RiggedConfig from_configuration(const Partition& lambda, const RectSeq& rects,
                                const Configuration& nu);

// Required size of nu^(k).
int config_size(const Partition& lambda, const RectSeq& rects, int k);

int vacancy(const Configuration& nu, const RectSeq& rects, int k, int n);
int vacancy(const RiggedConfig& rc, int k, int n);
int colabel(const RiggedConfig& rc, int k, const RString& s);
bool is_singular(const RiggedConfig& rc, int k, const RString& s);

// Largest index and length worth examining; vacancy numbers are constant beyond.
int config_depth(const Configuration& nu, const RectSeq& rects);
int config_extent(const Configuration& nu, const RectSeq& rects);

bool has_config_sizes(const Partition& lambda, const RectSeq& rects, const Configuration& nu);
bool is_admissible(const Configuration& nu, const RectSeq& rects);
// Sizes, admissibility and 0 <= label <= vacancy.
bool is_valid(const RiggedConfig& rc);

std::vector<Configuration> enumerate_configs(const Partition& lambda, const RectSeq& rects,
                                             bool pruned = true);
std::vector<RiggedConfig> enumerate_rcs(const Partition& lambda, const RectSeq& rects);
std::vector<RiggedConfig> riggings_of(const Partition& lambda, const RectSeq& rects,
                                      const Configuration& nu);

int cc_config(const Configuration& nu);
int cc(const RiggedConfig& rc);

// Riggings of a configuration, as a generating function in q^{sum of labels}.
QPoly rigging_gf(const Configuration& nu, const RectSeq& rects);

RiggedConfig theta(const RiggedConfig& rc);
RiggedConfig theta_ev(const RiggedConfig& rc);

RiggedConfig j_hat(const RiggedConfig& rc);
// Inverse of j_hat: rc lives over hat(target) and the result over target.
RiggedConfig j_hat_inv(const RiggedConfig& rc, const RectSeq& target);
RiggedConfig j_check(const RiggedConfig& rc);
RiggedConfig j_greater(const RiggedConfig& rc);
RiggedConfig j_less(const RiggedConfig& rc);
// Colabel-preserving move to a new rectangle context (same lambda).
RiggedConfig with_colabels(const RiggedConfig& rc, const RectSeq& target);
RiggedConfig j_plus(const RiggedConfig& rc, const RectSeq& target);

struct DeltaResult {
    RiggedConfig rc;
    int rank = 0;
    // Selected lengths for k = 0..rank; nullopt is the unbounded sentinel.
    std::vector<std::optional<int>> lengths;
};

int rank_bar(const RiggedConfig& rc);
int rank_tilde(const RiggedConfig& rc);

DeltaResult delta_bar(const RiggedConfig& rc);
// Undo delta_bar: rc lives over (rho, bar(target)), lambda/rho is a cell in column c.
// `selected` receives s^(0) = mu_L - 1, s^(k) for 1 <= k < c, and nullopt for k = c.
RiggedConfig delta_bar_inv(const RiggedConfig& rc, const Partition& lambda,
                           const RectSeq& target, int c,
                           std::vector<std::optional<int>>* selected = nullptr);
DeltaResult delta_tilde(const RiggedConfig& rc);
DeltaResult delta_tilde_conjugated(const RiggedConfig& rc);
DeltaResult partial_del(const RiggedConfig& rc);

RiggedConfig tr_rc(const RiggedConfig& rc);

} // namespace lrrc
