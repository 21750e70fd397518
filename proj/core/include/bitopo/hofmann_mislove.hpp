#pragma once

#include <string>
#include <vector>

#include "bitopo/space.hpp"

namespace bitopo {

/// Compactness of a B-set: sub(theta, -) preserves directed joins of open
/// sets. Decided componentwise through the cuts; on a finite carrier every
/// directed family of opens has a maximum, so this is constantly true (see
/// compactness_note). The literal directed-family oracle is kept separate.
bool is_compact(const BSpace& s, const BSet& theta);
std::string_view compactness_note();

/// Literal check of the directed-family definition over every directed
/// subfamily of opens. Throws BoundError when |tt-opens|*|ff-opens| > 16.
bool is_compact_literal(const BSpace& s, const BSet& theta);

/// Saturated: theta preserves B-order from the specialization order into
/// (B, ->); equivalently a pointwise meet of open sets.
bool is_saturated(const BSpace& s, const BSet& theta);

/// Least saturated set above theta: the meet of all opens above it.
BSet saturate(const BSpace& s, const BSet& theta);

/// sup theta = 1.
bool is_inhabited(const BSet& theta);

/// A Scott-open B-filter of the open-set family, stored as the pair of
/// component filters ({U : F(tt_U) = tt}, {V : F(ff_V) = ff}).
struct BFilter {
  std::vector<Mask> tt_filter;  // sorted member opens
  std::vector<Mask> ff_filter;

  bool operator==(const BFilter&) const = default;
};

BVal eval(const BFilter& f, const BSet& open_set);

/// Literal validity: F(const b) = b, F(lam ^ mu) = F(lam) ^ F(mu), and
/// F preserves joins of directed subfamilies (checked up to size 3; finite
/// directed families have maxima, so that spot check is exhaustive in
/// effect).
std::vector<std::string> bfilter_violations(const BSpace& s, const BFilter& f);

/// The filter sub(theta, -) of an inhabited set; throws ValidationError
/// ("not inhabited") otherwise.
BFilter filter_of_set(const BSpace& s, const BSet& theta);

/// The saturated compact set of a filter: tt on the intersection of the
/// tt-filter, ff on the intersection of the ff-filter.
BSet set_of_filter(const BSpace& s, const BFilter& f);

/// All B-filters: candidate component filter pairs validated against the
/// literal definition. Throws BoundError when a component family exceeds
/// max_opens.
std::vector<BFilter> enumerate_bfilters(const BSpace& s,
                                        std::size_t max_opens = 20);

struct HMReport {
  std::size_t n_saturated_inhabited = 0;  // all of these are compact here
  std::size_t n_bfilters = 0;
  bool b_sober = false;
  /// Round-trip bijection between inhabited saturated compact sets and
  /// B-filters; only claimed when b_sober (otherwise reported as findings).
  bool bijection_holds = false;
  bool eq_ii_holds = false;
  std::vector<std::string> failures;
};

/// Checks the correspondence between inhabited saturated compact sets and
/// Scott-open B-filters: every such set induces a valid filter, the mutual
/// inclusion-degree equality holds for every pair, and on B-sober spaces
/// the two round trips are identities.
HMReport verify_hm(const BSpace& s);

}  // namespace bitopo
