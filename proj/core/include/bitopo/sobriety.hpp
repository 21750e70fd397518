#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bitopo/space.hpp"

namespace bitopo {

/// A point of the open-set frame: a frame homomorphism opens -> B splitting
/// the constants embedding. Stored compactly as the pair of completely
/// prime filters ({U tt-open : p(tt_U) = tt}, {V ff-open : p(ff_V) = ff});
/// the full assignment is recovered by eval.
struct BPoint {
  std::vector<Mask> tt_filter;  // sorted member opens
  std::vector<Mask> ff_filter;

  bool operator==(const BPoint&) const = default;
};

BVal eval(const BPoint& p, const BSet& open_set);

/// Closed sets gamma with sub(gamma, const b) = b for all b and sub(gamma, -)
/// distributing over binary joins of closed sets. Enumerated directly from
/// that definition; equals the pairs of component irreducible closed sets.
std::vector<BSet> irreducible_closed_bsets(const BSpace& s);
/// The pair path: tt_K v ff_K' over component irreducible closed sets.
std::vector<BSet> irreducible_closed_bsets_via_pairs(const BSpace& s);

/// Classical irreducible closed sets of one finite topology.
std::vector<Mask> irreducible_closed_sets(const FinTopology& t);

/// All B-points, via pairs of completely prime filters (equivalently, of
/// component irreducible closed sets).
std::vector<BPoint> b_points(const BSpace& s);

/// Independent oracle: enumerates all candidate component assignments and
/// keeps those passing the literal frame-homomorphism checks over the whole
/// open-set family. Throws BoundError when |tt-opens|*|ff-opens| exceeds
/// max_product (the families themselves must stay <= 20 each).
std::vector<BPoint> b_points_bruteforce(const BSpace& s,
                                        std::size_t max_product = 64);

/// Evaluation at a point: p(lam) = lam(x).
BPoint point_embedding(const BSpace& s, std::size_t x);

/// The irreducible closed B-set corresponding to a B-point (cut = complement
/// of the union of the opens the filter misses), and back.
BSet bpoint_to_gamma(const BSpace& s, const BPoint& p);
BPoint gamma_to_bpoint(const BSpace& s, const BSet& gamma);

/// Every B-point is the evaluation at exactly one carrier point.
bool is_b_sober(const BSpace& s);
/// Cross-check path: every irreducible closed B-set is the closure of a
/// point set 1_x for exactly one x.
bool is_b_sober_via_pairs(const BSpace& s);

/// B-points satisfying the consistency/totality conditions against the
/// open-set d-frame: disjoint opens are not both hit, covering opens are
/// not both missed.
std::vector<BPoint> d_points(const BSpace& s);
bool is_d_sober(const BSpace& s);

/// Classical sobriety of the join topology.
bool is_join_sober(const BSpace& s);

struct Sobrification {
  BSpace space;                    // carrier g0, g1, ... sorted by cut pair
  std::vector<BSet> gammas;        // gamma for each carrier point
  std::vector<std::size_t> unit;   // x -> index of closure(1_x)
};

/// Space of irreducible closed B-sets with opens {gamma : gamma meets lam},
/// realized through its two cut topologies. B-sober by construction; the
/// property is verified per instance by callers, not assumed.
Sobrification sobrify(const BSpace& s);

/// Subspace of the sobrification on the gammas satisfying the two d-point
/// conditions (stated on closed sets: nowhere-0 closed sets absorb one of
/// tt^gamma / ff^gamma; nowhere-1 closed sets do not absorb gamma).
Sobrification d_sobrify(const BSpace& s);

/// Carrier-bijection search with open-family transport; carriers <= 8.
bool homeomorphic(const BSpace& a, const BSpace& b);

/// The componentwise sobriety criterion: join T0 and both component
/// T0-reflections sober. On some finite spaces this disagrees with direct
/// B-sobriety; the discrepancy is reported, not resolved.
bool componentwise_sober_criterion(const BSpace& s);

struct SobrietyReport {
  std::size_t n_b_points = 0;
  std::size_t n_d_points = 0;
  bool b_sober = false;
  bool d_sober = false;
  bool join_sober = false;
  /// An unrepresented component pair when not B-sober.
  std::optional<std::pair<Mask, Mask>> witness;
  bool cw_sober_criterion = false;
  bool cw_criterion_agrees = false;
};

SobrietyReport sobriety_report(const BSpace& s);

}  // namespace bitopo
