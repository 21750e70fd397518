#pragma once

#include <string>
#include <vector>

#include "bitopo/bset.hpp"
#include "bitopo/topology.hpp"

namespace bitopo {

/// A finite bitopological space: one carrier, two topologies. Equivalently
/// a B-valued topological space whose open sets are exactly the B-sets
/// whose tt-cut is tt-open and whose ff-cut is ff-open; that induced family
/// is never materialized, every query goes through the cuts.
struct BSpace {
  std::string name;
  CarrierPtr carrier;
  FinTopology tt;
  FinTopology ff;
};

BSpace make_bspace(std::string name, CarrierPtr carrier,
                   std::vector<Mask> tt_opens, std::vector<Mask> ff_opens);

bool is_bopen(const BSpace& s, const BSet& lam);
bool is_bclosed(const BSpace& s, const BSet& lam);

BSet closure(const BSpace& s, const BSet& lam);
BSet interior(const BSpace& s, const BSet& lam);

/// All open B-sets as cut pairs (every open equals tt_U v ff_V); iteration
/// is deterministic (tt-open major, ff-open minor).
std::vector<BSet> all_bopens(const BSpace& s);
std::vector<BSet> all_bclosed(const BSpace& s);

/// All of B^X for small carriers (4^n sets); requires size <= 10.
std::vector<BSet> all_bsets(const CarrierPtr& carrier);

/// The B-valued Sierpinski space: carrier {0, ff, tt, 1} with the topology
/// generated by the identity map. A B-set into any space is open iff it is
/// continuous into this space.
BSpace sierpinski();

/// The span construction X.Y on the product of two classical spaces:
/// tt-opens are the cylinders U x Y, ff-opens the cylinders X x V.
BSpace dot_product(const FinTopology& x, const FinTopology& y);

/// Doubles a classical topology into both components.
BSpace omega(const FinTopology& t);

/// Join topology (generated by the union of the two components).
FinTopology iota(const BSpace& s);
FinTopology iota_tt(const BSpace& s);
FinTopology iota_ff(const BSpace& s);

/// Componentwise product; point (x, y) is named "x.y". Requires the product
/// carrier to stay within enumeration bounds (<= 20 points).
BSpace product(const BSpace& a, const BSpace& b);

/// Classical product topology on a fresh product carrier (points "x.y",
/// row-major). Finite spaces are Alexandrov, so this is the up-set family
/// of the product preorder. Same 20-point bound as product().
FinTopology product_topology(const FinTopology& a, const FinTopology& b);

/// Subspace on the points of `points`.
BSpace subspace(const BSpace& s, Mask points);

struct Quotient {
  BSpace space;
  std::vector<std::size_t> projection;  // point index -> class index
};

/// Quotient by a partition (classes named after their first member).
Quotient quotient(const BSpace& s, const std::vector<Mask>& classes);

BSpace relabel(const BSpace& s, std::string name,
               std::vector<std::string> points);

struct ContinuousMap {
  BSpace source;
  BSpace target;
  std::vector<std::size_t> mapping;  // total on source points
};

/// Bicontinuity: preimages of component opens are component opens. The
/// equivalent pullback characterization (lam o f open for every open lam)
/// is exposed separately for cross-checking.
bool is_continuous(const ContinuousMap& f);
bool is_continuous_via_pullbacks(const ContinuousMap& f);

BSet pullback(const ContinuousMap& f, const BSet& lam);

}  // namespace bitopo
