#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bitopo/carrier.hpp"

namespace bitopo {

/// A topology on a finite carrier, stored as the explicit family of open
/// sets (sorted masks). On a finite carrier closure under binary union and
/// binary intersection is equivalent to arbitrary unions / finite meets.
class FinTopology {
 public:
  /// Validates and canonicalizes (sorts, dedups). Throws ValidationError
  /// naming an offending witness set if the family is not a topology.
  static FinTopology from_opens(CarrierPtr carrier, std::vector<Mask> opens);

  /// Smallest topology containing the subbasis: close under finite
  /// intersections (the empty intersection is the carrier), then all unions.
  static FinTopology generate(CarrierPtr carrier, std::span<const Mask> subbasis);

  static FinTopology discrete(CarrierPtr carrier);
  static FinTopology indiscrete(CarrierPtr carrier);

  const CarrierPtr& carrier() const { return carrier_; }
  const std::vector<Mask>& opens() const { return opens_; }
  std::size_t size() const { return opens_.size(); }

  bool contains(Mask m) const;
  bool is_closed(Mask m) const { return contains(~m & carrier_->full()); }

  Mask closure(Mask a) const;
  Mask interior(Mask a) const;
  std::vector<Mask> closed_sets() const;

  /// Minimal open neighbourhood of x (intersection of all opens containing
  /// x; open because the carrier is finite). Equals the specialization
  /// up-set {y : x <= y}.
  Mask min_open(std::size_t x) const;

  /// Specialization: x <= y iff x lies in the closure of {y}.
  bool spec_leq(std::size_t x, std::size_t y) const;

  bool operator==(const FinTopology& o) const {
    return opens_ == o.opens_ && same_carrier(carrier_, o.carrier_);
  }

 private:
  FinTopology(CarrierPtr carrier, std::vector<Mask> opens)
      : carrier_(std::move(carrier)), opens_(std::move(opens)) {}

  CarrierPtr carrier_;
  std::vector<Mask> opens_;  // sorted ascending by mask value
};

/// Checks the topology axioms on a raw family; empty result means valid,
/// otherwise a human-readable witness of the first violation.
std::optional<std::string> topology_violation(const Carrier& carrier,
                                              std::span<const Mask> opens);

/// All up-sets of the preorder given per point by up[x] = {y : x <= y}.
/// This is the Alexandrov topology of the preorder; requires n <= 24.
std::vector<Mask> upsets_of_preorder(std::size_t n, std::span<const Mask> up);

/// All preorders on n points, each as the vector of up-sets up[x];
/// enumeration order is by ascending relation bitmask and is deterministic.
/// Preorders on a finite set are in bijection with topologies on it.
std::vector<std::vector<Mask>> enumerate_preorders(std::size_t n);

/// All topologies on the carrier (via the preorder bijection), in the
/// deterministic order induced by enumerate_preorders. Requires size <= 5.
std::vector<FinTopology> enumerate_topologies(const CarrierPtr& carrier);

}  // namespace bitopo
