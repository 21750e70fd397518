#pragma once

#include <span>
#include <string>
#include <string_view>

#include "bitopo/bval.hpp"
#include "bitopo/carrier.hpp"

namespace bitopo {

/// A B-valued subset of a finite carrier, stored canonically as its two
/// cuts: tcut = {x : value(x) >= tt}, fcut = {x : value(x) >= ff}. Every
/// function carrier -> B has exactly one such representation, and all
/// lattice/topology operations factor through classical set operations on
/// the cuts.
class BSet {
 public:
  BSet(CarrierPtr carrier, Mask tcut, Mask fcut);

  /// Constant function with value b.
  static BSet constant(CarrierPtr carrier, BVal b);
  /// b on the points of `points`, 0 elsewhere.
  static BSet scaled(CarrierPtr carrier, BVal b, Mask points);
  /// 1 on x, 0 elsewhere.
  static BSet point(CarrierPtr carrier, std::size_t x);

  const CarrierPtr& carrier() const { return carrier_; }
  Mask tcut() const { return tcut_; }
  Mask fcut() const { return fcut_; }

  BVal value_at(std::size_t x) const;
  BVal value_at(std::string_view point_name) const;

  bool operator==(const BSet& other) const {
    return tcut_ == other.tcut_ && fcut_ == other.fcut_ &&
           same_carrier(carrier_, other.carrier_);
  }

 private:
  CarrierPtr carrier_;
  Mask tcut_;
  Mask fcut_;
};

BSet meet(const BSet& a, const BSet& b);
BSet join(const BSet& a, const BSet& b);
BSet neg(const BSet& a);
BSet scalar_meet(BVal b, const BSet& a);
BSet scalar_implies(BVal b, const BSet& a);

/// Pointwise order: a(x) <= b(x) for all x.
bool pointwise_leq(const BSet& a, const BSet& b);

/// Inclusion degree sub(a, b) = meet over x of a(x) -> b(x); 1 on the empty
/// carrier. Cut criterion: result >= tt iff a.tcut subset of b.tcut, and
/// >= ff iff a.fcut subset of b.fcut.
BVal sub(const BSet& a, const BSet& b);

/// Supremum of all values taken by the set.
BVal sup(const BSet& a);

/// "tt{a b} ff{b c}" literal rendering, in carrier order.
std::string format_bset(const BSet& s);

/// Parses the literal syntax above; throws ValidationError on stray points
/// or malformed input.
BSet parse_bset(const CarrierPtr& carrier, std::string_view text);

}  // namespace bitopo
