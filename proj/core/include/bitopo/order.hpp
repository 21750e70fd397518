#pragma once

#include <span>
#include <string>
#include <vector>

#include "bitopo/bset.hpp"
#include "bitopo/space.hpp"

namespace bitopo {

/// A B-valued order: reflexive (r(x,x) = 1) and transitive
/// (r(y,z) ^ r(x,y) <= r(x,z)). Stored as a dense matrix, row = first
/// argument. Construction validates both axioms.
class BOrder {
 public:
  BOrder(CarrierPtr carrier, std::vector<BVal> matrix);

  const CarrierPtr& carrier() const { return carrier_; }
  std::size_t size() const { return carrier_->size(); }
  BVal at(std::size_t x, std::size_t y) const {
    return matrix_[x * carrier_->size() + y];
  }

  bool operator==(const BOrder& o) const { return matrix_ == o.matrix_; }

  /// Labeled matrix with tokens 0/ff/tt/1, matching the report layout.
  std::string render() const;

 private:
  CarrierPtr carrier_;
  std::vector<BVal> matrix_;
};

/// Generated order: Omega(family)(x,y) = meet over the family of
/// value(x) -> value(y); the empty family gives the constant-1 matrix.
BOrder omega_of_family(const CarrierPtr& carrier, std::span<const BSet> family);

/// Specialization B-order of a space, computed through closures of point
/// sets: Omega(x,y) = closure(1_y)(x).
BOrder specialization(const BSpace& s);

/// Cross-check path: the generated order of the subbasis
/// {tt_U : U tt-open} and {ff_V : V ff-open}.
BOrder specialization_via_subbasis(const BSpace& s);

bool is_symmetric(const BOrder& r);
/// Separated: r(x,y) = 1 = r(y,x) implies x = y.
bool is_separated(const BOrder& r);

enum class Component { tt, ff };

/// Thresholds the matrix at tt (resp. ff): the classical specialization
/// preorder of the corresponding component topology.
std::vector<Mask> component_order(const BOrder& r, Component which);

bool preserves_border(const std::vector<std::size_t>& f, const BOrder& src,
                      const BOrder& tgt);

}  // namespace bitopo
