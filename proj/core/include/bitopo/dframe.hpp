#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bitopo/space.hpp"

namespace bitopo {

/// A finite lattice presented by its order relation, validated to be a
/// distributive lattice with bottom and top (finite completeness then makes
/// it a frame; binary distributivity suffices in a finite lattice).
class FinFrame {
 public:
  static FinFrame from_leq(std::vector<std::string> labels,
                           std::vector<std::vector<bool>> leq);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  std::size_t meet(std::size_t a, std::size_t b) const {
    return meet_[a * size() + b];
  }
  std::size_t join(std::size_t a, std::size_t b) const {
    return join_[a * size() + b];
  }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

 private:
  FinFrame() = default;
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::size_t> meet_, join_;
  std::size_t bottom_ = 0, top_ = 0;
};

/// A frame together with a complemented pair (tt, ff): the image of the
/// constants embedding of B. Determines the map from B.
struct SliceObject {
  FinFrame frame;
  std::size_t tt_elem;
  std::size_t ff_elem;
};

/// Validates the complemented-pair requirement; throws ValidationError.
SliceObject make_slice(FinFrame frame, std::size_t tt_elem, std::size_t ff_elem);

/// The lattice "at 90 degrees": x logic-meet y = (x^ff) v (y^ff) v (x^y),
/// dually with tt for the logic join. tt is its top, ff its bottom.
std::size_t logic_meet(const SliceObject& s, std::size_t x, std::size_t y);
std::size_t logic_join(const SliceObject& s, std::size_t x, std::size_t y);

struct DFrame {
  SliceObject slice;
  std::vector<bool> con;  // consistency predicate, indexed by element
  std::vector<bool> tot;  // totality predicate
};

/// Checks the d-frame axioms; returns the tags of violated ones (empty =
/// valid). Tags: con-down, con-dirjoin, tot-up, con-logic, tot-logic,
/// con-ttff, tot-ttff, con-tot.
std::vector<std::string> validate_dframe(const DFrame& d);

/// B itself as a frame / slice object / d-frame (the unique d-frame
/// structure on B: con = {0, tt, ff}, tot = {tt, ff, 1}).
FinFrame bval_frame();
SliceObject bval_slice();
DFrame bval_dframe();

/// Open-set d-frame of a space: the product frame tt-opens x ff-opens with
/// con = disjoint pairs and tot = covering pairs.
DFrame open_set_dframe(const BSpace& s);

/// Free d-frame on a slice object: con = down(tt) u down(ff),
/// tot = up(tt) u up(ff).
DFrame f_functor(const SliceObject& s);
/// Forgets con and tot.
SliceObject g_functor(const DFrame& d);

using ElementMap = std::vector<std::size_t>;

/// Literal homomorphism checks: finite meets including top, all joins
/// including bottom (binary + subsets of size <= 3 as a guard; binary and
/// nullary generate all finite joins).
bool is_frame_hom(const ElementMap& h, const FinFrame& src, const FinFrame& tgt);
bool is_slice_hom(const ElementMap& h, const SliceObject& src,
                  const SliceObject& tgt);
bool is_dframe_hom(const ElementMap& h, const DFrame& src, const DFrame& tgt);

/// All slice homomorphisms src -> tgt. Enumerates through the decomposition
/// of the source as [0,tt] x [0,ff] to prune, then validates each candidate
/// literally. Throws BoundError when src exceeds max_elements.
std::vector<ElementMap> enumerate_slice_homs(const SliceObject& src,
                                             const SliceObject& tgt,
                                             std::size_t max_elements = 64);

/// All d-frame homomorphisms (slice homomorphisms preserving con and tot).
std::vector<ElementMap> enumerate_dframe_homs(const DFrame& src,
                                              const DFrame& tgt,
                                              std::size_t max_elements = 64);

/// d-points of a d-frame: d-frame homomorphisms into B.
std::vector<ElementMap> dframe_points(const DFrame& d,
                                      std::size_t max_elements = 64);

/// The spectrum of a d-frame: carrier = d-points (named p0, p1, ...),
/// tt-opens generated by {p : p(a) = tt} for a <= tt, ff dually.
BSpace dpt(const DFrame& d, std::size_t max_elements = 64);

}  // namespace bitopo
