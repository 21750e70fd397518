#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bitopo {

/// A subset of a carrier, one bit per point in carrier order.
using Mask = std::uint64_t;

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A finite ordered sequence of distinct point names. Carriers are shared
/// between the sets, topologies and spaces built over them; at most 64
/// points so subsets fit in a Mask.
class Carrier {
 public:
  explicit Carrier(std::vector<std::string> points);

  std::size_t size() const { return points_.size(); }
  const std::string& name(std::size_t i) const { return points_.at(i); }
  const std::vector<std::string>& points() const { return points_; }

  /// Index of a named point, or nullopt-like -1 sentinel avoided: throws.
  std::size_t index_of(std::string_view name) const;
  bool contains(std::string_view name) const;

  Mask full() const {
    return points_.empty() ? 0 : (~Mask{0} >> (64 - points_.size()));
  }

  /// Renders a subset as "{a b c}" in carrier order; "{}" when empty.
  std::string format_set(Mask m) const;

  bool operator==(const Carrier& other) const {
    return points_ == other.points_;
  }

 private:
  std::vector<std::string> points_;
};

using CarrierPtr = std::shared_ptr<const Carrier>;

CarrierPtr make_carrier(std::vector<std::string> points);

/// Same carrier by identity or by content.
bool same_carrier(const CarrierPtr& a, const CarrierPtr& b);

void require_same_carrier(const CarrierPtr& a, const CarrierPtr& b,
                          std::string_view what);

inline bool mask_test(Mask m, std::size_t i) { return (m >> i) & 1u; }
inline Mask mask_bit(std::size_t i) { return Mask{1} << i; }
int popcount(Mask m);

}  // namespace bitopo
