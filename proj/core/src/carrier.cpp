#include "bitopo/carrier.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace bitopo {

namespace {

bool valid_point_name(const std::string& name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (c == '{' || c == '}' || c == '#' || std::isspace(static_cast<unsigned char>(c)))
      return false;
  }
  return true;
}

}  // namespace

Carrier::Carrier(std::vector<std::string> points) : points_(std::move(points)) {
  if (points_.size() > 64)
    throw ValidationError("carrier too large (at most 64 points)");
  std::unordered_set<std::string_view> seen;
  for (const auto& p : points_) {
    if (!valid_point_name(p))
      throw ValidationError("invalid point name '" + p + "'");
    if (!seen.insert(p).second)
      throw ValidationError("duplicate point name '" + p + "'");
  }
}

std::size_t Carrier::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i] == name) return i;
  throw ValidationError("point not in carrier: '" + std::string(name) + "'");
}

bool Carrier::contains(std::string_view name) const {
  return std::find(points_.begin(), points_.end(), name) != points_.end();
}

std::string Carrier::format_set(Mask m) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!mask_test(m, i)) continue;
    if (!first) out += ' ';
    out += points_[i];
    first = false;
  }
  out += '}';
  return out;
}

CarrierPtr make_carrier(std::vector<std::string> points) {
  return std::make_shared<const Carrier>(std::move(points));
}

bool same_carrier(const CarrierPtr& a, const CarrierPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_carrier(const CarrierPtr& a, const CarrierPtr& b,
                          std::string_view what) {
  if (!same_carrier(a, b))
    throw ValidationError("carrier mismatch in " + std::string(what));
}

int popcount(Mask m) { return std::popcount(m); }

}  // namespace bitopo
