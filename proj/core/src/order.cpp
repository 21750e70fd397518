#include "bitopo/order.hpp"

#include <sstream>

namespace bitopo {

BOrder::BOrder(CarrierPtr carrier, std::vector<BVal> matrix)
    : carrier_(std::move(carrier)), matrix_(std::move(matrix)) {
  const std::size_t n = carrier_->size();
  if (matrix_.size() != n * n)
    throw ValidationError("B-order matrix has wrong shape");
  for (std::size_t x = 0; x < n; ++x)
    if (matrix_[x * n + x] != BVal::top)
      throw ValidationError("B-order not reflexive at " + carrier_->name(x));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (!leq(meet(matrix_[y * n + z], matrix_[x * n + y]), matrix_[x * n + z]))
          throw ValidationError("B-order not transitive at (" +
                                carrier_->name(x) + ", " + carrier_->name(y) +
                                ", " + carrier_->name(z) + ")");
}

std::string BOrder::render() const {
  const std::size_t n = carrier_->size();
  std::size_t width = 1;
  for (std::size_t i = 0; i < n; ++i)
    width = std::max(width, carrier_->name(i).size());
  width = std::max(width, std::size_t{2});
  auto pad = [&](std::string_view s) {
    std::string out(s);
    out.resize(width, ' ');
    return out;
  };
  std::ostringstream os;
  os << pad("") << " |";
  for (std::size_t j = 0; j < n; ++j) os << ' ' << pad(carrier_->name(j));
  os << '\n';
  for (std::size_t x = 0; x < n; ++x) {
    os << pad(carrier_->name(x)) << " |";
    for (std::size_t y = 0; y < n; ++y) os << ' ' << pad(to_token(at(x, y)));
    os << '\n';
  }
  return os.str();
}

BOrder omega_of_family(const CarrierPtr& carrier, std::span<const BSet> family) {
  const std::size_t n = carrier->size();
  std::vector<BVal> m(n * n, BVal::top);
  for (const BSet& lam : family) {
    require_same_carrier(carrier, lam.carrier(), "omega_of_family");
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        m[x * n + y] =
            meet(m[x * n + y], implies(lam.value_at(x), lam.value_at(y)));
  }
  return BOrder(carrier, std::move(m));
}

BOrder specialization(const BSpace& s) {
  const std::size_t n = s.carrier->size();
  std::vector<BVal> m(n * n);
  for (std::size_t y = 0; y < n; ++y) {
    const BSet cl = closure(s, BSet::point(s.carrier, y));
    for (std::size_t x = 0; x < n; ++x) m[x * n + y] = cl.value_at(x);
  }
  return BOrder(s.carrier, std::move(m));
}

BOrder specialization_via_subbasis(const BSpace& s) {
  std::vector<BSet> family;
  for (Mask u : s.tt.opens())
    family.push_back(BSet::scaled(s.carrier, BVal::tt, u));
  for (Mask v : s.ff.opens())
    family.push_back(BSet::scaled(s.carrier, BVal::ff, v));
  return omega_of_family(s.carrier, family);
}

bool is_symmetric(const BOrder& r) {
  const std::size_t n = r.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (r.at(x, y) != r.at(y, x)) return false;
  return true;
}

bool is_separated(const BOrder& r) {
  const std::size_t n = r.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y && r.at(x, y) == BVal::top && r.at(y, x) == BVal::top)
        return false;
  return true;
}

std::vector<Mask> component_order(const BOrder& r, Component which) {
  const std::size_t n = r.size();
  const BVal threshold = which == Component::tt ? BVal::tt : BVal::ff;
  std::vector<Mask> up(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (leq(threshold, r.at(x, y))) up[x] |= mask_bit(y);
  return up;
}

bool preserves_border(const std::vector<std::size_t>& f, const BOrder& src,
                      const BOrder& tgt) {
  if (f.size() != src.size())
    throw ValidationError("map not total on source carrier");
  for (std::size_t x = 0; x < src.size(); ++x)
    for (std::size_t y = 0; y < src.size(); ++y)
      if (!leq(src.at(x, y), tgt.at(f[x], f[y]))) return false;
  return true;
}

}  // namespace bitopo
