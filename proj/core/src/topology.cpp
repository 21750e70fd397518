#include "bitopo/topology.hpp"

#include <algorithm>
#include <set>

namespace bitopo {

namespace {

std::vector<Mask> canonical(std::vector<Mask> opens) {
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  return opens;
}

}  // namespace

std::optional<std::string> topology_violation(const Carrier& carrier,
                                              std::span<const Mask> opens) {
  const Mask full = carrier.full();
  std::set<Mask> family(opens.begin(), opens.end());
  for (Mask m : family)
    if (m & ~full)
      return "open set " + carrier.format_set(m & full) +
             " reaches outside the carrier";
  if (!family.count(0)) return std::string("missing the empty set {}");
  if (!family.count(full))
    return "missing the full carrier " + carrier.format_set(full);
  for (Mask a : family) {
    for (Mask b : family) {
      if (!family.count(a | b))
        return "not closed under union: " + carrier.format_set(a) + " u " +
               carrier.format_set(b) + " = " + carrier.format_set(a | b);
      if (!family.count(a & b))
        return "not closed under intersection: " + carrier.format_set(a) +
               " n " + carrier.format_set(b) + " = " + carrier.format_set(a & b);
    }
  }
  return std::nullopt;
}

FinTopology FinTopology::from_opens(CarrierPtr carrier, std::vector<Mask> opens) {
  auto family = canonical(std::move(opens));
  if (auto why = topology_violation(*carrier, family))
    throw ValidationError("invalid topology: " + *why);
  return FinTopology(std::move(carrier), std::move(family));
}

FinTopology FinTopology::generate(CarrierPtr carrier,
                                  std::span<const Mask> subbasis) {
  const Mask full = carrier->full();
  for (Mask m : subbasis)
    if (m & ~full)
      throw ValidationError("subbasis set " + carrier->format_set(m & full) +
                            " reaches outside the carrier");
  // Finite intersections first (empty intersection = carrier), then unions.
  std::set<Mask> basis{full};
  bool changed = true;
  std::vector<Mask> worklist(subbasis.begin(), subbasis.end());
  for (Mask m : worklist) basis.insert(m);
  while (changed) {
    changed = false;
    std::vector<Mask> current(basis.begin(), basis.end());
    for (Mask a : current)
      for (Mask b : current)
        if (basis.insert(a & b).second) changed = true;
  }
  std::set<Mask> opens(basis.begin(), basis.end());
  opens.insert(0);
  changed = true;
  while (changed) {
    changed = false;
    std::vector<Mask> current(opens.begin(), opens.end());
    for (Mask a : current)
      for (Mask b : current)
        if (opens.insert(a | b).second) changed = true;
  }
  return FinTopology(std::move(carrier),
                     std::vector<Mask>(opens.begin(), opens.end()));
}

FinTopology FinTopology::discrete(CarrierPtr carrier) {
  if (carrier->size() > 24)
    throw BoundError("discrete topology materialization limited to 24 points");
  std::vector<Mask> opens;
  const Mask full = carrier->full();
  for (Mask m = 0;; ++m) {
    opens.push_back(m);
    if (m == full) break;
  }
  return FinTopology(std::move(carrier), std::move(opens));
}

FinTopology FinTopology::indiscrete(CarrierPtr carrier) {
  std::vector<Mask> opens{0};
  if (carrier->full() != 0) opens.push_back(carrier->full());
  return FinTopology(std::move(carrier), canonical(std::move(opens)));
}

bool FinTopology::contains(Mask m) const {
  return std::binary_search(opens_.begin(), opens_.end(), m);
}

Mask FinTopology::closure(Mask a) const {
  Mask avoid = 0;
  for (Mask u : opens_)
    if ((u & a) == 0) avoid |= u;
  return carrier_->full() & ~avoid;
}

Mask FinTopology::interior(Mask a) const {
  Mask in = 0;
  for (Mask u : opens_)
    if ((u & ~a) == 0) in |= u;
  return in;
}

std::vector<Mask> FinTopology::closed_sets() const {
  std::vector<Mask> closed;
  closed.reserve(opens_.size());
  const Mask full = carrier_->full();
  for (Mask u : opens_) closed.push_back(~u & full);
  std::sort(closed.begin(), closed.end());
  return closed;
}

Mask FinTopology::min_open(std::size_t x) const {
  Mask m = carrier_->full();
  for (Mask u : opens_)
    if (mask_test(u, x)) m &= u;
  return m;
}

bool FinTopology::spec_leq(std::size_t x, std::size_t y) const {
  return mask_test(closure(mask_bit(y)), x);
}

std::vector<Mask> upsets_of_preorder(std::size_t n, std::span<const Mask> up) {
  if (n > 24) throw BoundError("up-set enumeration limited to 24 points");
  std::vector<Mask> out;
  const Mask full = n == 0 ? 0 : (~Mask{0} >> (64 - n));
  for (Mask w = 0;; ++w) {
    bool ok = true;
    for (std::size_t p = 0; p < n && ok; ++p)
      if (mask_test(w, p) && (up[p] & ~w)) ok = false;
    if (ok) out.push_back(w);
    if (w == full) break;
  }
  return out;
}

std::vector<std::vector<Mask>> enumerate_preorders(std::size_t n) {
  if (n > 5) throw BoundError("preorder enumeration limited to 5 points");
  // Off-diagonal pair bits in a fixed order; reflexivity is implicit.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);

  std::vector<std::vector<Mask>> result;
  const std::uint64_t count = std::uint64_t{1} << pairs.size();
  for (std::uint64_t rel = 0; rel < count; ++rel) {
    std::vector<Mask> up(n, 0);
    for (std::size_t i = 0; i < n; ++i) up[i] = mask_bit(i);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((rel >> k) & 1) up[pairs[k].first] |= mask_bit(pairs[k].second);
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i)
      for (std::size_t j = 0; j < n && transitive; ++j)
        if (mask_test(up[i], j) && (up[j] & ~up[i])) transitive = false;
    if (transitive) result.push_back(std::move(up));
  }
  return result;
}

std::vector<FinTopology> enumerate_topologies(const CarrierPtr& carrier) {
  const std::size_t n = carrier->size();
  if (n > 5) throw BoundError("topology enumeration limited to 5 points");
  std::vector<FinTopology> out;
  for (const auto& up : enumerate_preorders(n))
    out.push_back(FinTopology::from_opens(carrier, upsets_of_preorder(n, up)));
  return out;
}

}  // namespace bitopo
