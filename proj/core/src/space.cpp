#include "bitopo/space.hpp"

#include <algorithm>
#include <set>

namespace bitopo {

BSpace make_bspace(std::string name, CarrierPtr carrier,
                   std::vector<Mask> tt_opens, std::vector<Mask> ff_opens) {
  auto tt = FinTopology::from_opens(carrier, std::move(tt_opens));
  auto ff = FinTopology::from_opens(carrier, std::move(ff_opens));
  return BSpace{std::move(name), std::move(carrier), std::move(tt),
                std::move(ff)};
}

bool is_bopen(const BSpace& s, const BSet& lam) {
  require_same_carrier(s.carrier, lam.carrier(), "is_bopen");
  return s.tt.contains(lam.tcut()) && s.ff.contains(lam.fcut());
}

bool is_bclosed(const BSpace& s, const BSet& lam) {
  return is_bopen(s, neg(lam));
}

BSet closure(const BSpace& s, const BSet& lam) {
  require_same_carrier(s.carrier, lam.carrier(), "closure");
  return BSet(lam.carrier(), s.tt.closure(lam.tcut()), s.ff.closure(lam.fcut()));
}

BSet interior(const BSpace& s, const BSet& lam) {
  require_same_carrier(s.carrier, lam.carrier(), "interior");
  return BSet(lam.carrier(), s.tt.interior(lam.tcut()),
              s.ff.interior(lam.fcut()));
}

std::vector<BSet> all_bopens(const BSpace& s) {
  std::vector<BSet> out;
  out.reserve(s.tt.size() * s.ff.size());
  for (Mask u : s.tt.opens())
    for (Mask v : s.ff.opens()) out.emplace_back(s.carrier, u, v);
  return out;
}

std::vector<BSet> all_bclosed(const BSpace& s) {
  std::vector<BSet> out;
  out.reserve(s.tt.size() * s.ff.size());
  for (Mask c : s.tt.closed_sets())
    for (Mask d : s.ff.closed_sets()) out.emplace_back(s.carrier, c, d);
  return out;
}

std::vector<BSet> all_bsets(const CarrierPtr& carrier) {
  const std::size_t n = carrier->size();
  if (n > 10) throw BoundError("B-set enumeration limited to 10 points");
  std::vector<BSet> out;
  const Mask full = carrier->full();
  for (Mask t = 0;; ++t) {
    for (Mask f = 0;; ++f) {
      out.emplace_back(carrier, t, f);
      if (f == full) break;
    }
    if (t == full) break;
  }
  return out;
}

BSpace sierpinski() {
  auto carrier = make_carrier({"0", "ff", "tt", "1"});
  const Mask full = carrier->full();
  const Mask up_tt = mask_bit(2) | mask_bit(3);  // {tt, 1}
  const Mask up_ff = mask_bit(1) | mask_bit(3);  // {ff, 1}
  return make_bspace("SIERP", carrier, {0, up_tt, full}, {0, up_ff, full});
}

namespace {

CarrierPtr product_carrier(const Carrier& a, const Carrier& b) {
  std::vector<std::string> names;
  names.reserve(a.size() * b.size());
  for (const auto& x : a.points())
    for (const auto& y : b.points()) names.push_back(x + "." + y);
  return make_carrier(std::move(names));
}

// Embeds U x V into the row-major product carrier.
Mask box(Mask u, Mask v, std::size_t nb) {
  Mask out = 0;
  for (std::size_t i = 0; i < 64 && (u >> i); ++i)
    if (mask_test(u, i)) out |= v << (i * nb);
  return out;
}

}  // namespace

BSpace dot_product(const FinTopology& x, const FinTopology& y) {
  auto carrier = product_carrier(*x.carrier(), *y.carrier());
  const std::size_t nb = y.carrier()->size();
  const Mask full_x = x.carrier()->full();
  const Mask full_y = y.carrier()->full();
  std::vector<Mask> tt_opens, ff_opens;
  for (Mask u : x.opens()) tt_opens.push_back(box(u, full_y, nb));
  for (Mask v : y.opens()) ff_opens.push_back(box(full_x, v, nb));
  return make_bspace("dot", carrier, std::move(tt_opens), std::move(ff_opens));
}

BSpace omega(const FinTopology& t) {
  return BSpace{"omega", t.carrier(), t, t};
}

FinTopology iota(const BSpace& s) {
  std::vector<Mask> subbasis(s.tt.opens());
  subbasis.insert(subbasis.end(), s.ff.opens().begin(), s.ff.opens().end());
  return FinTopology::generate(s.carrier, subbasis);
}

FinTopology iota_tt(const BSpace& s) { return s.tt; }
FinTopology iota_ff(const BSpace& s) { return s.ff; }

namespace {

FinTopology product_topology_on(const FinTopology& a, const FinTopology& b,
                                const CarrierPtr& carrier) {
  // Finite spaces are Alexandrov: the product topology is the up-set family
  // of the product of the two specialization preorders.
  const std::size_t na = a.carrier()->size();
  const std::size_t nb = b.carrier()->size();
  std::vector<Mask> up(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      up[i * nb + j] = box(a.min_open(i), b.min_open(j), nb);
  return FinTopology::from_opens(carrier, upsets_of_preorder(na * nb, up));
}

}  // namespace

FinTopology product_topology(const FinTopology& a, const FinTopology& b) {
  if (a.carrier()->size() * b.carrier()->size() > 20)
    throw BoundError("product carrier limited to 20 points");
  auto carrier = product_carrier(*a.carrier(), *b.carrier());
  return product_topology_on(a, b, carrier);
}

BSpace product(const BSpace& a, const BSpace& b) {
  if (a.carrier->size() * b.carrier->size() > 20)
    throw BoundError("product carrier limited to 20 points");
  auto carrier = product_carrier(*a.carrier, *b.carrier);
  auto tt = product_topology_on(a.tt, b.tt, carrier);
  auto ff = product_topology_on(a.ff, b.ff, carrier);
  return BSpace{a.name + "x" + b.name, carrier, std::move(tt), std::move(ff)};
}

BSpace subspace(const BSpace& s, Mask points) {
  if (points & ~s.carrier->full())
    throw ValidationError("subspace points not within carrier");
  std::vector<std::string> names;
  std::vector<std::size_t> old_index;
  for (std::size_t i = 0; i < s.carrier->size(); ++i)
    if (mask_test(points, i)) {
      names.push_back(s.carrier->name(i));
      old_index.push_back(i);
    }
  auto carrier = make_carrier(std::move(names));
  auto restrict_family = [&](const FinTopology& t) {
    std::set<Mask> opens;
    for (Mask u : t.opens()) {
      Mask m = 0;
      for (std::size_t k = 0; k < old_index.size(); ++k)
        if (mask_test(u, old_index[k])) m |= mask_bit(k);
      opens.insert(m);
    }
    return std::vector<Mask>(opens.begin(), opens.end());
  };
  return make_bspace(s.name + "|sub", carrier, restrict_family(s.tt),
                     restrict_family(s.ff));
}

Quotient quotient(const BSpace& s, const std::vector<Mask>& classes) {
  const Mask full = s.carrier->full();
  Mask seen = 0;
  for (Mask c : classes) {
    if (c == 0) throw ValidationError("quotient: empty class");
    if (c & ~full) throw ValidationError("quotient: class not within carrier");
    if (c & seen) throw ValidationError("quotient: overlapping classes");
    seen |= c;
  }
  if (seen != full) throw ValidationError("quotient: classes do not cover");
  const std::size_t k = classes.size();
  if (k > 20) throw BoundError("quotient limited to 20 classes");

  std::vector<std::size_t> projection(s.carrier->size());
  std::vector<std::string> names(k);
  for (std::size_t c = 0; c < k; ++c) {
    bool first = true;
    for (std::size_t i = 0; i < s.carrier->size(); ++i)
      if (mask_test(classes[c], i)) {
        projection[i] = c;
        if (first) names[c] = s.carrier->name(i);
        first = false;
      }
  }
  auto carrier = make_carrier(std::move(names));
  auto push_forward = [&](const FinTopology& t) {
    // W open iff its preimage is open.
    std::vector<Mask> opens;
    const Mask kfull = carrier->full();
    for (Mask w = 0;; ++w) {
      Mask pre = 0;
      for (std::size_t c = 0; c < k; ++c)
        if (mask_test(w, c)) pre |= classes[c];
      if (t.contains(pre)) opens.push_back(w);
      if (w == kfull) break;
    }
    return opens;
  };
  auto space = make_bspace(s.name + "/~", carrier, push_forward(s.tt),
                           push_forward(s.ff));
  return Quotient{std::move(space), std::move(projection)};
}

BSpace relabel(const BSpace& s, std::string name,
               std::vector<std::string> points) {
  if (points.size() != s.carrier->size())
    throw ValidationError("relabel: wrong number of point names");
  auto carrier = make_carrier(std::move(points));
  return make_bspace(std::move(name), carrier, s.tt.opens(), s.ff.opens());
}

bool is_continuous(const ContinuousMap& f) {
  const std::size_t n = f.source.carrier->size();
  if (f.mapping.size() != n)
    throw ValidationError("continuous map not total on source carrier");
  for (std::size_t x : f.mapping)
    if (x >= f.target.carrier->size())
      throw ValidationError("continuous map image outside target carrier");
  auto preimage = [&](Mask m) {
    Mask pre = 0;
    for (std::size_t x = 0; x < n; ++x)
      if (mask_test(m, f.mapping[x])) pre |= mask_bit(x);
    return pre;
  };
  for (Mask u : f.target.tt.opens())
    if (!f.source.tt.contains(preimage(u))) return false;
  for (Mask v : f.target.ff.opens())
    if (!f.source.ff.contains(preimage(v))) return false;
  return true;
}

BSet pullback(const ContinuousMap& f, const BSet& lam) {
  require_same_carrier(f.target.carrier, lam.carrier(), "pullback");
  Mask t = 0, ff = 0;
  for (std::size_t x = 0; x < f.mapping.size(); ++x) {
    if (mask_test(lam.tcut(), f.mapping[x])) t |= mask_bit(x);
    if (mask_test(lam.fcut(), f.mapping[x])) ff |= mask_bit(x);
  }
  return BSet(f.source.carrier, t, ff);
}

bool is_continuous_via_pullbacks(const ContinuousMap& f) {
  for (const BSet& lam : all_bopens(f.target))
    if (!is_bopen(f.source, pullback(f, lam))) return false;
  return true;
}

}  // namespace bitopo
