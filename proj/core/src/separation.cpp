#include "bitopo/separation.hpp"

#include <algorithm>
#include <sstream>

#include "bitopo/hofmann_mislove.hpp"
#include "bitopo/sobriety.hpp"

namespace bitopo {

namespace {

constexpr std::string_view kAxiomNames[kAxiomCount] = {
    "T0",        "R0",        "T1",
    "R1",        "Hausdorff", "regular",
    "T3",        "normal",    "T4",
    "joinT0",    "joinT1",    "cwT0",
    "cwT1",      "cwR0",      "cwR1",
    "cwRegular", "cwNormal",  "pairwiseHausdorff",
    "pairwiseHausdorffWeak",  "orderSeparated",
    "pairwiseRegular",        "pairwiseNormal",
    "compact",
};

}  // namespace

std::string_view axiom_name(Axiom a) {
  return kAxiomNames[static_cast<std::size_t>(a)];
}

std::vector<Axiom> all_axioms() {
  std::vector<Axiom> out;
  out.reserve(kAxiomCount);
  for (std::size_t i = 0; i < kAxiomCount; ++i)
    out.push_back(static_cast<Axiom>(i));
  return out;
}

std::string AxiomReport::render_kv() const {
  std::ostringstream os;
  for (Axiom a : all_axioms())
    os << axiom_name(a) << " = " << ((*this)[a] ? "true" : "false") << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Classical deciders.

namespace {

std::vector<Mask> spec_up(const FinTopology& t) {
  std::vector<Mask> up(t.carrier()->size());
  for (std::size_t x = 0; x < up.size(); ++x) up[x] = t.min_open(x);
  return up;
}

bool classical_t0(const FinTopology& t) {
  const auto up = spec_up(t);
  for (std::size_t x = 0; x < up.size(); ++x)
    for (std::size_t y = x + 1; y < up.size(); ++y)
      if (mask_test(up[x], y) && mask_test(up[y], x)) return false;
  return true;
}

bool classical_t1(const FinTopology& t) {
  const auto up = spec_up(t);
  for (std::size_t x = 0; x < up.size(); ++x)
    if (up[x] != mask_bit(x)) return false;
  return true;
}

// Definitional: an open set containing x contains the closure of {x}.
bool classical_r0(const FinTopology& t) {
  for (std::size_t x = 0; x < t.carrier()->size(); ++x) {
    const Mask cl = t.closure(mask_bit(x));
    for (Mask u : t.opens())
      if (mask_test(u, x) && (cl & ~u)) return false;
  }
  return true;
}

// Specialization-symmetry path for R0.
bool classical_r0_symmetric(const FinTopology& t) {
  const auto up = spec_up(t);
  for (std::size_t x = 0; x < up.size(); ++x)
    for (std::size_t y = x + 1; y < up.size(); ++y)
      if (mask_test(up[x], y) != mask_test(up[y], x)) return false;
  return true;
}

bool disjoint_open_nbhds(const FinTopology& t, std::size_t x, std::size_t y) {
  // Minimal open neighbourhoods are the best candidates.
  return (t.min_open(x) & t.min_open(y)) == 0;
}

// Definitional: distinct point closures can be separated by disjoint opens.
bool classical_r1(const FinTopology& t) {
  for (std::size_t x = 0; x < t.carrier()->size(); ++x)
    for (std::size_t y = x + 1; y < t.carrier()->size(); ++y)
      if (t.closure(mask_bit(x)) != t.closure(mask_bit(y)) &&
          !disjoint_open_nbhds(t, x, y))
        return false;
  return true;
}

// Specialization-closed-in-the-square path for R1: the specialization
// relation, as a set of pairs, is down-closed under the product preorder.
bool classical_r1_closed_leq(const FinTopology& t) {
  const std::size_t n = t.carrier()->size();
  std::vector<Mask> down(n);
  for (std::size_t x = 0; x < n; ++x) down[x] = t.closure(mask_bit(x));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!t.spec_leq(x, y)) continue;
      for (std::size_t a = 0; a < n; ++a) {
        if (!mask_test(down[x], a)) continue;
        for (std::size_t b = 0; b < n; ++b)
          if (mask_test(down[y], b) && !t.spec_leq(a, b)) return false;
      }
    }
  return true;
}

bool classical_regular(const FinTopology& t) {
  for (Mask u : t.opens())
    for (std::size_t x = 0; x < t.carrier()->size(); ++x) {
      if (!mask_test(u, x)) continue;
      bool found = false;
      for (Mask v : t.opens())
        if (mask_test(v, x) && (t.closure(v) & ~u) == 0) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

bool classical_normal(const FinTopology& t) {
  const auto closed = t.closed_sets();
  for (Mask f : closed)
    for (Mask g : closed) {
      if (f & g) continue;
      bool found = false;
      for (Mask u : t.opens()) {
        if (f & ~u) continue;
        for (Mask v : t.opens())
          if ((g & ~v) == 0 && (u & v) == 0) {
            found = true;
            break;
          }
        if (found) break;
      }
      if (!found) return false;
    }
  return true;
}

bool classical_sober(const FinTopology& t) {
  for (Mask c : irreducible_closed_sets(t)) {
    std::size_t generic = 0;
    for (std::size_t x = 0; x < t.carrier()->size(); ++x)
      if (t.closure(mask_bit(x)) == c) ++generic;
    if (generic != 1) return false;
  }
  return true;
}

}  // namespace

bool classical_axiom(const FinTopology& t, ClassicalAxiom a) {
  switch (a) {
    case ClassicalAxiom::T0: return classical_t0(t);
    case ClassicalAxiom::T1: return classical_t1(t);
    case ClassicalAxiom::R0: return classical_r0(t);
    case ClassicalAxiom::R1: return classical_r1(t);
    case ClassicalAxiom::Regular: return classical_regular(t);
    case ClassicalAxiom::Normal: return classical_normal(t);
    case ClassicalAxiom::Sober: return classical_sober(t);
    case ClassicalAxiom::Compact: return true;  // finite carrier
  }
  return false;
}

std::string_view classical_compact_note() {
  return "every finite space is compact: finite directed families have maxima";
}

// ---------------------------------------------------------------------------
// B-valued deciders.

namespace {

struct BOpenInfo {
  Mask u, v;      // the open's cuts
  Mask clu, clv;  // cuts of its closure
};

std::vector<BOpenInfo> bopen_infos(const BSpace& s) {
  std::vector<BOpenInfo> out;
  out.reserve(s.tt.size() * s.ff.size());
  std::vector<Mask> cl_tt, cl_ff;
  for (Mask u : s.tt.opens()) cl_tt.push_back(s.tt.closure(u));
  for (Mask v : s.ff.opens()) cl_ff.push_back(s.ff.closure(v));
  for (std::size_t i = 0; i < s.tt.size(); ++i)
    for (std::size_t j = 0; j < s.ff.size(); ++j)
      out.push_back({s.tt.opens()[i], s.ff.opens()[j], cl_tt[i], cl_ff[j]});
  return out;
}

// The given matrix cut, as a pair set, is closed in the square of the given
// component topology: down-closed under the product specialization preorder.
bool cut_closed_in_square(const FinTopology& t,
                          const std::vector<bool>& in_cut) {
  const std::size_t n = t.carrier()->size();
  std::vector<Mask> down(n);
  for (std::size_t x = 0; x < n; ++x) down[x] = t.closure(mask_bit(x));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!in_cut[x * n + y]) continue;
      for (std::size_t a = 0; a < n; ++a) {
        if (!mask_test(down[x], a)) continue;
        for (std::size_t b = 0; b < n; ++b)
          if (mask_test(down[y], b) && !in_cut[a * n + b]) return false;
      }
    }
  return true;
}

bool border_closed_in_square(const BSpace& s, const BOrder& r) {
  const std::size_t n = r.size();
  std::vector<bool> tcut(n * n), fcut(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      tcut[x * n + y] = has_tt(r.at(x, y));
      fcut[x * n + y] = has_ff(r.at(x, y));
    }
  return cut_closed_in_square(s.tt, tcut) && cut_closed_in_square(s.ff, fcut);
}

bool b_regular(const BSpace& s, const std::vector<BOpenInfo>& opens) {
  for (const auto& lam : opens) {
    Mask ju = 0, jv = 0;
    for (const auto& mu : opens)
      if ((mu.clu & ~lam.u) == 0 && (mu.clv & ~lam.v) == 0) {
        ju |= mu.u;
        jv |= mu.v;
      }
    if (ju != lam.u || jv != lam.v) return false;
  }
  return true;
}

bool b_normal(const BSpace& s, const std::vector<BOpenInfo>& opens) {
  // Closed sets are the negations of opens: cuts (~u, ~v).
  const Mask full = s.carrier->full();
  for (const auto& lam : opens) {
    for (const auto& om : opens) {
      const Mask mu_t = ~om.u & full, mu_f = ~om.v & full;
      if ((mu_t & ~lam.u) || (mu_f & ~lam.v)) continue;  // need mu <= lam
      bool found = false;
      for (const auto& nu : opens)
        if ((mu_t & ~nu.u) == 0 && (mu_f & ~nu.v) == 0 &&
            (nu.clu & ~lam.u) == 0 && (nu.clv & ~lam.v) == 0) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  }
  return true;
}

bool pairwise_hausdorff(const BSpace& s) {
  const std::size_t n = s.carrier->size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      bool found = false;
      for (Mask u : s.tt.opens()) {
        if (!mask_test(u, x)) continue;
        for (Mask v : s.ff.opens())
          if (mask_test(v, y) && (u & v) == 0) {
            found = true;
            break;
          }
        if (found) break;
      }
      if (!found) return false;
    }
  return true;
}

bool pairwise_hausdorff_weak(const BSpace& s) {
  const std::size_t n = s.carrier->size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      bool found = false;
      for (Mask u : s.tt.opens()) {
        for (Mask v : s.ff.opens()) {
          if (u & v) continue;
          if ((mask_test(u, x) && mask_test(v, y)) ||
              (mask_test(u, y) && mask_test(v, x))) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) return false;
    }
  return true;
}

bool order_separated(const BSpace& s) {
  const std::size_t n = s.carrier->size();
  auto os_leq = [&](std::size_t x, std::size_t y) {
    return s.tt.spec_leq(x, y) && s.ff.spec_leq(y, x);
  };
  // The relation is a preorder by construction; partial order = antisymmetry.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (os_leq(x, y) && os_leq(y, x)) return false;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (os_leq(x, y)) continue;
      bool found = false;
      for (Mask u : s.tt.opens()) {
        if (!mask_test(u, x)) continue;
        for (Mask v : s.ff.opens())
          if (mask_test(v, y) && (u & v) == 0) {
            found = true;
            break;
          }
        if (found) break;
      }
      if (!found) return false;
    }
  return true;
}

// One direction of pairwise regularity: closed sets of `closed_side` are
// separated from outside points by an open of the same side around the
// point and an open of the other side around the closed set.
bool pairwise_regular_one(const FinTopology& closed_side,
                          const FinTopology& other_side) {
  const std::size_t n = closed_side.carrier()->size();
  for (Mask f : closed_side.closed_sets())
    for (std::size_t x = 0; x < n; ++x) {
      if (mask_test(f, x)) continue;
      bool found = false;
      for (Mask u : closed_side.opens()) {
        if (!mask_test(u, x)) continue;
        for (Mask v : other_side.opens())
          if ((f & ~v) == 0 && (u & v) == 0) {
            found = true;
            break;
          }
        if (found) break;
      }
      if (!found) return false;
    }
  return true;
}

bool pairwise_normal(const BSpace& s) {
  for (Mask f : s.tt.closed_sets())
    for (Mask g : s.ff.closed_sets()) {
      if (f & g) continue;
      bool found = false;
      // The tt-closed set goes inside a ff-open, the ff-closed set inside a
      // tt-open, and the two opens are disjoint.
      for (Mask u : s.tt.opens()) {
        if (g & ~u) continue;
        for (Mask v : s.ff.opens())
          if ((f & ~v) == 0 && (u & v) == 0) {
            found = true;
            break;
          }
        if (found) break;
      }
      if (!found) return false;
    }
  return true;
}

}  // namespace

AxiomReport classify(const BSpace& s) {
  AxiomReport r;
  r.space = s.name;
  const BOrder spec = specialization(s);
  const auto opens = bopen_infos(s);

  r[Axiom::T0] = is_separated(spec);
  r[Axiom::R0] = is_symmetric(spec);
  r[Axiom::T1] = r[Axiom::T0] && r[Axiom::R0];
  r[Axiom::R1] = border_closed_in_square(s, spec);
  r[Axiom::Hausdorff] = r[Axiom::T0] && r[Axiom::R1];
  r[Axiom::Regular] = b_regular(s, opens);
  r[Axiom::T3] = r[Axiom::T0] && r[Axiom::Regular];
  r[Axiom::Normal] = b_normal(s, opens);
  r[Axiom::T4] = r[Axiom::T1] && r[Axiom::Normal];

  const FinTopology join_top = iota(s);
  r[Axiom::JoinT0] = classical_axiom(join_top, ClassicalAxiom::T0);
  r[Axiom::JoinT1] = classical_axiom(join_top, ClassicalAxiom::T1);
  r[Axiom::CwT0] = classical_axiom(s.tt, ClassicalAxiom::T0) &&
                   classical_axiom(s.ff, ClassicalAxiom::T0);
  r[Axiom::CwT1] = classical_axiom(s.tt, ClassicalAxiom::T1) &&
                   classical_axiom(s.ff, ClassicalAxiom::T1);
  r[Axiom::CwR0] = classical_axiom(s.tt, ClassicalAxiom::R0) &&
                   classical_axiom(s.ff, ClassicalAxiom::R0);
  r[Axiom::CwR1] = classical_axiom(s.tt, ClassicalAxiom::R1) &&
                   classical_axiom(s.ff, ClassicalAxiom::R1);
  r[Axiom::CwRegular] = classical_axiom(s.tt, ClassicalAxiom::Regular) &&
                        classical_axiom(s.ff, ClassicalAxiom::Regular);
  r[Axiom::CwNormal] = classical_axiom(s.tt, ClassicalAxiom::Normal) &&
                       classical_axiom(s.ff, ClassicalAxiom::Normal);

  r[Axiom::PairwiseHausdorff] = pairwise_hausdorff(s);
  r[Axiom::PairwiseHausdorffWeak] = pairwise_hausdorff_weak(s);
  r[Axiom::OrderSeparated] = order_separated(s);
  r[Axiom::PairwiseRegular] =
      pairwise_regular_one(s.tt, s.ff) && pairwise_regular_one(s.ff, s.tt);
  r[Axiom::PairwiseNormal] = pairwise_normal(s);
  r[Axiom::Compact] = is_compact(s, BSet::constant(s.carrier, BVal::top));
  return r;
}

AxiomReport classify_fast(const BSpace& s) {
  AxiomReport r;
  r.space = s.name;
  const bool tt_t0 = classical_t0(s.tt), ff_t0 = classical_t0(s.ff);
  const bool tt_r0 = classical_r0_symmetric(s.tt),
             ff_r0 = classical_r0_symmetric(s.ff);
  const bool tt_r1 = classical_r1(s.tt), ff_r1 = classical_r1(s.ff);
  const bool tt_reg = classical_regular(s.tt), ff_reg = classical_regular(s.ff);
  const bool tt_nrm = classical_normal(s.tt), ff_nrm = classical_normal(s.ff);
  const FinTopology join_top = iota(s);

  r[Axiom::JoinT0] = classical_t0(join_top);
  r[Axiom::JoinT1] = classical_t1(join_top);
  r[Axiom::T0] = r[Axiom::JoinT0];
  r[Axiom::R0] = tt_r0 && ff_r0;
  r[Axiom::T1] = r[Axiom::T0] && r[Axiom::R0];
  r[Axiom::R1] = tt_r1 && ff_r1;
  r[Axiom::Hausdorff] = r[Axiom::T0] && r[Axiom::R1];
  r[Axiom::Regular] = tt_reg && ff_reg;
  r[Axiom::T3] = r[Axiom::T0] && r[Axiom::Regular];
  r[Axiom::Normal] = tt_nrm && ff_nrm;
  r[Axiom::T4] = r[Axiom::T1] && r[Axiom::Normal];
  r[Axiom::CwT0] = tt_t0 && ff_t0;
  r[Axiom::CwT1] = classical_t1(s.tt) && classical_t1(s.ff);
  r[Axiom::CwR0] = r[Axiom::R0];
  r[Axiom::CwR1] = r[Axiom::R1];
  r[Axiom::CwRegular] = r[Axiom::Regular];
  r[Axiom::CwNormal] = r[Axiom::Normal];
  r[Axiom::PairwiseHausdorff] = pairwise_hausdorff(s);
  r[Axiom::PairwiseHausdorffWeak] = pairwise_hausdorff_weak(s);
  r[Axiom::OrderSeparated] = order_separated(s);
  r[Axiom::PairwiseRegular] =
      pairwise_regular_one(s.tt, s.ff) && pairwise_regular_one(s.ff, s.tt);
  r[Axiom::PairwiseNormal] = pairwise_normal(s);
  r[Axiom::Compact] = true;
  return r;
}

bool check(const BSpace& s, Axiom a) { return classify(s)[a]; }

T0Reflection t0_reflection(const BSpace& s) {
  const std::size_t n = s.carrier->size();
  // x ~ y iff no open of either component separates them; with finite
  // topologies that is equality of the minimal neighbourhood pairs.
  std::vector<Mask> classes;
  std::vector<std::size_t> projection(n);
  std::vector<std::pair<Mask, Mask>> keys;
  for (std::size_t x = 0; x < n; ++x) {
    const std::pair<Mask, Mask> key{s.tt.min_open(x), s.ff.min_open(x)};
    bool placed = false;
    for (std::size_t c = 0; c < keys.size(); ++c)
      if (keys[c] == key) {
        classes[c] |= mask_bit(x);
        projection[x] = c;
        placed = true;
        break;
      }
    if (!placed) {
      keys.push_back(key);
      classes.push_back(mask_bit(x));
      projection[x] = classes.size() - 1;
    }
  }
  std::vector<std::string> names(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (std::size_t x = 0; x < n; ++x)
      if (mask_test(classes[c], x)) {
        names[c] = s.carrier->name(x);
        break;
      }
  }
  auto carrier = make_carrier(std::move(names));
  // Every open is saturated for ~, so the quotient topology is the family of
  // class images of opens.
  auto push = [&](const FinTopology& t) {
    std::vector<Mask> opens;
    for (Mask u : t.opens()) {
      Mask w = 0;
      for (std::size_t c = 0; c < classes.size(); ++c)
        if ((classes[c] & ~u) == 0 && classes[c] != 0) w |= mask_bit(c);
      opens.push_back(w);
    }
    return opens;
  };
  auto space =
      make_bspace(s.name + "/T0", carrier, push(s.tt), push(s.ff));
  return T0Reflection{std::move(space), std::move(projection)};
}

std::vector<std::string> audit_implications(
    std::span<const AxiomReport> reports) {
  using A = Axiom;
  static const std::vector<std::pair<A, A>> edges = {
      {A::T4, A::T3},          {A::T3, A::Hausdorff},
      {A::Hausdorff, A::T1},   {A::T1, A::T0},
      {A::T4, A::Normal},      {A::T3, A::Regular},
      {A::Hausdorff, A::R1},   {A::T1, A::R0},
      {A::Regular, A::R1},     {A::R1, A::R0},
  };
  static const std::vector<std::pair<A, A>> equivalences = {
      {A::T0, A::JoinT0},        {A::R0, A::CwR0},
      {A::R1, A::CwR1},          {A::Regular, A::CwRegular},
      {A::Normal, A::CwNormal},
  };
  std::vector<std::string> violations;
  for (const AxiomReport& r : reports) {
    for (auto [from, to] : edges)
      if (r[from] && !r[to])
        violations.push_back(r.space + ": " + std::string(axiom_name(from)) +
                             " without " + std::string(axiom_name(to)));
    for (auto [a, b] : equivalences)
      if (r[a] != r[b])
        violations.push_back(r.space + ": " + std::string(axiom_name(a)) +
                             " disagrees with " + std::string(axiom_name(b)));
    if (r[A::T1] && !r[A::JoinT1])
      violations.push_back(r.space + ": T1 without joinT1");
  }
  return violations;
}

// ---------------------------------------------------------------------------
// Dual-path cross checks.

namespace {

void expect(std::vector<std::string>& out, bool ok, const std::string& what) {
  if (!ok) out.push_back(what);
}

}  // namespace

std::vector<std::string> separation_cross_checks(const BSpace& s) {
  std::vector<std::string> bad;
  const std::string tag = s.name + ": ";
  const BOrder spec = specialization(s);

  // Specialization: closures vs generated-from-subbasis.
  expect(bad, spec == specialization_via_subbasis(s),
         tag + "specialization: closure path != subbasis path");

  // Component thresholds = component specialization preorders.
  {
    const auto tt_up = component_order(spec, Component::tt);
    const auto ff_up = component_order(spec, Component::ff);
    bool ok = true;
    for (std::size_t x = 0; x < s.carrier->size(); ++x)
      ok = ok && tt_up[x] == s.tt.min_open(x) && ff_up[x] == s.ff.min_open(x);
    expect(bad, ok, tag + "specialization thresholds != component preorders");
  }

  const AxiomReport r = classify(s);
  const AxiomReport rf = classify_fast(s);
  for (Axiom a : all_axioms())
    expect(bad, r[a] == rf[a],
           tag + std::string(axiom_name(a)) +
               ": B-valued decider != componentwise characterization");

  // Classical dual paths on both components.
  for (const FinTopology* t : {&s.tt, &s.ff}) {
    expect(bad, classical_r0(*t) == classical_r0_symmetric(*t),
           tag + "classical R0: definition != specialization symmetry");
    expect(bad, classical_r1(*t) == classical_r1_closed_leq(*t),
           tag + "classical R1: definition != closed specialization");
  }

  // R1 via the opposite-meet variant.
  {
    const std::size_t n = s.carrier->size();
    std::vector<BVal> m(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        m[x * n + y] = meet(spec.at(x, y), spec.at(y, x));
    std::vector<bool> tcut(n * n), fcut(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
      tcut[i] = has_tt(m[i]);
      fcut[i] = has_ff(m[i]);
    }
    const bool sym_closed =
        cut_closed_in_square(s.tt, tcut) && cut_closed_in_square(s.ff, fcut);
    expect(bad, r[Axiom::R1] == sym_closed,
           tag + "R1 != closedness of the symmetrized order");
  }

  // R1 via a materialized product space (small carriers only).
  if (s.carrier->size() * s.carrier->size() <= 16) {
    const BSpace sq = product(s, s);
    const std::size_t n = s.carrier->size();
    Mask t = 0, f = 0;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (has_tt(spec.at(x, y))) t |= mask_bit(x * n + y);
        if (has_ff(spec.at(x, y))) f |= mask_bit(x * n + y);
      }
    expect(bad, r[Axiom::R1] == is_bclosed(sq, BSet(sq.carrier, t, f)),
           tag + "R1 != closedness in the materialized product");
  }

  // R0 via the closure-containment inequality.
  {
    bool ok = true;
    for (std::size_t x = 0; x < s.carrier->size() && ok; ++x) {
      const BSet cl = closure(s, BSet::point(s.carrier, x));
      for (const BSet& lam : all_bopens(s))
        if (!leq(lam.value_at(x), sub(cl, lam))) {
          ok = false;
          break;
        }
    }
    expect(bad, r[Axiom::R0] == ok,
           tag + "R0 != open-contains-point-closure criterion");
  }

  // Reflection characterizations.
  {
    const AxiomReport q = classify(t0_reflection(s).space);
    expect(bad, q[Axiom::T0], tag + "T0-reflection is not T0");
    expect(bad, r[Axiom::R0] == q[Axiom::T1],
           tag + "R0 != T1 of the T0-reflection");
    expect(bad, r[Axiom::R1] == q[Axiom::Hausdorff],
           tag + "R1 != Hausdorff of the T0-reflection");
  }

  // Pairwise Hausdorff = closed diagonal in the mixed product.
  {
    const std::size_t n = s.carrier->size();
    bool diag_closed = true;
    for (std::size_t z = 0; z < n && diag_closed; ++z) {
      const Mask dtt = s.tt.closure(mask_bit(z));
      const Mask dff = s.ff.closure(mask_bit(z));
      for (std::size_t a = 0; a < n && diag_closed; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (mask_test(dtt, a) && mask_test(dff, b) && a != b) {
            diag_closed = false;
            break;
          }
    }
    expect(bad, r[Axiom::PairwiseHausdorff] == diag_closed,
           tag + "pairwiseHausdorff != closed diagonal in the mixed product");
  }

  return bad;
}

}  // namespace bitopo
