#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "bitopo/order.hpp"
#include "bitopo/space.hpp"

namespace bitopo {

enum class Axiom : std::size_t {
  T0,
  R0,
  T1,
  R1,
  Hausdorff,
  Regular,
  T3,
  Normal,
  T4,
  JoinT0,
  JoinT1,
  CwT0,
  CwT1,
  CwR0,
  CwR1,
  CwRegular,
  CwNormal,
  PairwiseHausdorff,
  PairwiseHausdorffWeak,
  OrderSeparated,
  PairwiseRegular,
  PairwiseNormal,
  Compact,
};

inline constexpr std::size_t kAxiomCount = 23;

/// Stable report key for each axiom ("T0", "cwR1", "pairwiseHausdorff", ...).
std::string_view axiom_name(Axiom a);
std::vector<Axiom> all_axioms();

struct AxiomReport {
  std::string space;
  std::array<bool, kAxiomCount> value{};

  bool operator[](Axiom a) const { return value[static_cast<std::size_t>(a)]; }
  bool& operator[](Axiom a) { return value[static_cast<std::size_t>(a)]; }
  /// "axiom = true|false" lines in fixed key order.
  std::string render_kv() const;
};

enum class ClassicalAxiom { T0, T1, R0, R1, Regular, Normal, Sober, Compact };

/// Textbook deciders on a finite topology. Compact is constantly true on a
/// finite carrier (see classical_compact_note).
bool classical_axiom(const FinTopology& t, ClassicalAxiom a);
std::string_view classical_compact_note();

/// Single-axiom decider; the primary, B-valued definitions throughout.
bool check(const BSpace& s, Axiom a);

/// Full report from the primary definitions (shared work computed once).
AxiomReport classify(const BSpace& s);

/// Full report from the proven componentwise / classical characterizations;
/// cheaper, used by large searches. Disagreement with classify is a defect.
AxiomReport classify_fast(const BSpace& s);

/// Runs every dual-path axiom characterization and reports disagreements
/// (empty = all agree).
std::vector<std::string> separation_cross_checks(const BSpace& s);

struct T0Reflection {
  BSpace space;
  std::vector<std::size_t> projection;
};

/// Quotient by the intersection of the two component Kolmogorov
/// equivalences; the result is T0 and the projection is continuous.
T0Reflection t0_reflection(const BSpace& s);

/// Checks the implication diagram (10 edges, 5 componentwise equivalences,
/// T1 -> joinT1) on a batch of reports; returns violating edges.
std::vector<std::string> audit_implications(std::span<const AxiomReport> reports);

}  // namespace bitopo
