#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bitopo/separation.hpp"
#include "bitopo/space.hpp"

namespace bitopo {

/// One atom of a --find expression: an axiom key or one of the sobriety
/// keys (b_sober, d_sober, join_sober, b_sober-discrepancy), optionally
/// negated.
struct FindAtom {
  std::string key;
  bool negated = false;
};

/// Conjunctions of possibly negated atoms: "T1 & !cwT0".
std::vector<FindAtom> parse_find_expr(const std::string& expr);

struct SearchOptions {
  std::size_t points = 3;              // enumerate spaces on exactly N points
  bool check_implications = false;     // audit the implication diagram
  bool dual_path = false;              // run every dual-path oracle as well
  bool sobriety_chain = false;         // audit b-sober => d-sober => join sober
  std::optional<std::vector<FindAtom>> find;  // stop criteria for witnesses
  std::size_t max_witnesses = 1;
  std::size_t threads = 0;             // 0 = hardware concurrency
};

struct SearchResult {
  std::size_t spaces = 0;
  std::vector<std::string> implication_violations;
  std::vector<std::string> oracle_disagreements;
  std::vector<std::string> sobriety_violations;
  /// Matching spaces, rendered in the space file format, in enumeration
  /// order (first-component preorder index major).
  std::vector<std::string> witnesses;
  std::size_t matches = 0;
};

/// Enumerates all bitopological spaces on `points` labeled points as pairs
/// of topologies (via the preorder bijection) and applies the requested
/// audits. Deterministic: partitions by the first component's index and
/// merges in order. Throws BoundError for points > 4.
SearchResult run_search(const SearchOptions& options);

/// Every dual-path cross-check on one space: specialization via closures vs
/// via subbasis, B-valued vs componentwise axiom deciders, irreducible
/// closed sets via the definition vs via component pairs, B-points via
/// filter pairs vs brute force, literal vs componentwise compactness, and
/// the sobriety chain. Returns disagreement descriptions (empty = agree).
std::vector<std::string> oracle_checks(const BSpace& s);

/// Names of the oracle check groups, for reporting.
std::vector<std::pair<std::string, std::vector<std::string>>> oracle_report(
    const BSpace& s);

}  // namespace bitopo
