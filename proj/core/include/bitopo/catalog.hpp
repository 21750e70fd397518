#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bitopo/separation.hpp"
#include "bitopo/space.hpp"

namespace bitopo {

/// Named example spaces with the facts expected of them; every expectation
/// is re-verified by the test suite, the catalog itself only records them.
struct CatalogEntry {
  std::string name;
  BSpace space;
  std::vector<std::pair<Axiom, bool>> expected_axioms;
  std::optional<bool> expected_b_sober;
  std::optional<bool> expected_d_sober;
  std::string provenance;
};

/// SIERP, T4X3, PNORM3, DOT22, CHAIN2, in this order.
const std::vector<CatalogEntry>& catalog();

const CatalogEntry* catalog_find(std::string_view name);

}  // namespace bitopo
