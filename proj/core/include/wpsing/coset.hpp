#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wpsing/fpgroup.hpp"

namespace wpsing {

// Closed coset table: one row per coset (0 = the subgroup itself), columns
// alternate generator / inverse as in Word::letters().
struct CosetTable {
  int ngens = 0;
  std::vector<std::vector<int>> rows;

  std::size_t index() const { return rows.size(); }
  int act(std::size_t coset, int column) const { return rows[coset][static_cast<std::size_t>(column)]; }
};

struct EnumerationResult {
  bool finished = false;
  std::size_t index = 0;        // subgroup index when finished
  std::size_t cosets_defined = 0;
  std::optional<CosetTable> table;
};

// HLT coset enumeration with a deterministic definition order. Running out
// of the coset budget is a normal outcome, not an error.
EnumerationResult todd_coxeter(const GroupPresentation& p, const std::vector<Word>& subgroup_gens,
                               std::size_t max_cosets);

// Column scan order used to grow the Schreier transversal; either choice
// yields a valid spanning tree.
enum class TransversalStyle { forward, reverse };

// Presentation of the subgroup realized by a closed coset table, on its
// Schreier generators.
GroupPresentation reidemeister_schreier(const GroupPresentation& p, const CosetTable& table,
                                        TransversalStyle style = TransversalStyle::forward);

}  // namespace wpsing
