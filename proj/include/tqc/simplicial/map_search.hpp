#pragma once

#include <functional>
#include <vector>

#include "tqc/simplicial/sset.hpp"
#include "tqc/simplicial/table.hpp"

namespace tqc {

/// Per-generator table ids, indexed [dim][index] like SMap::Assignment.
using IdAssignment = std::vector<std::vector<int>>;

/// Constraints for a search over simplicial maps source -> target.
struct MapSearch {
  const SSet* source = nullptr;
  const SimplexTable* target = nullptr;
  /// fixed[d][i] >= 0 pins generator (d, i); empty means nothing pinned.
  IdAssignment fixed;
  /// When set, every image must lie over over[d][i] along this map.
  const TableMap* projection = nullptr;
  IdAssignment over;
};

/// Backtracking over the source generators, each placed after its faces.
/// Candidates for a generator are the target simplices with the already
/// determined face tuple. The visiting order is deterministic but not
/// lexicographic; callers that promise an order sort afterwards.
/// visit returns false to stop early. Returns the number of solutions seen.
std::size_t search_maps(const MapSearch& s, const std::function<bool(const IdAssignment&)>& visit);

/// Evaluates a source simplex under an id assignment.
int evaluate(const SimplexTable& target, const IdAssignment& a, const SimplexExpr& x);

/// The SMap read off an id assignment into a table carrying expressions.
SMap assignment_to_smap(SSetPtr source, SSetPtr target,
                        const std::vector<std::vector<SimplexExpr>>& tgt_exprs,
                        const IdAssignment& a);

}  // namespace tqc
