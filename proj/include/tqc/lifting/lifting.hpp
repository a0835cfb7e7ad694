#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tqc/simplicial/smap.hpp"
#include "tqc/simplicial/sset.hpp"

namespace tqc {

/// A commutative square p o top = bottom o i, asking for a diagonal B -> X.
///
///     A --top--> X
///     |          |
///     i          p
///     v          v
///     B -bottom> Y
struct LiftingSquare {
  SMap i;
  SMap p;
  SMap top;
  SMap bottom;
};

/// Generating families of monomorphisms K -> Delta^m.
enum class Family { boundary, inner_horn, all_horn, right_horn };

enum class FibrationClass { inner, kan, right, trivial };

Family family_of(FibrationClass c);
std::string to_string(Family f);
std::string to_string(FibrationClass c);

/// max(dim + 2, n + 2): the bound used when a caller gives none.
int default_bound(int dim, int n);

/// All maps A -> X, sorted lexicographically by their generator images
/// (dimension, then index; images compared as normal forms).
std::vector<SMap> enumerate_maps(const SSetPtr& a, const SSetPtr& x);

/// A diagonal filler, or nullopt when none exists. Throws PreconditionError
/// on a square that does not commute or whose ends do not match.
std::optional<SMap> has_lift(const LiftingSquare& square);

struct RlpWitness {
  int m = 0;
  /// Horn index; -1 for a boundary inclusion.
  int k = -1;
  /// K -> X where K is the horn or boundary.
  SMap top;
  /// Delta^m -> Y, present when the target is a map.
  std::optional<SMap> bottom;
};

/// A bounded lifting verdict: true means every square in dimensions
/// lo..verified_up_to has a lift.
struct RlpVerdict {
  bool holds = true;
  int verified_up_to = -1;
  std::optional<RlpWitness> witness;
  explicit operator bool() const { return holds; }
};

/// Right lifting property of X -> Delta^0 (resp. of p) against the family in
/// dimensions lo..hi. The first failing square is minimal in m, then k, then
/// lexicographic in its top map.
RlpVerdict check_rlp(const SSetPtr& x, Family family, int lo, int hi);
RlpVerdict check_rlp(const SMap& p, Family family, int lo, int hi);

/// Inner horns, 2 <= m <= bound.
RlpVerdict is_quasi_category(const SSetPtr& x, int bound);
/// All horns, 1 <= m <= bound.
RlpVerdict is_kan(const SSetPtr& x, int bound);
/// Boundaries, n < m <= bound; throws PreconditionError when bound <= n.
RlpVerdict is_n_acyclic(const SSetPtr& x, int n, int bound);
/// The class's generating family, through the bound.
RlpVerdict is_fibration(const SMap& f, FibrationClass c, int bound);

/// Human readable witness, e.g. "horn(2,1): 0->a 1->b 2->c".
std::string describe(const RlpWitness& w);

}  // namespace tqc
