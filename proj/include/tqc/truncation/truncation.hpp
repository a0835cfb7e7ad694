#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tqc/lifting/lifting.hpp"
#include "tqc/simplicial/smap.hpp"
#include "tqc/simplicial/sset.hpp"

namespace tqc {

/// Hom^R_X(x, y): degree k holds the (k+1)-simplices of X ending at y whose
/// last face is the k-fold degenerate simplex on x. Truncated at window - 1
/// when X is truncated. Generators are named by the simplex of X they come
/// from.
SSetPtr right_hom_space(const SSetPtr& x, GenRef from, GenRef to);

/// Connected components as vertex index lists, ordered by smallest member.
std::vector<std::vector<int>> pi0(const SSet& a);

struct Letter {
  int gen;
  int exp;  // +1 or -1
  auto operator<=>(const Letter&) const = default;
};
using Word = std::vector<Letter>;

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  /// Rank over Q of the abelianised relator matrix.
  int relator_rank() const;
  /// "<a, b | a.b.a^-1>".
  std::string to_string() const;
};

/// Edge-path presentation of pi_1(A, base) from a spanning tree of the
/// 1-skeleton, simplified by free reduction and eliminating generators that
/// occur exactly once in some relator. Throws RangeError when base is not a
/// vertex and PreconditionError when A is disconnected.
GroupPresentation pi1_presentation(const SSet& a, GenRef base);

enum class TruncationMethod { lifting, coskeleton };
std::string to_string(TruncationMethod m);

struct TruncationVerdict {
  bool value = true;
  TruncationMethod method = TruncationMethod::lifting;
  int verified_up_to = -1;
  std::optional<RlpWitness> witness;
  explicit operator bool() const { return value; }
};

struct CheckOptions {
  /// Runs the quasi-category (or Kan) precondition check first.
  bool verify = true;
};

/// Whether the quasi-category X is n-truncated, checked through dimension
/// `bound`. Throws PreconditionError when bound < n + 2 or X fails the
/// quasi-category check, WindowError when bound exceeds the window.
TruncationVerdict is_n_truncated(const SSetPtr& x, int n, int bound, TruncationMethod method,
                                 CheckOptions opts = {});

/// Whether the Kan complex K is an n-type (n >= -2) through `bound`.
RlpVerdict is_n_type(const SSetPtr& k, int n, int bound, CheckOptions opts = {});

/// Homotopy m-equivalence for m in {-2, -1, 0} between Kan complexes.
bool homotopy_m_equivalence(const SMap& f, int m, int bound, CheckOptions opts = {});

struct CategoricalVerdict {
  bool value = false;
  bool essentially_surjective = false;
  std::string diagnostic;
  explicit operator bool() const { return value; }
};

/// Categorical n-equivalence for n in {0, 1} between quasi-categories.
CategoricalVerdict categorical_n_equivalence(const SMap& f, int n, int bound, CheckOptions opts = {});

}  // namespace tqc
