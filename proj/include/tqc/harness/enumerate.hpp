#pragma once

#include <string>
#include <vector>

#include "tqc/category/fincat.hpp"
#include "tqc/simplicial/sset.hpp"

namespace tqc {

/// A simplicial subset of Delta^n, given by its nondegenerate simplices as
/// vertex-set bitmasks.
struct Subcomplex {
  int n = 0;
  /// Ascending; closed under nonempty subsets.
  std::vector<unsigned> faces;
  SSetPtr object;

  /// e.g. "{0,1,01}".
  std::string name() const;
};

/// Every nonempty simplicial subset of Delta^n, ordered by number of
/// simplices and then by face list. Throws RangeError unless 0 <= n <= 3.
std::vector<Subcomplex> enumerate_subcomplexes(int n);

/// One poset per isomorphism class on 1..max_size elements, named "a", "b",
/// ... and ordered by size. Throws RangeError unless 1 <= max_size <= 4.
std::vector<FinPoset> enumerate_posets(int max_size);

}  // namespace tqc
