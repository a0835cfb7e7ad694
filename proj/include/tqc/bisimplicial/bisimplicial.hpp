#pragma once

#include <string>
#include <vector>

#include "tqc/category/fincat.hpp"
#include "tqc/simplicial/sset.hpp"
#include "tqc/simplicial/table.hpp"

namespace tqc {

/// A bisimplicial set known on the window p <= P, q <= Q. p is the
/// horizontal (row) degree and q the vertical (column) degree.
class TruncBiSSet {
 public:
  struct Cells {
    std::vector<std::string> names;
    /// hfaces[id] holds d_0..d_p into (p-1, q); empty when p = 0.
    std::vector<std::vector<int>> hfaces;
    /// hdegens[id] holds s_0..s_p into (p+1, q); empty when p = P.
    std::vector<std::vector<int>> hdegens;
    std::vector<std::vector<int>> vfaces;
    std::vector<std::vector<int>> vdegens;
  };

  /// cells[p][q]. Validates both directions and their commutation; throws
  /// InvariantError.
  TruncBiSSet(int p_max, int q_max, std::vector<std::vector<Cells>> cells);

  int P() const { return p_max_; }
  int Q() const { return q_max_; }
  const Cells& cells(int p, int q) const;
  std::size_t size(int p, int q) const { return cells(p, q).names.size(); }
  int hface(int p, int q, int id, int i) const;
  int hdegen(int p, int q, int id, int i) const;
  int vface(int p, int q, int id, int j) const;
  int vdegen(int p, int q, int id, int j) const;

  /// Row q as a table in degrees 0..P.
  SimplexTable row(int q) const;
  /// Column p as a table in degrees 0..Q.
  SimplexTable column_table(int p) const;

 private:
  void validate() const;

  int p_max_;
  int q_max_;
  std::vector<std::vector<Cells>> cells_;
};

/// Functors [p] x I[q] -> A, with I[q] the free groupoid on [q], for
/// p <= P and q <= Q. A cell is a chain of p morphisms in row 0 together
/// with a chain of q isomorphisms down each of its p + 1 columns.
TruncBiSSet classifying_diagram(const FinCat& a, int p_max, int q_max);

/// p -> B_{p,0}, truncated at P.
SSet zeroth_row(const TruncBiSSet& b);

/// Column p as a simplicial set truncated at Q.
SSet column(const TruncBiSSet& b, int p);

/// (p1* A)_{p,q} = A_p with identity vertical operators. Throws WindowError
/// when A is truncated below P.
TruncBiSSet constant_row(const SSet& a, int p_max, int q_max);

/// Vertical simplicial set of (1, q)-cells whose endpoint columns are
/// constant at x and at y, truncated at Q. Throws RangeError for unknown
/// objects and WindowError when P < 1.
SSet segal_hom_space(const TruncBiSSet& b, int x, int y);

/// Whether zeroth_row(classifying_diagram(A, P, 0)) is isomorphic to the
/// nerve of A through degree P.
bool verify_row_identity(const FinCatPtr& a, int p_max);

}  // namespace tqc
