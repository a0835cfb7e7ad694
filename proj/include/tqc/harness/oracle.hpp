#pragma once

#include <optional>
#include <vector>

#include "tqc/lifting/lifting.hpp"
#include "tqc/simplicial/smap.hpp"
#include "tqc/simplicial/sset.hpp"

// Brute-force references for the engines. Nothing here calls the lifting
// search, the map search or the pushout construction.
namespace tqc::oracle {

/// An ordered simplicial complex on vertices 0..n, listed by its simplices
/// as vertex bitmasks. Subcomplexes of standard simplices, boundaries and
/// horns are all of this form.
struct FaceComplex {
  int n = 0;
  std::vector<unsigned> faces;
  bool contains(unsigned face) const;
};

FaceComplex simplex_faces(int m);
/// Empty for m = 0.
FaceComplex boundary_faces(int m);
FaceComplex horn_faces(int m, int k);

/// Every map K -> X as a vertex function (entries -1 off the vertices of
/// K): monotone on each simplex of K, with each image spanning a face of X.
std::vector<std::vector<int>> maps(const FaceComplex& k, const FaceComplex& x);

struct Verdict {
  bool holds = true;
  /// Squares K -> X examined, over all K of the family at dimension m.
  std::size_t squares = 0;
  /// First square with no diagonal: horn index (-1 for a boundary) and map.
  std::optional<std::pair<int, std::vector<int>>> witness;
};

/// Lifting of X -> Delta^0 against the family at dimension m, by trying
/// every candidate diagonal Delta^m -> X on every square.
Verdict rlp(const FaceComplex& x, Family family, int m);

/// Nonempty down-closed sets of faces of Delta^n, by filtering the powerset
/// of faces. Each set is sorted ascending.
std::vector<std::vector<unsigned>> subcomplexes(int n);

/// Number of simplices, degenerate ones included, of B +_A C in degrees
/// 0..top, counted as classes of B_k + C_k under f(a) ~ g(a).
std::vector<std::size_t> pushout_counts(const SMap& f, const SMap& g, int top);

struct Pullback {
  SSetPtr object;
  SMap pr1;
  SMap pr2;
};
/// X x_Z Y for f : X -> Z and g : Y -> Z through degree top, as pairs of
/// simplices with equal image. Always reported truncated at top.
Pullback pullback(const SMap& f, const SMap& g, int top);

}  // namespace tqc::oracle
