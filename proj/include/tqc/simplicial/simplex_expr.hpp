#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace tqc {

/// Reference to a nondegenerate generator: its dimension and its position
/// among the generators of that dimension.
struct GenRef {
  int dim = -1;
  int index = -1;

  auto operator<=>(const GenRef&) const = default;
};

/// Monotone map [source] -> [target] of finite ordinals, stored as the list
/// of images of 0..source.
using Monotone = std::vector<int>;

/// A simplex s_{i1} s_{i2} ... s_{ir} g in Eilenberg-Zilber normal form,
/// i1 > i2 > ... > ir. The index set equals the set of positions t where the
/// associated surjection repeats (t and t+1 have the same image).
class SimplexExpr {
 public:
  SimplexExpr() = default;
  explicit SimplexExpr(GenRef gen) : gen_(gen) {}
  /// Throws RangeError unless the word is strictly decreasing and every index
  /// is valid at its point of application.
  SimplexExpr(GenRef gen, std::vector<int> degeneracies);

  /// `surjection` must be a monotone surjection [k] ->> [gen.dim].
  static SimplexExpr from_surjection(GenRef gen, std::span<const int> surjection);

  GenRef gen() const { return gen_; }
  const std::vector<int>& degeneracies() const { return degens_; }
  int dim() const { return gen_.dim + static_cast<int>(degens_.size()); }
  bool is_degenerate() const { return !degens_.empty(); }

  /// The surjection [dim()] ->> [gen().dim] encoded by the degeneracy word.
  Monotone surjection() const;

  auto operator<=>(const SimplexExpr&) const = default;

 private:
  GenRef gen_;
  std::vector<int> degens_;
};

// Helpers on monotone maps; shared by the simplicial machinery.
namespace monotone {

Monotone identity(int n);
/// delta_i : [n-1] -> [n], skipping i.
Monotone coface(int n, int i);
/// sigma_i : [n+1] -> [n], hitting i twice.
Monotone codegeneracy(int n, int i);
/// (g o f)(t) = g[f[t]].
Monotone compose(const Monotone& g, const Monotone& f);
bool is_monotone(std::span<const int> f, int target);

/// Epi-mono factorisation f = mono o epi.
struct Factorisation {
  Monotone epi;
  Monotone mono;
};
Factorisation factor(std::span<const int> f);

}  // namespace monotone

}  // namespace tqc
