#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tqc/simplicial/simplex_expr.hpp"

namespace tqc {

/// Window value reported by simplicial sets that carry no truncation.
inline constexpr int kUnbounded = std::numeric_limits<int>::max();

struct Generator {
  std::string name;
  /// d_0 .. d_dim; empty for vertices.
  std::vector<SimplexExpr> faces;
};

/// One step of a face/degeneracy word.
struct FaceDegenOp {
  enum class Kind { face, degeneracy };
  Kind kind;
  int index;
};

/// A finite simplicial set presented by its nondegenerate generators, each
/// generator of positive dimension carrying its faces in normal form.
/// Degenerate simplices are implicit.
///
/// An optional truncation marks a dimension above which data is absent on
/// purpose (coskeleta, nerves of categories with cycles); everything up to
/// and including that dimension is exact.
class SSet {
 public:
  class Builder {
   public:
    GenRef add(std::string name, int dim, std::vector<SimplexExpr> faces);
    GenRef add_vertex(std::string name) { return add(std::move(name), 0, {}); }
    /// Validates the generator data and the simplicial identities.
    SSet build(std::optional<int> truncated_at = std::nullopt) &&;

   private:
    std::vector<std::vector<Generator>> gens_;
  };

  SSet() = default;

  /// Largest dimension holding a generator, -1 when empty.
  int dim() const { return static_cast<int>(gens_.size()) - 1; }
  bool empty() const { return gens_.empty(); }
  std::optional<int> truncated_at() const { return truncated_at_; }
  bool is_exact() const { return !truncated_at_.has_value(); }
  /// Highest dimension whose simplices are completely known.
  int window() const { return truncated_at_ ? *truncated_at_ : kUnbounded; }

  std::span<const Generator> generators(int d) const;
  std::size_t num_generators(int d) const;
  /// Number of nondegenerate simplices in each dimension 0..dim().
  std::vector<std::size_t> counts() const;
  std::size_t total_generators() const;

  const Generator& generator(GenRef g) const;
  const std::string& name(GenRef g) const { return generator(g).name; }
  std::optional<GenRef> find(std::string_view name) const;

  /// theta^*(x) for a monotone theta : [k'] -> [x.dim()].
  SimplexExpr apply(const SimplexExpr& x, std::span<const int> theta) const;
  SimplexExpr face(const SimplexExpr& x, int i) const;
  SimplexExpr degeneracy(const SimplexExpr& x, int i) const;
  /// Evaluates a word written in composition order (the rightmost operator
  /// acts first) on a generator and returns the normal form.
  SimplexExpr normalize(std::span<const FaceDegenOp> word, GenRef g) const;

  /// Vertex generators of x, in order.
  std::vector<GenRef> vertices(const SimplexExpr& x) const;
  GenRef vertex(const SimplexExpr& x, int j) const;
  /// Human readable form, e.g. "s1s0(v)".
  std::string describe(const SimplexExpr& x) const;

  /// Throws InvariantError naming the first offending generator.
  void validate() const;

 private:
  std::vector<std::vector<Generator>> gens_;
  std::optional<int> truncated_at_;
  std::unordered_map<std::string, GenRef> by_name_;
};

using SSetPtr = std::shared_ptr<const SSet>;

inline SSetPtr share(SSet s) { return std::make_shared<const SSet>(std::move(s)); }

}  // namespace tqc
