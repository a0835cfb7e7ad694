#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tqc/simplicial/smap.hpp"
#include "tqc/simplicial/sset.hpp"

namespace tqc {

/// All simplices of a simplicial set in degrees 0..top(), degenerate ones
/// included, with face and degeneracy operators as index arrays. This is the
/// working form for searches; SSet stays the presentation form.
///
/// Degeneracies are stored for levels below top() only.
class SimplexTable {
 public:
  struct Level {
    /// faces[id] holds d_0..d_k as ids of level k-1 (empty at level 0).
    std::vector<std::vector<int>> faces;
    /// degens[id] holds s_0..s_k as ids of level k+1 (empty at the top).
    std::vector<std::vector<int>> degens;
    /// Names for nondegenerate elements; may be left empty.
    std::vector<std::string> names;
  };

  SimplexTable() = default;
  /// Raw construction; builds the lookup indexes. Call check_identities()
  /// when the operator data is not trusted.
  explicit SimplexTable(std::vector<Level> levels);

  /// Every simplex of x in degrees 0..top. Throws WindowError when x does
  /// not know its top-dimensional simplices.
  static SimplexTable from_sset(const SSet& x, int top);

  int top() const { return static_cast<int>(levels_.size()) - 1; }
  std::size_t size(int k) const;

  int face(int k, int id, int i) const {
    return levels_[static_cast<std::size_t>(k)].faces[static_cast<std::size_t>(id)]
                  [static_cast<std::size_t>(i)];
  }
  int degen(int k, int id, int i) const {
    return levels_[static_cast<std::size_t>(k)].degens[static_cast<std::size_t>(id)]
                  [static_cast<std::size_t>(i)];
  }
  std::span<const int> faces(int k, int id) const {
    return levels_[static_cast<std::size_t>(k)].faces[static_cast<std::size_t>(id)];
  }
  /// theta^* of simplex (k, id), theta : [k'] -> [k] monotone with k' <= top.
  int apply(int k, int id, std::span<const int> theta) const;
  int vertex(int k, int id, int j) const;
  /// Applies a normal-form degeneracy word (rightmost first) to (k, id).
  int degenerate(int k, int id, std::span<const int> word) const;

  /// Elements of level k whose face tuple is exactly `faces`, ascending.
  /// At level 0 this is every vertex.
  std::span<const int> with_faces(int k, std::span<const int> faces) const;
  bool is_degenerate(int k, int id) const {
    return degenerate_[static_cast<std::size_t>(k)][static_cast<std::size_t>(id)] != 0;
  }

  /// Tables built by from_sset remember the normal form of each element.
  bool has_exprs() const { return !exprs_.empty(); }
  const SimplexExpr& expr(int k, int id) const {
    return exprs_[static_cast<std::size_t>(k)][static_cast<std::size_t>(id)];
  }
  const std::vector<std::vector<SimplexExpr>>& exprs() const { return exprs_; }
  int id_of(const SimplexExpr& x) const;
  /// Table id of every generator of x; the table must come from x.
  std::vector<std::vector<int>> generator_ids(const SSet& x) const;

  struct Extracted {
    SSet sset;
    /// exprs[k][id]: normal form in `sset` of element (k, id).
    std::vector<std::vector<SimplexExpr>> exprs;
    /// generator_ids[d][i]: table id of generator (d, i).
    std::vector<std::vector<int>> generator_ids;
  };
  /// The generator presentation: nondegenerate elements become generators,
  /// in level and id order.
  Extracted extract(std::optional<int> truncated_at) const;

  /// Simplicial identities on the whole table; throws InvariantError.
  void check_identities() const;

 private:
  void index();

  std::vector<Level> levels_;
  std::vector<std::vector<char>> degenerate_;
  std::vector<std::map<std::vector<int>, std::vector<int>>> by_faces_;
  std::vector<std::vector<SimplexExpr>> exprs_;
  std::vector<std::map<SimplexExpr, int>> expr_ids_;
};

/// A degreewise map between tables, levels 0..top of the source.
using TableMap = std::vector<std::vector<int>>;

/// f on every simplex up to the common top; both tables must come from
/// from_sset on f's endpoints.
TableMap table_map(const SMap& f, const SimplexTable& src, const SimplexTable& tgt);

/// Reads a table map off as an SMap. gen_ids[d][i] locates each source
/// generator in the source table; tgt_exprs gives the normal form in
/// `target` of each target table element.
SMap to_smap(SSetPtr source, const std::vector<std::vector<int>>& gen_ids, SSetPtr target,
             const std::vector<std::vector<SimplexExpr>>& tgt_exprs, const TableMap& f);

}  // namespace tqc
