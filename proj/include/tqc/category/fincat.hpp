#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace tqc {

struct Morphism {
  std::string name;
  int src = 0;
  int tgt = 0;
};

/// A finite category given by its full composition table.
class FinCat {
 public:
  class Builder {
   public:
    int object(std::string name);
    int morphism(std::string name, int src, int tgt);
    void identity(int obj, int mor);
    /// Records g o f = gf. Composites with identities are implied.
    void compose(int g, int f, int gf);
    /// Validates typing, completeness of the table, unit laws and
    /// associativity; throws InvariantError.
    FinCat build() &&;

   private:
    std::vector<std::string> objects_;
    std::vector<Morphism> morphisms_;
    std::vector<int> identities_;
    std::vector<std::tuple<int, int, int>> table_;
  };

  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_morphisms() const { return static_cast<int>(morphisms_.size()); }
  const std::string& object_name(int x) const { return objects_.at(static_cast<std::size_t>(x)); }
  const Morphism& morphism(int f) const { return morphisms_.at(static_cast<std::size_t>(f)); }
  int identity(int x) const { return identities_.at(static_cast<std::size_t>(x)); }
  bool is_identity(int f) const;
  /// g o f; throws RangeError when tgt f != src g.
  int compose(int g, int f) const;
  std::optional<int> find_object(std::string_view name) const;
  std::optional<int> find_morphism(std::string_view name) const;
  /// Morphisms a -> b in index order.
  std::vector<int> hom(int a, int b) const;
  std::optional<int> inverse(int f) const;
  bool is_iso(int f) const { return inverse(f).has_value(); }

  void validate() const;

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<int> identities_;
  std::vector<std::vector<int>> comp_;  // comp_[g][f]
};

using FinCatPtr = std::shared_ptr<const FinCat>;

/// A finite partial order.
class FinPoset {
 public:
  /// leq pairs are closed reflexively; transitivity and antisymmetry are
  /// checked, not completed. Throws InvariantError.
  FinPoset(std::vector<std::string> elements, const std::vector<std::pair<int, int>>& leq);

  int size() const { return static_cast<int>(elements_.size()); }
  const std::string& name(int x) const { return elements_.at(static_cast<std::size_t>(x)); }
  bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  std::optional<int> find(std::string_view name) const;
  /// Pairs a <= b with a != b.
  std::vector<std::pair<int, int>> strict_pairs() const;

 private:
  std::vector<std::string> elements_;
  std::vector<std::vector<bool>> leq_;
};

/// Whether some bijection of elements preserves and reflects the order.
bool order_isomorphic(const FinPoset& p, const FinPoset& q);

/// A functor between finite categories.
class CatFunctor {
 public:
  /// Throws InvariantError unless identities, composition and typing are
  /// preserved.
  CatFunctor(FinCatPtr source, FinCatPtr target, std::vector<int> on_objects,
             std::vector<int> on_morphisms);

  static CatFunctor identity(FinCatPtr c);

  const FinCat& source() const { return *source_; }
  const FinCat& target() const { return *target_; }
  const FinCatPtr& source_ptr() const { return source_; }
  const FinCatPtr& target_ptr() const { return target_; }
  int object(int x) const { return objects_.at(static_cast<std::size_t>(x)); }
  int operator()(int f) const { return morphisms_.at(static_cast<std::size_t>(f)); }

 private:
  FinCatPtr source_;
  FinCatPtr target_;
  std::vector<int> objects_;
  std::vector<int> morphisms_;
};

CatFunctor compose(const CatFunctor& g, const CatFunctor& f);

bool is_fully_faithful(const CatFunctor& f);
bool is_essentially_surjective(const CatFunctor& f);
/// Fully faithful and essentially surjective.
bool is_equivalence(const CatFunctor& f);

/// Poset quotient of the preorder generated by `edges` on the named points.
/// Classes are ordered by their first member and named by their members
/// joined by '~'.
FinPoset preorder_reflection(const std::vector<std::string>& names,
                             const std::vector<std::pair<int, int>>& edges);

/// Class index of each point under the same quotient.
std::vector<int> preorder_classes(int n, const std::vector<std::pair<int, int>>& edges);

/// Preorder of a category (a <= b iff some morphism a -> b) quotiented by
/// mutual reachability. Elements are named by their members joined by '~'.
FinPoset poset_reflection(const FinCat& c);

/// The subcategory of isomorphisms.
FinCat core(const FinCat& c);

/// Small categories used throughout the checks.
namespace catalog {
/// The ordinal [n] = {0 < 1 < ... < n}.
FinCat chain(int n);
FinCat from_poset(const FinPoset& p);
/// Two objects x, y and two parallel arrows a, b : x -> y.
FinCat parallel_pair();
/// Two objects with an inverse pair f : x -> y, g : y -> x.
FinCat free_isomorphism();
/// Z/n as a one-object category.
FinCat cyclic_group(int n);
/// One morphism between any two objects.
FinCat codiscrete(const std::vector<std::string>& objects);
/// Objects x, y with f : x -> y and g : y -> x, neither inverse to the
/// other: gf and fg are idempotents and fgf = f, gfg = g.
FinCat opposite_arrows();
/// One object with an idempotent e.
FinCat idempotent();

struct Entry {
  std::string name;
  FinCatPtr category;
};
/// The fixed test corpus of twelve categories.
std::vector<Entry> corpus();
}  // namespace catalog

}  // namespace tqc
