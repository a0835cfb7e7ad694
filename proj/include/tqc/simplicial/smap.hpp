#pragma once

#include <vector>

#include "tqc/simplicial/sset.hpp"

namespace tqc {

/// A simplicial map, given by the image of every nondegenerate generator of
/// the source. Face compatibility is checked on construction; compatibility
/// with degeneracies is automatic in normal form.
class SMap {
 public:
  /// assignment[d][i] is the image of generator (d, i).
  using Assignment = std::vector<std::vector<SimplexExpr>>;

  SMap(SSetPtr source, SSetPtr target, Assignment assignment);

  static SMap identity(SSetPtr x);

  const SSet& source() const { return *source_; }
  const SSet& target() const { return *target_; }
  const SSetPtr& source_ptr() const { return source_; }
  const SSetPtr& target_ptr() const { return target_; }
  const Assignment& assignment() const { return assignment_; }

  const SimplexExpr& operator()(GenRef g) const;
  SimplexExpr operator()(const SimplexExpr& x) const;

  /// Injective on all simplices: generators go to distinct nondegenerate
  /// generators.
  bool is_mono() const;

 private:
  SSetPtr source_;
  SSetPtr target_;
  Assignment assignment_;
};

/// g o f. Throws RangeError if f's target is not g's source.
SMap compose(const SMap& g, const SMap& f);

}  // namespace tqc
