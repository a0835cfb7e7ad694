#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tqc/category/fincat.hpp"
#include "tqc/simplicial/constructions.hpp"
#include "tqc/simplicial/smap.hpp"
#include "tqc/simplicial/sset.hpp"

namespace tqc {

struct Nerve {
  SSetPtr object;
  FinCatPtr category;
  /// Generator of each chain of nonidentity morphisms (first arrow first).
  std::map<std::vector<int>, GenRef> chains;

  /// The simplex x0 -> ... given by a composable chain that may contain
  /// identities. An empty chain is the vertex `start`.
  SimplexExpr simplex(int start, const std::vector<int>& chain) const;
};

/// NC. Exact when every chain of nonidentity morphisms has length <= bound;
/// otherwise truncated at bound. Chain generators are named "f;g;...".
Nerve nerve(FinCatPtr c, int bound);

/// Some isomorphism of categories C -> D, if any.
std::optional<CatFunctor> find_isomorphism(const FinCatPtr& c, const FinCatPtr& d);

struct HomotopyCategory {
  FinCatPtr category;
  /// Morphism class of every 1-simplex of X, degenerate ones included.
  std::map<SimplexExpr, int> edge_class;

  int operator()(const SimplexExpr& edge) const;
};

struct HoOptions {
  /// Runs the quasi-category check first and throws PreconditionError on
  /// failure.
  bool verify = true;
  /// Picks the largest representatives and the last filler instead of the
  /// first ones.
  bool reverse = false;
};

/// ho X for a quasi-category X: objects are vertices, morphisms are
/// homotopy classes of edges, composition goes through 2-simplices.
/// Throws WindowError when X is truncated below 2 and PreconditionError when
/// a composite has no filler.
HomotopyCategory homotopy_category(const SSetPtr& x, int bound, HoOptions opts = {});

/// The unit X -> N(ho X).
SMap unit_to_nerve(const SSetPtr& x, const HomotopyCategory& ho, const Nerve& n);

/// ho(f) for f : X -> Y.
CatFunctor ho_functor(const SMap& f, const HomotopyCategory& hx, const HomotopyCategory& hy);

bool is_isomorphism_edge(const SSetPtr& x, const SimplexExpr& edge, int bound);

/// J(X): generators all of whose edges are isomorphisms in ho X.
Inclusion maximal_kan(const SSetPtr& x, int bound);

/// Reachability in the directed 1-skeleton, quotiented by mutual
/// reachability.
FinPoset poset_reflection(const SSet& a);
/// Element of poset_reflection(a) containing each vertex.
std::vector<int> poset_classes(const SSet& a);

}  // namespace tqc
