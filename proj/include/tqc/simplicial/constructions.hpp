#pragma once

#include <optional>

#include "tqc/simplicial/smap.hpp"
#include "tqc/simplicial/sset.hpp"

namespace tqc {

/// Generators of dimension <= top, marked as truncated at top.
SSetPtr truncate(const SSetPtr& a, int top);

struct Product {
  SSetPtr object;
  SMap pr1;
  SMap pr2;
};
/// A x B. Truncated inputs give a product truncated at the smaller window.
Product product(const SSetPtr& a, const SSetPtr& b);
/// The map Z -> A x B with components h1 and h2.
SMap pairing(const SMap& h1, const SMap& h2, const Product& target);

struct Pushout {
  SSetPtr object;
  SMap leg_b;
  SMap leg_c;
};
/// B +_A C for f : A -> B and g : A -> C, as a degreewise quotient.
Pushout pushout(const SMap& f, const SMap& g);
/// The map out of the pushout induced by u : B -> Z and v : C -> Z.
SMap induced(const Pushout& p, const SMap& u, const SMap& v);

struct Inclusion {
  SSetPtr object;
  SMap inclusion;
};
/// sk_n A with its inclusion; n >= -1.
Inclusion skeleton(const SSetPtr& a, int n);

struct Coskeleton {
  SSetPtr object;
  SMap unit;
};
/// cosk_n A, truncated at `bound`. Degree m > n holds the maps
/// sk_n Delta^m -> A. The unit needs bound >= dim A.
Coskeleton coskeleton(const SSetPtr& a, int n, int bound);

struct Join {
  SSetPtr object;
  SMap left;
  SMap right;
};
/// A * B for finite inputs.
Join join(const SSetPtr& a, const SSetPtr& b);
/// f * g : A * B -> A' * B', between joins previously built by join().
SMap join_maps(const SMap& f, const SMap& g, const Join& source, const Join& target);

struct Slice {
  SSetPtr object;
  SMap projection;
};
/// X/x: degree k holds the (k+1)-simplices of X ending at x; the projection
/// drops the last vertex.
Slice slice(const SSetPtr& x, GenRef vertex);

/// Unreduced suspension with cone points named "bot" and "top".
SSetPtr suspension(const SSetPtr& u);

/// Returns an isomorphism A -> B if one exists. Throws PreconditionError
/// when the truncation windows differ.
std::optional<SMap> is_isomorphic(const SSetPtr& a, const SSetPtr& b);

/// Whether two monomorphisms are isomorphic as arrows: some isomorphism of
/// targets carries the image of f onto the image of g.
bool is_isomorphic_mono(const SMap& f, const SMap& g);

/// Whether f_k is a bijection on all k-simplices for 0 <= k <= n.
bool is_n_bijective(const SMap& f, int n);

}  // namespace tqc
