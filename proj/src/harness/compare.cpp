#include "tqc/harness/compare.hpp"

#include <map>

#include "tqc/category/nerve.hpp"

namespace tqc {

FinCat skeleton(const FinCat& c) {
  std::vector<int> keep;
  for (int x = 0; x < c.num_objects(); ++x) {
    bool fresh = true;
    for (int y : keep) {
      for (int f : c.hom(y, x)) fresh = fresh && !c.is_iso(f);
    }
    if (fresh) keep.push_back(x);
  }
  FinCat::Builder b;
  std::map<int, int> obj, mor;
  for (int x : keep) obj[x] = b.object(c.object_name(x));
  for (int x : keep) {
    for (int y : keep) {
      for (int f : c.hom(x, y)) mor[f] = b.morphism(c.morphism(f).name, obj[x], obj[y]);
    }
  }
  for (int x : keep) b.identity(obj[x], mor[c.identity(x)]);
  for (const auto& [f, nf] : mor) {
    for (const auto& [g, ng] : mor) {
      if (c.morphism(f).tgt != c.morphism(g).src || c.is_identity(f) || c.is_identity(g)) continue;
      b.compose(ng, nf, mor.at(c.compose(g, f)));
    }
  }
  return std::move(b).build();
}

bool equivalent_categories(const FinCat& c, const FinCat& d) {
  auto sc = std::make_shared<const FinCat>(skeleton(c));
  auto sd = std::make_shared<const FinCat>(skeleton(d));
  return find_isomorphism(sc, sd).has_value();
}

}  // namespace tqc
