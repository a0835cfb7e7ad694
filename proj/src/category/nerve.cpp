#include "tqc/category/nerve.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "tqc/error.hpp"
#include "tqc/lifting/lifting.hpp"
#include "tqc/simplicial/table.hpp"

namespace tqc {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

// Longest chain of nonidentity morphisms, or nullopt when chains are
// unbounded.
std::optional<int> longest_chain(const FinCat& c) {
  const int n = c.num_morphisms();
  std::vector<int> state(sz(n), 0), best(sz(n), 0);
  bool cyclic = false;
  std::function<void(int)> visit = [&](int f) {
    state[sz(f)] = 1;
    int len = 1;
    for (int g = 0; g < n && !cyclic; ++g) {
      if (c.is_identity(g) || c.morphism(g).src != c.morphism(f).tgt) continue;
      if (state[sz(g)] == 1) {
        cyclic = true;
        return;
      }
      if (state[sz(g)] == 0) visit(g);
      len = std::max(len, best[sz(g)] + 1);
    }
    best[sz(f)] = len;
    state[sz(f)] = 2;
  };
  int longest = 0;
  for (int f = 0; f < n && !cyclic; ++f) {
    if (c.is_identity(f)) continue;
    if (state[sz(f)] == 0) visit(f);
    longest = std::max(longest, best[sz(f)]);
  }
  if (cyclic) return std::nullopt;
  return longest;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[sz(a)] != a) a = parent[sz(a)] = parent[sz(parent[sz(a)])];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[sz(std::max(a, b))] = std::min(a, b);
  }
};

}  // namespace

SimplexExpr Nerve::simplex(int start, const std::vector<int>& chain) const {
  const FinCat& c = *category;
  std::vector<int> reduced;
  std::vector<int> surj{0};
  int at = start;
  for (int f : chain) {
    if (c.morphism(f).src != at) throw RangeError("chain is not composable");
    at = c.morphism(f).tgt;
    if (c.is_identity(f)) {
      surj.push_back(surj.back());
    } else {
      reduced.push_back(f);
      surj.push_back(surj.back() + 1);
    }
  }
  GenRef g{0, start};
  if (!reduced.empty()) {
    const auto it = chains.find(reduced);
    if (it == chains.end()) throw WindowError("chain is longer than the nerve window");
    g = it->second;
  }
  return SimplexExpr::from_surjection(g, surj);
}

Nerve nerve(FinCatPtr c, int bound) {
  if (bound < 0) throw RangeError("negative nerve bound");
  const FinCat& cat = *c;
  const auto longest = longest_chain(cat);
  const bool exact = longest && *longest <= bound;
  const int top = exact ? *longest : bound;

  Nerve out;
  out.category = c;
  SSet::Builder b;
  for (int x = 0; x < cat.num_objects(); ++x) b.add_vertex(cat.object_name(x));
  std::vector<std::vector<int>> level;
  for (int f = 0; f < cat.num_morphisms(); ++f) {
    if (!cat.is_identity(f)) level.push_back({f});
  }
  for (int m = 1; m <= top && !level.empty(); ++m) {
    std::vector<std::vector<int>> next;
    for (const auto& ch : level) {
      std::vector<SimplexExpr> faces;
      const int start = cat.morphism(ch.front()).src;
      for (int i = 0; i <= m; ++i) {
        std::vector<int> face;
        int fstart = start;
        if (i == 0) {
          face.assign(ch.begin() + 1, ch.end());
          fstart = cat.morphism(ch.front()).tgt;
        } else if (i == m) {
          face.assign(ch.begin(), ch.end() - 1);
        } else {
          face.assign(ch.begin(), ch.begin() + (i - 1));
          face.push_back(cat.compose(ch[sz(i)], ch[sz(i - 1)]));
          face.insert(face.end(), ch.begin() + (i + 1), ch.end());
        }
        faces.push_back(out.simplex(fstart, face));
      }
      std::string name;
      for (int f : ch) name += (name.empty() ? "" : ";") + cat.morphism(f).name;
      out.chains.emplace(ch, b.add(std::move(name), m, std::move(faces)));
      if (m < top) {
        for (int g = 0; g < cat.num_morphisms(); ++g) {
          if (cat.is_identity(g) || cat.morphism(g).src != cat.morphism(ch.back()).tgt) continue;
          auto ext = ch;
          ext.push_back(g);
          next.push_back(std::move(ext));
        }
      }
    }
    level = std::move(next);
  }
  out.object = share(std::move(b).build(exact ? std::nullopt : std::optional<int>(bound)));
  return out;
}

std::optional<CatFunctor> find_isomorphism(const FinCatPtr& c, const FinCatPtr& d) {
  const FinCat& a = *c;
  const FinCat& b = *d;
  if (a.num_objects() != b.num_objects() || a.num_morphisms() != b.num_morphisms()) return std::nullopt;
  std::vector<int> obj(sz(a.num_objects()));
  std::iota(obj.begin(), obj.end(), 0);
  do {
    bool sizes = true;
    for (int x = 0; sizes && x < a.num_objects(); ++x) {
      for (int y = 0; sizes && y < a.num_objects(); ++y) {
        sizes = a.hom(x, y).size() == b.hom(obj[sz(x)], obj[sz(y)]).size();
      }
    }
    if (!sizes) continue;
    std::vector<int> mor(sz(a.num_morphisms()), -1);
    std::vector<bool> used(sz(b.num_morphisms()), false);
    std::function<bool(int)> assign = [&](int f) -> bool {
      if (f == a.num_morphisms()) {
        for (int g = 0; g < a.num_morphisms(); ++g) {
          for (int h = 0; h < a.num_morphisms(); ++h) {
            if (a.morphism(h).tgt != a.morphism(g).src) continue;
            if (mor[sz(a.compose(g, h))] != b.compose(mor[sz(g)], mor[sz(h)])) return false;
          }
        }
        return true;
      }
      const auto& m = a.morphism(f);
      for (int t : b.hom(obj[sz(m.src)], obj[sz(m.tgt)])) {
        if (used[sz(t)] || a.is_identity(f) != b.is_identity(t)) continue;
        used[sz(t)] = true;
        mor[sz(f)] = t;
        if (assign(f + 1)) return true;
        used[sz(t)] = false;
      }
      mor[sz(f)] = -1;
      return false;
    };
    if (assign(0)) return CatFunctor(c, d, obj, mor);
  } while (std::next_permutation(obj.begin(), obj.end()));
  return std::nullopt;
}

int HomotopyCategory::operator()(const SimplexExpr& edge) const {
  const auto it = edge_class.find(edge);
  if (it == edge_class.end()) throw RangeError("not a 1-simplex of the quasi-category");
  return it->second;
}

HomotopyCategory homotopy_category(const SSetPtr& x, int bound, HoOptions opts) {
  const SSet& xs = *x;
  if (xs.window() < 2) throw WindowError("homotopy category needs 2-simplices");
  if (opts.verify) {
    const auto v = is_quasi_category(x, bound);
    if (!v) throw PreconditionError("not a quasi-category: " + describe(*v.witness));
  }
  const SimplexTable t = SimplexTable::from_sset(xs, 2);
  const int n0 = static_cast<int>(t.size(0));
  const int n1 = static_cast<int>(t.size(1));
  const int n2 = static_cast<int>(t.size(2));

  UnionFind uf(sz(n1));
  for (int s = 0; s < n2; ++s) {
    const int d2 = t.face(2, s, 2);
    if (d2 == t.degen(0, t.face(1, d2, 1), 0)) uf.unite(t.face(2, s, 0), t.face(2, s, 1));
  }
  std::vector<int> cls(sz(n1), -1);
  std::vector<std::vector<int>> members;
  for (int e = 0; e < n1; ++e) {
    const int r = uf.find(e);
    if (cls[sz(r)] < 0) {
      cls[sz(r)] = static_cast<int>(members.size());
      members.emplace_back();
    }
    cls[sz(e)] = cls[sz(r)];
    members[sz(cls[sz(e)])].push_back(e);
  }

  FinCat::Builder b;
  for (int v = 0; v < n0; ++v) b.object(xs.describe(t.expr(0, v)));
  std::vector<int> rep;
  for (const auto& mem : members) {
    rep.push_back(opts.reverse ? mem.back() : mem.front());
    std::string name;
    for (int e : mem) {
      if (t.is_degenerate(1, e)) {
        name = "id_" + xs.describe(t.expr(0, t.face(1, e, 0)));
        break;
      }
    }
    if (name.empty()) name = xs.describe(t.expr(1, mem.front()));
    b.morphism(std::move(name), t.face(1, mem.front(), 1), t.face(1, mem.front(), 0));
  }
  for (int v = 0; v < n0; ++v) b.identity(v, cls[sz(t.degen(0, v, 0))]);

  std::map<std::pair<int, int>, std::vector<int>> fillers;
  for (int s = 0; s < n2; ++s) fillers[{t.face(2, s, 2), t.face(2, s, 0)}].push_back(s);
  const int nm = static_cast<int>(members.size());
  for (int f = 0; f < nm; ++f) {
    for (int g = 0; g < nm; ++g) {
      const int u = rep[sz(f)];
      const int v = rep[sz(g)];
      if (t.face(1, u, 0) != t.face(1, v, 1)) continue;
      const auto it = fillers.find({u, v});
      if (it == fillers.end()) {
        throw PreconditionError("no 2-simplex composes " + xs.describe(t.expr(1, u)) + " and " +
                                xs.describe(t.expr(1, v)));
      }
      const int s = opts.reverse ? it->second.back() : it->second.front();
      b.compose(g, f, cls[sz(t.face(2, s, 1))]);
    }
  }
  HomotopyCategory out;
  out.category = std::make_shared<const FinCat>(std::move(b).build());
  for (int e = 0; e < n1; ++e) out.edge_class.emplace(t.expr(1, e), cls[sz(e)]);
  return out;
}

SMap unit_to_nerve(const SSetPtr& x, const HomotopyCategory& ho, const Nerve& n) {
  const SSet& xs = *x;
  SMap::Assignment a(sz(xs.dim() + 1));
  for (int d = 0; d <= xs.dim(); ++d) {
    for (int i = 0; i < static_cast<int>(xs.num_generators(d)); ++i) {
      const SimplexExpr g(GenRef{d, i});
      std::vector<int> chain;
      for (int j = 1; j <= d; ++j) {
        const int theta[] = {j - 1, j};
        chain.push_back(ho(xs.apply(g, theta)));
      }
      a[sz(d)].push_back(n.simplex(xs.vertex(g, 0).index, chain));
    }
  }
  return SMap(x, n.object, std::move(a));
}

CatFunctor ho_functor(const SMap& f, const HomotopyCategory& hx, const HomotopyCategory& hy) {
  const FinCat& cx = *hx.category;
  std::vector<int> obj;
  for (int v = 0; v < cx.num_objects(); ++v) obj.push_back(f(GenRef{0, v}).gen().index);
  std::vector<int> mor(sz(cx.num_morphisms()), -1);
  for (const auto& [edge, c] : hx.edge_class) {
    if (mor[sz(c)] < 0) mor[sz(c)] = hy(f(edge));
  }
  return CatFunctor(hx.category, hy.category, std::move(obj), std::move(mor));
}

bool is_isomorphism_edge(const SSetPtr& x, const SimplexExpr& edge, int bound) {
  const auto ho = homotopy_category(x, bound);
  return ho.category->is_iso(ho(edge));
}

Inclusion maximal_kan(const SSetPtr& x, int bound) {
  const SSet& xs = *x;
  const auto ho = homotopy_category(x, bound);
  SSet::Builder b;
  std::vector<std::vector<int>> index(sz(xs.dim() + 1));
  SMap::Assignment incl(sz(xs.dim() + 1));
  int top = -1;
  for (int d = 0; d <= xs.dim(); ++d) {
    index[sz(d)].assign(xs.num_generators(d), -1);
    for (int i = 0; i < static_cast<int>(xs.num_generators(d)); ++i) {
      const SimplexExpr g(GenRef{d, i});
      bool keep = true;
      for (int p = 0; keep && p <= d; ++p) {
        for (int q = p + 1; keep && q <= d; ++q) {
          const int theta[] = {p, q};
          keep = ho.category->is_iso(ho(xs.apply(g, theta)));
        }
      }
      if (!keep) continue;
      std::vector<SimplexExpr> faces;
      for (const auto& f : xs.generator(g.gen()).faces) {
        faces.emplace_back(GenRef{f.gen().dim, index[sz(f.gen().dim)][sz(f.gen().index)]},
                           f.degeneracies());
      }
      index[sz(d)][sz(i)] = b.add(xs.name(g.gen()), d, std::move(faces)).index;
      incl[sz(d)].push_back(g);
      top = d;
    }
  }
  incl.resize(sz(top + 1));
  auto j = share(std::move(b).build(xs.truncated_at()));
  return Inclusion{j, SMap(j, x, std::move(incl))};
}

namespace {

std::vector<std::pair<int, int>> skeleton_edges(const SSet& a) {
  std::vector<std::pair<int, int>> edges;
  for (int e = 0; a.dim() >= 1 && e < static_cast<int>(a.num_generators(1)); ++e) {
    const SimplexExpr s(GenRef{1, e});
    edges.emplace_back(a.vertex(s, 0).index, a.vertex(s, 1).index);
  }
  return edges;
}

}  // namespace

FinPoset poset_reflection(const SSet& a) {
  std::vector<std::string> names;
  for (int v = 0; v < static_cast<int>(a.num_generators(0)); ++v) names.push_back(a.name(GenRef{0, v}));
  return preorder_reflection(names, skeleton_edges(a));
}

std::vector<int> poset_classes(const SSet& a) {
  return preorder_classes(static_cast<int>(a.num_generators(0)), skeleton_edges(a));
}

}  // namespace tqc
