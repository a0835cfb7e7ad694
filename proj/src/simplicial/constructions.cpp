#include "tqc/simplicial/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "tqc/error.hpp"
#include "tqc/simplicial/map_search.hpp"
#include "tqc/simplicial/standard.hpp"
#include "tqc/simplicial/table.hpp"

namespace tqc {

namespace {

using Level = SimplexTable::Level;

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[sz(x)] != x) {
      parent[sz(x)] = parent[sz(parent[sz(x)])];
      x = parent[sz(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[sz(std::max(a, b))] = std::min(a, b);
  }
};

// ---- product -------------------------------------------------------------

struct ProductTables {
  SimplexTable ta, tb, tp;
  std::optional<int> trunc;
};

ProductTables product_tables(const SSet& a, const SSet& b) {
  ProductTables out;
  int top = -1;
  if (!a.empty() && !b.empty()) {
    if (a.is_exact() && b.is_exact()) {
      top = a.dim() + b.dim();
    } else {
      top = std::min(a.window(), b.window());
      out.trunc = top;
    }
  }
  out.ta = SimplexTable::from_sset(a, top);
  out.tb = SimplexTable::from_sset(b, top);
  std::vector<Level> levels(sz(top + 1));
  for (int k = 0; k <= top; ++k) {
    const int na = static_cast<int>(out.ta.size(k));
    const int nb = static_cast<int>(out.tb.size(k));
    const int nb_down = static_cast<int>(out.tb.size(k - 1));
    const int nb_up = static_cast<int>(out.tb.size(k + 1));
    auto& lv = levels[sz(k)];
    lv.faces.resize(sz(na * nb));
    lv.names.resize(sz(na * nb));
    if (k < top) lv.degens.resize(sz(na * nb));
    for (int x = 0; x < na; ++x) {
      for (int y = 0; y < nb; ++y) {
        const std::size_t id = sz(x * nb + y);
        for (int i = 0; k > 0 && i <= k; ++i) {
          lv.faces[id].push_back(out.ta.face(k, x, i) * nb_down + out.tb.face(k, y, i));
        }
        for (int i = 0; k < top && i <= k; ++i) {
          lv.degens[id].push_back(out.ta.degen(k, x, i) * nb_up + out.tb.degen(k, y, i));
        }
        lv.names[id] =
            "(" + a.describe(out.ta.expr(k, x)) + "," + b.describe(out.tb.expr(k, y)) + ")";
      }
    }
  }
  out.tp = SimplexTable(std::move(levels));
  return out;
}

// ---- pushout ---------------------------------------------------------------

struct PushoutTables {
  SimplexTable tb, tc, tp;
  TableMap to_b, to_c;  // B and C elements to quotient classes
  std::optional<int> trunc;
};

PushoutTables pushout_tables(const SMap& f, const SMap& g) {
  if (f.source_ptr().get() != g.source_ptr().get()) {
    throw PreconditionError("pushout legs need a shared source");
  }
  const SSet& a = f.source();
  const SSet& b = f.target();
  const SSet& c = g.target();
  PushoutTables out;
  int top;
  if (a.is_exact() && b.is_exact() && c.is_exact()) {
    top = std::max(b.dim(), c.dim());
  } else {
    top = std::min({a.window(), b.window(), c.window()});
    out.trunc = top;
  }
  const SimplexTable ta = SimplexTable::from_sset(a, top);
  out.tb = SimplexTable::from_sset(b, top);
  out.tc = SimplexTable::from_sset(c, top);
  const TableMap fa = table_map(f, ta, out.tb);
  const TableMap ga = table_map(g, ta, out.tc);

  std::vector<std::vector<int>> cls(sz(top + 1));
  std::vector<std::vector<int>> rep(sz(top + 1));
  for (int k = 0; k <= top; ++k) {
    const int nb = static_cast<int>(out.tb.size(k));
    const int nc = static_cast<int>(out.tc.size(k));
    UnionFind uf(sz(nb + nc));
    for (int x = 0; x < static_cast<int>(ta.size(k)); ++x) {
      uf.unite(fa[sz(k)][sz(x)], nb + ga[sz(k)][sz(x)]);
    }
    auto& cl = cls[sz(k)];
    cl.assign(sz(nb + nc), -1);
    for (int e = 0; e < nb + nc; ++e) {
      const int r = uf.find(e);
      if (r == e) {
        cl[sz(e)] = static_cast<int>(rep[sz(k)].size());
        rep[sz(k)].push_back(e);
      } else {
        cl[sz(e)] = cl[sz(r)];
      }
    }
  }
  auto face_of = [&](int k, int e, int i) {
    const int nb = static_cast<int>(out.tb.size(k));
    const int nb_down = static_cast<int>(out.tb.size(k - 1));
    const int v = e < nb ? out.tb.face(k, e, i) : nb_down + out.tc.face(k, e - nb, i);
    return cls[sz(k - 1)][sz(v)];
  };
  auto degen_of = [&](int k, int e, int i) {
    const int nb = static_cast<int>(out.tb.size(k));
    const int nb_up = static_cast<int>(out.tb.size(k + 1));
    const int v = e < nb ? out.tb.degen(k, e, i) : nb_up + out.tc.degen(k, e - nb, i);
    return cls[sz(k + 1)][sz(v)];
  };
  std::vector<Level> levels(sz(top + 1));
  for (int k = 0; k <= top; ++k) {
    auto& lv = levels[sz(k)];
    const int nb = static_cast<int>(out.tb.size(k));
    for (int e : rep[sz(k)]) {
      std::vector<int> faces, degens;
      for (int i = 0; k > 0 && i <= k; ++i) faces.push_back(face_of(k, e, i));
      for (int i = 0; k < top && i <= k; ++i) degens.push_back(degen_of(k, e, i));
      lv.faces.push_back(std::move(faces));
      lv.degens.push_back(std::move(degens));
      const SimplexExpr& ex = e < nb ? out.tb.expr(k, e) : out.tc.expr(k, e - nb);
      lv.names.push_back(ex.is_degenerate() ? std::string()
                                            : (e < nb ? b.name(ex.gen()) : c.name(ex.gen())));
    }
  }
  out.tp = SimplexTable(std::move(levels));
  out.to_b.resize(sz(top + 1));
  out.to_c.resize(sz(top + 1));
  for (int k = 0; k <= top; ++k) {
    const auto nb = out.tb.size(k);
    out.to_b[sz(k)].assign(cls[sz(k)].begin(), cls[sz(k)].begin() + static_cast<long>(nb));
    out.to_c[sz(k)].assign(cls[sz(k)].begin() + static_cast<long>(nb), cls[sz(k)].end());
  }
  return out;
}

// ---- join ------------------------------------------------------------------

struct JoinTables {
  SimplexTable ta, tb, tj;
  int top = -1;
  // offset[k][i]: first id at level k of pairs (a in A_i, b in B_{k-1-i}).
  std::vector<std::vector<int>> offset;
  int pair_id(int i, int x, int j, int y) const {
    return offset[sz(i + j + 1)][sz(i)] + x * static_cast<int>(tb.size(j)) + y;
  }
};

JoinTables join_tables(const SSet& a, const SSet& b) {
  if (!a.is_exact() || !b.is_exact()) throw WindowError("join needs finite inputs");
  JoinTables out;
  const int top = a.dim() + b.dim() + 1;
  out.top = std::max({top, a.dim(), b.dim()});
  const int T = out.top;
  out.ta = SimplexTable::from_sset(a, T);
  out.tb = SimplexTable::from_sset(b, T);
  out.offset.resize(sz(T + 1));
  std::vector<int> level_size(sz(T + 1));
  for (int k = 0; k <= T; ++k) {
    int at = static_cast<int>(out.ta.size(k) + out.tb.size(k));
    out.offset[sz(k)].assign(sz(std::max(k, 0)), 0);
    for (int i = 0; i < k; ++i) {
      out.offset[sz(k)][sz(i)] = at;
      at += static_cast<int>(out.ta.size(i) * out.tb.size(k - 1 - i));
    }
    level_size[sz(k)] = at;
  }
  std::vector<Level> levels(sz(T + 1));
  for (int k = 0; k <= T; ++k) {
    auto& lv = levels[sz(k)];
    const int n = level_size[sz(k)];
    lv.faces.resize(sz(n));
    lv.names.resize(sz(n));
    if (k < T) lv.degens.resize(sz(n));
    const int na = static_cast<int>(out.ta.size(k));
    const int nb = static_cast<int>(out.tb.size(k));
    const int na_down = static_cast<int>(out.ta.size(k - 1));
    const int na_up = static_cast<int>(out.ta.size(k + 1));
    for (int x = 0; x < na; ++x) {
      for (int i = 0; k > 0 && i <= k; ++i) lv.faces[sz(x)].push_back(out.ta.face(k, x, i));
      for (int i = 0; k < T && i <= k; ++i) lv.degens[sz(x)].push_back(out.ta.degen(k, x, i));
      if (!out.ta.expr(k, x).is_degenerate()) lv.names[sz(x)] = a.name(out.ta.expr(k, x).gen());
    }
    for (int y = 0; y < nb; ++y) {
      const std::size_t id = sz(na + y);
      for (int i = 0; k > 0 && i <= k; ++i) lv.faces[id].push_back(na_down + out.tb.face(k, y, i));
      for (int i = 0; k < T && i <= k; ++i) lv.degens[id].push_back(na_up + out.tb.degen(k, y, i));
      if (!out.tb.expr(k, y).is_degenerate()) lv.names[id] = b.name(out.tb.expr(k, y).gen());
    }
    for (int i = 0; i < k; ++i) {
      const int j = k - 1 - i;
      for (int x = 0; x < static_cast<int>(out.ta.size(i)); ++x) {
        for (int y = 0; y < static_cast<int>(out.tb.size(j)); ++y) {
          const std::size_t id = sz(out.pair_id(i, x, j, y));
          for (int f = 0; f <= k; ++f) {
            int v;
            if (f <= i) {
              v = i == 0 ? na_down + y : out.pair_id(i - 1, out.ta.face(i, x, f), j, y);
            } else {
              v = j == 0 ? x : out.pair_id(i, x, j - 1, out.tb.face(j, y, f - i - 1));
            }
            lv.faces[id].push_back(v);
          }
          for (int s = 0; k < T && s <= k; ++s) {
            lv.degens[id].push_back(s <= i ? out.pair_id(i + 1, out.ta.degen(i, x, s), j, y)
                                           : out.pair_id(i, x, j + 1, out.tb.degen(j, y, s - i - 1)));
          }
          const SimplexExpr& ea = out.ta.expr(i, x);
          const SimplexExpr& eb = out.tb.expr(j, y);
          if (!ea.is_degenerate() && !eb.is_degenerate()) {
            lv.names[id] = a.name(ea.gen()) + "*" + b.name(eb.gen());
          }
        }
      }
    }
  }
  out.tj = SimplexTable(std::move(levels));
  return out;
}

// Degreewise image of a table element of a join under f * g.
int join_image(const JoinTables& s, const JoinTables& t, const TableMap& fa, const TableMap& gb,
               int k, int id) {
  const int na = static_cast<int>(s.ta.size(k));
  const int nb = static_cast<int>(s.tb.size(k));
  if (id < na) return fa[sz(k)][sz(id)];
  if (id < na + nb) return static_cast<int>(t.ta.size(k)) + gb[sz(k)][sz(id - na)];
  for (int i = k - 1; i >= 0; --i) {
    const int off = s.offset[sz(k)][sz(i)];
    if (id < off) continue;
    const int j = k - 1 - i;
    const int rel = id - off;
    const int x = rel / static_cast<int>(s.tb.size(j));
    const int y = rel % static_cast<int>(s.tb.size(j));
    return t.pair_id(i, fa[sz(i)][sz(x)], j, gb[sz(j)][sz(y)]);
  }
  throw InvariantError("join element out of range");
}


}  // namespace

SSetPtr truncate(const SSetPtr& a, int top) {
  if (top > a->window()) throw WindowError("cannot truncate above the known window");
  SSet::Builder b;
  for (int d = 0; d <= std::min(top, a->dim()); ++d) {
    for (const auto& g : a->generators(d)) b.add(g.name, d, g.faces);
  }
  return share(std::move(b).build(top));
}

Product product(const SSetPtr& a, const SSetPtr& b) {
  ProductTables t = product_tables(*a, *b);
  auto ex = t.tp.extract(t.trunc);
  SSetPtr p = share(std::move(ex.sset));
  const int top = t.tp.top();
  TableMap m1(sz(top + 1)), m2(sz(top + 1));
  for (int k = 0; k <= top; ++k) {
    const int nb = static_cast<int>(t.tb.size(k));
    for (int id = 0; id < static_cast<int>(t.tp.size(k)); ++id) {
      m1[sz(k)].push_back(id / nb);
      m2[sz(k)].push_back(id % nb);
    }
  }
  SMap pr1 = to_smap(p, ex.generator_ids, a, t.ta.exprs(), m1);
  SMap pr2 = to_smap(p, ex.generator_ids, b, t.tb.exprs(), m2);
  return Product{p, std::move(pr1), std::move(pr2)};
}

SMap pairing(const SMap& h1, const SMap& h2, const Product& target) {
  if (h1.source_ptr().get() != h2.source_ptr().get()) {
    throw PreconditionError("pairing needs components with a common source");
  }
  const ProductTables t = product_tables(h1.target(), h2.target());
  const auto ex = t.tp.extract(t.trunc);
  const SSet& z = h1.source();
  SMap::Assignment a(sz(z.dim() + 1));
  for (int d = 0; d <= z.dim(); ++d) {
    for (int i = 0; i < static_cast<int>(z.num_generators(d)); ++i) {
      const int x = t.ta.id_of(h1(GenRef{d, i}));
      const int y = t.tb.id_of(h2(GenRef{d, i}));
      a[sz(d)].push_back(ex.exprs[sz(d)][sz(x * static_cast<int>(t.tb.size(d)) + y)]);
    }
  }
  return SMap(h1.source_ptr(), target.object, std::move(a));
}

Pushout pushout(const SMap& f, const SMap& g) {
  PushoutTables t = pushout_tables(f, g);
  auto ex = t.tp.extract(t.trunc);
  SSetPtr p = share(std::move(ex.sset));
  SMap leg_b = to_smap(f.target_ptr(), t.tb.generator_ids(f.target()), p, ex.exprs, t.to_b);
  SMap leg_c = to_smap(g.target_ptr(), t.tc.generator_ids(g.target()), p, ex.exprs, t.to_c);
  return Pushout{p, std::move(leg_b), std::move(leg_c)};
}

SMap induced(const Pushout& p, const SMap& u, const SMap& v) {
  if (u.target_ptr().get() != v.target_ptr().get()) {
    throw PreconditionError("induced map needs a common target");
  }
  const SSet& obj = *p.object;
  std::map<GenRef, SimplexExpr> image;
  auto collect = [&](const SMap& leg, const SMap& h) {
    const SSet& src = leg.source();
    for (int d = 0; d <= src.dim(); ++d) {
      for (int i = 0; i < static_cast<int>(src.num_generators(d)); ++i) {
        const SimplexExpr& e = leg(GenRef{d, i});
        if (e.is_degenerate()) continue;
        const SimplexExpr hv = h(GenRef{d, i});
        auto [it, fresh] = image.emplace(e.gen(), hv);
        if (!fresh && it->second != hv) {
          throw PreconditionError("maps out of the pushout do not agree on the glued part");
        }
      }
    }
  };
  collect(p.leg_b, u);
  collect(p.leg_c, v);
  SMap::Assignment a(sz(obj.dim() + 1));
  for (int d = 0; d <= obj.dim(); ++d) {
    for (int i = 0; i < static_cast<int>(obj.num_generators(d)); ++i) {
      a[sz(d)].push_back(image.at(GenRef{d, i}));
    }
  }
  return SMap(p.object, u.target_ptr(), std::move(a));
}

Inclusion skeleton(const SSetPtr& a, int n) {
  if (n < -1) throw RangeError("skeleton index below -1");
  SSet::Builder b;
  for (int d = 0; d <= std::min(n, a->dim()); ++d) {
    for (const auto& g : a->generators(d)) b.add(g.name, d, g.faces);
  }
  std::optional<int> trunc;
  if (n > a->window()) trunc = a->window();
  SSetPtr s = share(std::move(b).build(trunc));
  SMap::Assignment asg(sz(s->dim() + 1));
  for (int d = 0; d <= s->dim(); ++d) {
    for (int i = 0; i < static_cast<int>(s->num_generators(d)); ++i) asg[sz(d)].emplace_back(GenRef{d, i});
  }
  return Inclusion{s, SMap(s, a, std::move(asg))};
}

Coskeleton coskeleton(const SSetPtr& a, int n, int bound) {
  if (n < 0) throw RangeError("coskeleton index must be non-negative");
  if (bound < 0) throw RangeError("negative bound");
  if (bound < a->dim()) throw WindowError("coskeleton unit needs a bound of at least dim A");
  const SimplexTable ta = SimplexTable::from_sset(*a, n);
  const int T = bound;
  const int low = std::min(n, T);

  // Subsets of [m] with at most n+1 elements, in generator order of sk_n Delta^m.
  std::vector<std::vector<std::vector<int>>> subs(sz(T + 1));
  std::vector<std::map<std::vector<int>, int>> sub_index(sz(T + 1));
  std::vector<std::vector<std::vector<int>>> values(sz(T + 1));
  std::vector<std::map<std::vector<int>, int>> value_index(sz(T + 1));
  for (int m = n + 1; m <= T; ++m) {
    auto sk = share(standard::subcomplex(m, [n](std::span<const int> s) {
      return static_cast<int>(s.size()) <= n + 1;
    }));
    for (int d = 0; d <= sk->dim(); ++d) {
      for (const auto& g : sk->generators(d)) {
        std::vector<int> verts;
        for (char ch : g.name) verts.push_back(ch - '0');
        if (m >= 10) throw RangeError("coskeleton bound too large");
        sub_index[sz(m)].emplace(verts, static_cast<int>(subs[sz(m)].size()));
        subs[sz(m)].push_back(std::move(verts));
      }
    }
    MapSearch s;
    s.source = sk.get();
    s.target = &ta;
    search_maps(s, [&](const IdAssignment& asg) {
      std::vector<int> flat;
      for (const auto& lv : asg) flat.insert(flat.end(), lv.begin(), lv.end());
      value_index[sz(m)].emplace(flat, static_cast<int>(values[sz(m)].size()));
      values[sz(m)].push_back(std::move(flat));
      return true;
    });
  }
  auto lookup = [&](int m, const std::vector<int>& v) {
    auto it = value_index[sz(m)].find(v);
    if (it == value_index[sz(m)].end()) throw InvariantError("coskeleton element not closed");
    return it->second;
  };

  std::vector<Level> levels(sz(T + 1));
  for (int m = 0; m <= low; ++m) {
    auto& lv = levels[sz(m)];
    const int na = static_cast<int>(ta.size(m));
    lv.faces.resize(sz(na));
    lv.degens.resize(sz(na));
    lv.names.resize(sz(na));
    for (int x = 0; x < na; ++x) {
      const auto f = ta.faces(m, x);
      lv.faces[sz(x)].assign(f.begin(), f.end());
      if (m < n && m < T) {
        for (int i = 0; i <= m; ++i) lv.degens[sz(x)].push_back(ta.degen(m, x, i));
      }
      if (!ta.expr(m, x).is_degenerate()) lv.names[sz(x)] = a->name(ta.expr(m, x).gen());
    }
  }
  // Degeneracies out of level n land in the first coskeletal level.
  if (n < T) {
    auto& lv = levels[sz(n)];
    for (int x = 0; x < static_cast<int>(ta.size(n)); ++x) {
      for (int i = 0; i <= n; ++i) {
        std::vector<int> v;
        for (const auto& s : subs[sz(n + 1)]) {
          Monotone theta;
          for (int t : s) theta.push_back(t <= i ? t : t - 1);
          v.push_back(ta.apply(n, x, theta));
        }
        lv.degens[sz(x)].push_back(lookup(n + 1, v));
      }
    }
  }
  for (int m = n + 1; m <= T; ++m) {
    auto& lv = levels[sz(m)];
    const auto& vals = values[sz(m)];
    lv.faces.resize(vals.size());
    lv.degens.resize(vals.size());
    lv.names.resize(vals.size());
    for (std::size_t e = 0; e < vals.size(); ++e) {
      const auto& val = vals[e];
      for (int i = 0; i <= m; ++i) {
        if (m - 1 == n) {
          std::vector<int> face;
          for (int t = 0; t <= m; ++t) {
            if (t != i) face.push_back(t);
          }
          lv.faces[e].push_back(val[sz(sub_index[sz(m)].at(face))]);
          continue;
        }
        std::vector<int> v;
        for (const auto& s : subs[sz(m - 1)]) {
          std::vector<int> img;
          for (int t : s) img.push_back(t < i ? t : t + 1);
          v.push_back(val[sz(sub_index[sz(m)].at(img))]);
        }
        lv.faces[e].push_back(lookup(m - 1, v));
      }
      for (int i = 0; m < T && i <= m; ++i) {
        std::vector<int> v;
        for (const auto& s : subs[sz(m + 1)]) {
          std::vector<int> img;
          int pos = -1;
          for (std::size_t t = 0; t < s.size(); ++t) {
            const int w = s[t] <= i ? s[t] : s[t] - 1;
            if (!img.empty() && img.back() == w) {
              pos = static_cast<int>(t) - 1;
              continue;
            }
            img.push_back(w);
          }
          const int base = val[sz(sub_index[sz(m)].at(img))];
          v.push_back(pos < 0 ? base : ta.degen(static_cast<int>(img.size()) - 1, base, pos));
        }
        lv.degens[e].push_back(lookup(m + 1, v));
      }
      std::string name = "(";
      for (int t = 0; t <= m; ++t) {
        if (t > 0) name += ",";
        name += a->name(ta.expr(0, val[sz(t)]).gen());
      }
      name += ")";
      if (n > 0) name += "#" + std::to_string(e);
      lv.names[e] = std::move(name);
    }
  }
  SimplexTable tc(std::move(levels));
  auto ex = tc.extract(T);
  SSetPtr c = share(std::move(ex.sset));

  SMap::Assignment unit(sz(a->dim() + 1));
  for (int d = 0; d <= a->dim(); ++d) {
    for (int i = 0; i < static_cast<int>(a->num_generators(d)); ++i) {
      const SimplexExpr g(GenRef{d, i});
      int id;
      if (d <= n) {
        id = ta.id_of(g);
      } else {
        std::vector<int> v;
        for (const auto& s : subs[sz(d)]) {
          const SimplexExpr r = a->apply(g, s);
          v.push_back(ta.id_of(r));
        }
        id = lookup(d, v);
      }
      unit[sz(d)].push_back(ex.exprs[sz(d)][sz(id)]);
    }
  }
  return Coskeleton{c, SMap(a, c, std::move(unit))};
}

Join join(const SSetPtr& a, const SSetPtr& b) {
  JoinTables t = join_tables(*a, *b);
  auto ex = t.tj.extract(std::nullopt);
  SSetPtr j = share(std::move(ex.sset));
  SMap::Assignment l(sz(a->dim() + 1)), r(sz(b->dim() + 1));
  for (int d = 0; d <= a->dim(); ++d) {
    for (int i = 0; i < static_cast<int>(a->num_generators(d)); ++i) {
      l[sz(d)].push_back(ex.exprs[sz(d)][sz(t.ta.id_of(SimplexExpr(GenRef{d, i})))]);
    }
  }
  for (int d = 0; d <= b->dim(); ++d) {
    for (int i = 0; i < static_cast<int>(b->num_generators(d)); ++i) {
      const int id = static_cast<int>(t.ta.size(d)) + t.tb.id_of(SimplexExpr(GenRef{d, i}));
      r[sz(d)].push_back(ex.exprs[sz(d)][sz(id)]);
    }
  }
  return Join{j, SMap(a, j, std::move(l)), SMap(b, j, std::move(r))};
}

SMap join_maps(const SMap& f, const SMap& g, const Join& source, const Join& target) {
  const JoinTables s = join_tables(f.source(), g.source());
  const JoinTables t = join_tables(f.target(), g.target());
  const int T = s.top;
  if (t.top < T) throw WindowError("target join is too short");
  // Tables of the inputs up to the source join's top.
  const TableMap fa = table_map(f, s.ta, t.ta);
  const TableMap gb = table_map(g, s.tb, t.tb);
  const auto se = s.tj.extract(std::nullopt);
  const auto te = t.tj.extract(std::nullopt);
  TableMap m(sz(T + 1));
  for (int k = 0; k <= T; ++k) {
    for (int id = 0; id < static_cast<int>(s.tj.size(k)); ++id) {
      m[sz(k)].push_back(join_image(s, t, fa, gb, k, id));
    }
  }
  return to_smap(source.object, se.generator_ids, target.object, te.exprs, m);
}

Slice slice(const SSetPtr& x, GenRef vertex) {
  if (vertex.dim != 0) throw RangeError("slice needs a vertex");
  x->generator(vertex);
  std::optional<int> trunc;
  int T = x->dim();
  if (!x->is_exact()) {
    T = x->window() - 1;
    trunc = T;
  }
  const SimplexTable tx = SimplexTable::from_sset(*x, T + 1);
  const int v = tx.id_of(SimplexExpr(vertex));
  std::vector<std::vector<int>> ids(sz(T + 1));
  std::vector<std::map<int, int>> pos(sz(T + 2));
  for (int k = 0; k <= T; ++k) {
    for (int id = 0; id < static_cast<int>(tx.size(k + 1)); ++id) {
      if (tx.vertex(k + 1, id, k + 1) == v) {
        pos[sz(k)].emplace(id, static_cast<int>(ids[sz(k)].size()));
        ids[sz(k)].push_back(id);
      }
    }
  }
  std::vector<Level> levels(sz(T + 1));
  for (int k = 0; k <= T; ++k) {
    auto& lv = levels[sz(k)];
    for (int id : ids[sz(k)]) {
      std::vector<int> faces, degens;
      for (int i = 0; k > 0 && i <= k; ++i) faces.push_back(pos[sz(k - 1)].at(tx.face(k + 1, id, i)));
      for (int i = 0; k < T && i <= k; ++i) degens.push_back(pos[sz(k + 1)].at(tx.degen(k + 1, id, i)));
      lv.faces.push_back(std::move(faces));
      lv.degens.push_back(std::move(degens));
      lv.names.push_back(x->describe(tx.expr(k + 1, id)));
    }
  }
  SimplexTable ts(std::move(levels));
  auto ex = ts.extract(trunc);
  SSetPtr s = share(std::move(ex.sset));
  TableMap proj(sz(T + 1));
  for (int k = 0; k <= T; ++k) {
    for (int id : ids[sz(k)]) proj[sz(k)].push_back(tx.face(k + 1, id, k + 1));
  }
  SMap p = to_smap(s, ex.generator_ids, x, tx.exprs(), proj);
  return Slice{s, std::move(p)};
}

SSetPtr suspension(const SSetPtr& u) {
  auto ends = share(standard::discrete({"bot", "top"}));
  auto interval = share(standard::simplex(1));
  SMap ends_in(ends, interval, {{SimplexExpr(GenRef{0, 0}), SimplexExpr(GenRef{0, 1})}});
  Product ue = product(u, ends);
  Product ui = product(u, interval);
  SMap side = pairing(ue.pr1, compose(ends_in, ue.pr2), ui);
  return pushout(ue.pr2, side).object;
}

namespace {

// Visits every isomorphism a -> b as a generator index table; visit returns
// false to stop.
void isomorphisms(const SSet& a, const SSet& b,
                  const std::function<bool(const std::vector<std::vector<int>>&)>& visit) {
  if (a.counts() != b.counts()) return;
  // Signature: face degeneracy lengths plus coface counts by position.
  auto signatures = [](const SSet& x) {
    std::vector<std::vector<std::vector<int>>> sig(sz(x.dim() + 1));
    for (int d = 0; d <= x.dim(); ++d) {
      sig[sz(d)].assign(x.num_generators(d), std::vector<int>(sz(2 * d + 3), 0));
      for (int i = 0; i < static_cast<int>(x.num_generators(d)); ++i) {
        const auto& g = x.generators(d)[sz(i)];
        for (std::size_t f = 0; f < g.faces.size(); ++f) {
          sig[sz(d)][sz(i)][f] = static_cast<int>(g.faces[f].degeneracies().size());
        }
      }
    }
    for (int d = 1; d <= x.dim(); ++d) {
      for (const auto& g : x.generators(d)) {
        for (std::size_t f = 0; f < g.faces.size(); ++f) {
          const auto& e = g.faces[f];
          if (e.is_degenerate()) continue;
          ++sig[sz(d - 1)][sz(e.gen().index)][sz(d) + 1 + f];
        }
      }
    }
    return sig;
  };
  const auto sa = signatures(a);
  const auto sb = signatures(b);
  std::vector<GenRef> order;
  for (int d = 0; d <= a.dim(); ++d) {
    for (int i = 0; i < static_cast<int>(a.num_generators(d)); ++i) order.push_back({d, i});
  }
  std::vector<std::vector<int>> phi(sz(a.dim() + 1));
  std::vector<std::vector<char>> used(sz(a.dim() + 1));
  for (int d = 0; d <= a.dim(); ++d) {
    phi[sz(d)].assign(a.num_generators(d), -1);
    used[sz(d)].assign(b.num_generators(d), 0);
  }
  auto rec = [&](auto&& self, std::size_t p) -> bool {
    if (p == order.size()) return visit(phi);
    const GenRef g = order[p];
    const auto& ga = a.generator(g);
    for (int c = 0; c < static_cast<int>(b.num_generators(g.dim)); ++c) {
      if (used[sz(g.dim)][sz(c)] || sa[sz(g.dim)][sz(g.index)] != sb[sz(g.dim)][sz(c)]) continue;
      const auto& gb = b.generator(GenRef{g.dim, c});
      bool ok = true;
      for (std::size_t f = 0; ok && f < ga.faces.size(); ++f) {
        const auto& e = ga.faces[f];
        const GenRef img{e.gen().dim, phi[sz(e.gen().dim)][sz(e.gen().index)]};
        ok = gb.faces[f] == SimplexExpr(img, e.degeneracies());
      }
      if (!ok) continue;
      phi[sz(g.dim)][sz(g.index)] = c;
      used[sz(g.dim)][sz(c)] = 1;
      const bool more = self(self, p + 1);
      used[sz(g.dim)][sz(c)] = 0;
      phi[sz(g.dim)][sz(g.index)] = -1;
      if (!more) return false;
    }
    return true;
  };
  rec(rec, 0);
}

SMap::Assignment as_assignment(const std::vector<std::vector<int>>& phi) {
  SMap::Assignment asg(phi.size());
  for (std::size_t d = 0; d < phi.size(); ++d) {
    for (int c : phi[d]) asg[d].emplace_back(GenRef{static_cast<int>(d), c});
  }
  return asg;
}

}  // namespace

std::optional<SMap> is_isomorphic(const SSetPtr& a, const SSetPtr& b) {
  if (a->window() != b->window()) {
    throw PreconditionError("isomorphism test needs equal truncation windows");
  }
  std::optional<SMap::Assignment> found;
  isomorphisms(*a, *b, [&](const std::vector<std::vector<int>>& phi) {
    found = as_assignment(phi);
    return false;
  });
  if (!found) return std::nullopt;
  return SMap(a, b, std::move(*found));
}

bool is_isomorphic_mono(const SMap& f, const SMap& g) {
  if (!f.is_mono() || !g.is_mono()) throw PreconditionError("arrow comparison needs monomorphisms");
  if (f.source().window() != g.source().window() || f.target().window() != g.target().window()) {
    throw PreconditionError("isomorphism test needs equal truncation windows");
  }
  if (f.source().counts() != g.source().counts()) return false;
  auto image = [](const SMap& m) {
    std::set<GenRef> out;
    for (const auto& lv : m.assignment()) {
      for (const auto& e : lv) out.insert(e.gen());
    }
    return out;
  };
  const auto fi = image(f);
  const auto gi = image(g);
  bool found = false;
  isomorphisms(f.target(), g.target(), [&](const std::vector<std::vector<int>>& beta) {
    std::set<GenRef> moved;
    for (const GenRef r : fi) moved.insert(GenRef{r.dim, beta[sz(r.dim)][sz(r.index)]});
    found = moved == gi;
    return !found;
  });
  return found;
}

bool is_n_bijective(const SMap& f, int n) {
  if (n < 0) return true;
  if (f.source().window() < n || f.target().window() < n) {
    throw WindowError("n-bijectivity needs both ends known through dimension " + std::to_string(n));
  }
  const SimplexTable ts = SimplexTable::from_sset(f.source(), n);
  const SimplexTable tt = SimplexTable::from_sset(f.target(), n);
  const TableMap m = table_map(f, ts, tt);
  for (int k = 0; k <= n; ++k) {
    if (ts.size(k) != tt.size(k)) return false;
    std::vector<char> hit(tt.size(k), 0);
    for (int y : m[sz(k)]) {
      if (hit[sz(y)]) return false;
      hit[sz(y)] = 1;
    }
  }
  return true;
}

}  // namespace tqc
