#include "tqc/harness/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>

#include "tqc/error.hpp"
#include "tqc/simplicial/table.hpp"

namespace tqc::oracle {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

std::vector<int> members(unsigned mask) {
  std::vector<int> v;
  for (int i = 0; mask >> i; ++i) {
    if (mask >> i & 1u) v.push_back(i);
  }
  return v;
}

FaceComplex faces_where(int m, const std::function<bool(unsigned)>& keep) {
  FaceComplex c{m, {}};
  for (unsigned f = 1; f < (1u << (m + 1)); ++f) {
    if (keep(f)) c.faces.push_back(f);
  }
  return c;
}

// Whether g, restricted to the vertices of `face`, is monotone and spans a
// face of x.
bool lands(const std::vector<int>& g, unsigned face, const FaceComplex& x) {
  int last = -1;
  unsigned image = 0;
  for (int v : members(face)) {
    const int w = g[sz(v)];
    if (w < last) return false;
    last = w;
    image |= 1u << w;
  }
  return x.contains(image);
}

}  // namespace

bool FaceComplex::contains(unsigned face) const { return std::binary_search(faces.begin(), faces.end(), face); }

FaceComplex simplex_faces(int m) {
  return faces_where(m, [](unsigned) { return true; });
}

FaceComplex boundary_faces(int m) {
  const unsigned all = (1u << (m + 1)) - 1;
  return faces_where(m, [all](unsigned f) { return f != all; });
}

FaceComplex horn_faces(int m, int k) {
  const unsigned all = (1u << (m + 1)) - 1;
  const unsigned opposite = all & ~(1u << k);
  return faces_where(m, [all, opposite](unsigned f) { return f != all && f != opposite; });
}

std::vector<std::vector<int>> maps(const FaceComplex& k, const FaceComplex& x) {
  unsigned verts = 0;
  for (unsigned f : k.faces) verts |= f;
  const std::vector<int> vs = members(verts);
  std::vector<int> g(sz(k.n + 1), -1);
  std::vector<std::vector<int>> out;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == vs.size()) {
      for (unsigned f : k.faces) {
        if (!lands(g, f, x)) return;
      }
      out.push_back(g);
      return;
    }
    for (int w = 0; w <= x.n; ++w) {
      g[sz(vs[i])] = w;
      go(i + 1);
    }
    g[sz(vs[i])] = -1;
  };
  go(0);
  return out;
}

Verdict rlp(const FaceComplex& x, Family family, int m) {
  std::vector<std::pair<int, FaceComplex>> sources;
  switch (family) {
    case Family::boundary:
      sources.emplace_back(-1, boundary_faces(m));
      break;
    case Family::inner_horn:
      for (int k = 1; k < m; ++k) sources.emplace_back(k, horn_faces(m, k));
      break;
    case Family::all_horn:
      for (int k = 0; k <= m && m >= 1; ++k) sources.emplace_back(k, horn_faces(m, k));
      break;
    case Family::right_horn:
      for (int k = 1; k <= m; ++k) sources.emplace_back(k, horn_faces(m, k));
      break;
  }
  const std::vector<std::vector<int>> diagonals = maps(simplex_faces(m), x);
  Verdict v;
  for (const auto& [k, kc] : sources) {
    for (const auto& g : maps(kc, x)) {
      ++v.squares;
      const bool lifted = std::any_of(diagonals.begin(), diagonals.end(), [&](const std::vector<int>& d) {
        for (std::size_t i = 0; i < g.size(); ++i) {
          if (g[i] >= 0 && g[i] != d[i]) return false;
        }
        return true;
      });
      if (!lifted && v.holds) {
        v.holds = false;
        v.witness = std::pair(k, g);
      }
    }
  }
  return v;
}

std::vector<std::vector<unsigned>> subcomplexes(int n) {
  const unsigned faces = (1u << (n + 1)) - 1;
  std::vector<std::vector<unsigned>> out;
  for (std::uint64_t set = 1; set < (std::uint64_t{1} << faces); ++set) {
    auto in = [&](unsigned f) { return (set >> (f - 1) & 1u) != 0; };
    bool closed = true;
    for (unsigned f = 1; f <= faces && closed; ++f) {
      if (!in(f)) continue;
      for (unsigned sub = (f - 1) & f; sub && closed; sub = (sub - 1) & f) closed = in(sub);
    }
    if (!closed) continue;
    std::vector<unsigned> s;
    for (unsigned f = 1; f <= faces; ++f) {
      if (in(f)) s.push_back(f);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::size_t> pushout_counts(const SMap& f, const SMap& g, int top) {
  const SimplexTable ta = SimplexTable::from_sset(f.source(), top);
  const SimplexTable tb = SimplexTable::from_sset(f.target(), top);
  const SimplexTable tc = SimplexTable::from_sset(g.target(), top);
  const TableMap mf = table_map(f, ta, tb);
  const TableMap mg = table_map(g, ta, tc);
  std::vector<std::size_t> counts;
  for (int k = 0; k <= top; ++k) {
    const std::size_t nb = tb.size(k);
    std::vector<std::size_t> parent(nb + tc.size(k));
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> root = [&](std::size_t i) {
      return parent[i] == i ? i : parent[i] = root(parent[i]);
    };
    std::size_t classes = parent.size();
    for (std::size_t a = 0; a < ta.size(k); ++a) {
      const std::size_t u = root(sz(mf[sz(k)][a]));
      const std::size_t w = root(nb + sz(mg[sz(k)][a]));
      if (u != w) {
        parent[u] = w;
        --classes;
      }
    }
    counts.push_back(classes);
  }
  return counts;
}

Pullback pullback(const SMap& f, const SMap& g, int top) {
  const SimplexTable tx = SimplexTable::from_sset(f.source(), top);
  const SimplexTable ty = SimplexTable::from_sset(g.source(), top);
  const SimplexTable tz = SimplexTable::from_sset(f.target(), top);
  const TableMap mf = table_map(f, tx, tz);
  const TableMap mg = table_map(g, ty, tz);

  std::vector<std::vector<std::pair<int, int>>> pairs(sz(top + 1));
  std::vector<std::map<std::pair<int, int>, int>> ids(sz(top + 1));
  for (int k = 0; k <= top; ++k) {
    for (std::size_t a = 0; a < tx.size(k); ++a) {
      for (std::size_t b = 0; b < ty.size(k); ++b) {
        if (mf[sz(k)][a] != mg[sz(k)][b]) continue;
        ids[sz(k)].emplace(std::pair(static_cast<int>(a), static_cast<int>(b)), static_cast<int>(pairs[sz(k)].size()));
        pairs[sz(k)].emplace_back(static_cast<int>(a), static_cast<int>(b));
      }
    }
  }
  std::vector<SimplexTable::Level> levels(sz(top + 1));
  for (int k = 0; k <= top; ++k) {
    auto& lv = levels[sz(k)];
    for (auto [a, b] : pairs[sz(k)]) {
      std::vector<int> faces, degens;
      for (int i = 0; k > 0 && i <= k; ++i) {
        faces.push_back(ids[sz(k - 1)].at({tx.face(k, a, i), ty.face(k, b, i)}));
      }
      for (int i = 0; k < top && i <= k; ++i) {
        degens.push_back(ids[sz(k + 1)].at({tx.degen(k, a, i), ty.degen(k, b, i)}));
      }
      lv.faces.push_back(std::move(faces));
      lv.degens.push_back(std::move(degens));
      lv.names.push_back("(" + f.source().describe(tx.expr(k, a)) + "," + g.source().describe(ty.expr(k, b)) + ")");
    }
  }
  const SimplexTable tp(std::move(levels));
  tp.check_identities();
  SimplexTable::Extracted e = tp.extract(top);
  auto object = share(std::move(e.sset));
  TableMap p1(sz(top + 1)), p2(sz(top + 1));
  for (int k = 0; k <= top; ++k) {
    for (auto [a, b] : pairs[sz(k)]) {
      p1[sz(k)].push_back(a);
      p2[sz(k)].push_back(b);
    }
  }
  SMap pr1 = to_smap(object, e.generator_ids, f.source_ptr(), tx.exprs(), p1);
  SMap pr2 = to_smap(object, e.generator_ids, g.source_ptr(), ty.exprs(), p2);
  return Pullback{object, std::move(pr1), std::move(pr2)};
}

}  // namespace tqc::oracle
