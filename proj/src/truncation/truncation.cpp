#include "tqc/truncation/truncation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "tqc/category/nerve.hpp"
#include "tqc/error.hpp"
#include "tqc/simplicial/constructions.hpp"
#include "tqc/simplicial/table.hpp"

namespace tqc {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

void require_vertex(const SSet& x, GenRef v) {
  if (v.dim != 0 || v.index < 0 || v.index >= static_cast<int>(x.num_generators(0))) {
    throw RangeError("not a vertex");
  }
}

int find_root(std::vector<int>& parent, int a) {
  while (parent[sz(a)] != a) a = parent[sz(a)] = parent[sz(parent[sz(a)])];
  return a;
}

Word inverse(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
  return out;
}

// Free and cyclic reduction.
Word reduce(const Word& w) {
  Word out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  std::size_t a = 0;
  std::size_t b = out.size();
  while (b - a >= 2 && out[a].gen == out[b - 1].gen && out[a].exp == -out[b - 1].exp) {
    ++a;
    --b;
  }
  return Word(out.begin() + static_cast<std::ptrdiff_t>(a), out.begin() + static_cast<std::ptrdiff_t>(b));
}

void simplify(GroupPresentation& p) {
  auto normalise = [&] {
    std::vector<Word> rels;
    for (const Word& r : p.relators) {
      Word w = reduce(r);
      if (!w.empty() && std::find(rels.begin(), rels.end(), w) == rels.end()) rels.push_back(std::move(w));
    }
    p.relators = std::move(rels);
  };
  normalise();
  while (true) {
    // Shortest relator in which some generator occurs exactly once.
    int best_rel = -1;
    int best_gen = -1;
    for (int r = 0; r < static_cast<int>(p.relators.size()); ++r) {
      const Word& w = p.relators[sz(r)];
      if (best_rel >= 0 && w.size() >= p.relators[sz(best_rel)].size()) continue;
      std::map<int, int> occ;
      for (const Letter& l : w) ++occ[l.gen];
      for (const auto& [g, c] : occ) {
        if (c == 1) {
          best_rel = r;
          best_gen = g;
          break;
        }
      }
    }
    if (best_rel < 0) break;
    Word w = p.relators[sz(best_rel)];
    const auto at = std::find_if(w.begin(), w.end(), [&](const Letter& l) { return l.gen == best_gen; });
    std::rotate(w.begin(), at, w.end());
    // w = g^e u = 1, so g = u^-1 when e = 1 and g = u when e = -1.
    const Word rest(w.begin() + 1, w.end());
    const Word value = w.front().exp == 1 ? inverse(rest) : rest;
    p.relators.erase(p.relators.begin() + best_rel);
    for (Word& r : p.relators) {
      Word out;
      for (const Letter& l : r) {
        if (l.gen != best_gen) {
          out.push_back(l);
          continue;
        }
        const Word sub = l.exp == 1 ? value : inverse(value);
        out.insert(out.end(), sub.begin(), sub.end());
      }
      r = std::move(out);
    }
    p.generators.erase(p.generators.begin() + best_gen);
    for (Word& r : p.relators) {
      for (Letter& l : r) {
        if (l.gen > best_gen) --l.gen;
      }
    }
    normalise();
  }
}

}  // namespace

SSetPtr right_hom_space(const SSetPtr& x, GenRef from, GenRef to) {
  require_vertex(*x, from);
  require_vertex(*x, to);
  std::optional<int> trunc;
  int T = std::max(x->dim(), 0);
  if (!x->is_exact()) {
    T = x->window() - 1;
    trunc = T;
  }
  const SimplexTable tx = SimplexTable::from_sset(*x, T + 1);
  const int y = tx.id_of(SimplexExpr(to));
  std::vector<int> base{tx.id_of(SimplexExpr(from))};
  for (int k = 1; k <= T; ++k) base.push_back(tx.degen(k - 1, base.back(), 0));
  std::vector<std::vector<int>> ids(sz(T + 1));
  std::vector<std::map<int, int>> pos(sz(T + 1));
  for (int k = 0; k <= T; ++k) {
    for (int id = 0; id < static_cast<int>(tx.size(k + 1)); ++id) {
      if (tx.vertex(k + 1, id, k + 1) == y && tx.face(k + 1, id, k + 1) == base[sz(k)]) {
        pos[sz(k)].emplace(id, static_cast<int>(ids[sz(k)].size()));
        ids[sz(k)].push_back(id);
      }
    }
  }
  std::vector<SimplexTable::Level> levels(sz(T + 1));
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
  return share(SimplexTable(std::move(levels)).extract(trunc).sset);
}

std::vector<std::vector<int>> pi0(const SSet& a) {
  const int n = static_cast<int>(a.num_generators(0));
  std::vector<int> parent(sz(n));
  std::iota(parent.begin(), parent.end(), 0);
  for (int e = 0; a.dim() >= 1 && e < static_cast<int>(a.num_generators(1)); ++e) {
    const SimplexExpr s(GenRef{1, e});
    const int u = find_root(parent, a.vertex(s, 0).index);
    const int v = find_root(parent, a.vertex(s, 1).index);
    if (u != v) parent[sz(std::max(u, v))] = std::min(u, v);
  }
  std::vector<std::vector<int>> out;
  std::map<int, std::size_t> slot;
  for (int v = 0; v < n; ++v) {
    const int r = find_root(parent, v);
    if (!slot.count(r)) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

int GroupPresentation::relator_rank() const {
  std::vector<std::vector<long long>> m;
  for (const Word& w : relators) {
    std::vector<long long> row(generators.size(), 0);
    for (const Letter& l : w) row[sz(l.gen)] += l.exp;
    m.push_back(std::move(row));
  }
  int rank = 0;
  for (std::size_t col = 0; col < generators.size() && rank < static_cast<int>(m.size()); ++col) {
    std::size_t piv = sz(rank);
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[sz(rank)]);
    const auto& p = m[sz(rank)];
    for (std::size_t r = sz(rank) + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      const long long a = p[col];
      const long long b = m[r][col];
      long long g = 0;
      for (std::size_t c = 0; c < generators.size(); ++c) {
        m[r][c] = m[r][c] * a - p[c] * b;
        g = std::gcd(g, m[r][c]);
      }
      if (g > 1) {
        for (auto& v : m[r]) v /= g;
      }
    }
    ++rank;
  }
  return rank;
}

std::string GroupPresentation::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators.size(); ++i) out += (i ? ", " : "") + generators[i];
  out += " |";
  for (std::size_t r = 0; r < relators.size(); ++r) {
    out += r ? ", " : " ";
    for (std::size_t i = 0; i < relators[r].size(); ++i) {
      const Letter& l = relators[r][i];
      out += (i ? "." : "") + generators[sz(l.gen)] + (l.exp < 0 ? "^-1" : "");
    }
  }
  return out + ">";
}

GroupPresentation pi1_presentation(const SSet& a, GenRef base) {
  require_vertex(a, base);
  if (pi0(a).size() != 1) throw PreconditionError("pi1 presentation needs a connected simplicial set");
  const int nv = static_cast<int>(a.num_generators(0));
  const int ne = a.dim() >= 1 ? static_cast<int>(a.num_generators(1)) : 0;
  std::vector<std::pair<int, int>> ends;
  for (int e = 0; e < ne; ++e) {
    const SimplexExpr s(GenRef{1, e});
    ends.emplace_back(a.vertex(s, 0).index, a.vertex(s, 1).index);
  }
  std::vector<bool> tree(sz(ne), false), seen(sz(nv), false);
  std::queue<int> todo;
  todo.push(base.index);
  seen[sz(base.index)] = true;
  while (!todo.empty()) {
    const int v = todo.front();
    todo.pop();
    for (int e = 0; e < ne; ++e) {
      const auto [p, q] = ends[sz(e)];
      const int other = p == v ? q : q == v ? p : -1;
      if (other < 0 || seen[sz(other)]) continue;
      seen[sz(other)] = true;
      tree[sz(e)] = true;
      todo.push(other);
    }
  }
  GroupPresentation out;
  std::vector<int> letter(sz(ne), -1);
  for (int e = 0; e < ne; ++e) {
    if (tree[sz(e)]) continue;
    letter[sz(e)] = static_cast<int>(out.generators.size());
    out.generators.push_back(a.name(GenRef{1, e}));
  }
  for (int t = 0; a.dim() >= 2 && t < static_cast<int>(a.num_generators(2)); ++t) {
    const auto& faces = a.generator(GenRef{2, t}).faces;
    Word w;
    auto push = [&](const SimplexExpr& f, int exp) {
      if (f.is_degenerate()) return;
      const int g = letter[sz(f.gen().index)];
      if (g >= 0) w.push_back({g, exp});
    };
    push(faces[2], 1);
    push(faces[0], 1);
    push(faces[1], -1);
    out.relators.push_back(std::move(w));
  }
  simplify(out);
  return out;
}

std::string to_string(TruncationMethod m) {
  return m == TruncationMethod::lifting ? "lifting" : "coskeleton";
}

TruncationVerdict is_n_truncated(const SSetPtr& x, int n, int bound, TruncationMethod method,
                                 CheckOptions opts) {
  if (n < -1) throw RangeError("truncation index below -1");
  if (bound < n + 2) throw PreconditionError("truncation check needs bound >= n + 2");
  if (x->window() < bound) throw WindowError("truncation bound exceeds the window");
  if (opts.verify) {
    const auto q = is_quasi_category(x, bound);
    if (!q) throw PreconditionError("not a quasi-category: " + describe(*q.witness));
  }
  RlpVerdict v;
  if (method == TruncationMethod::lifting) {
    v = check_rlp(x, Family::boundary, n + 2, bound);
  } else {
    const SSetPtr xt = x->dim() > bound ? truncate(x, bound) : x;
    const Coskeleton c = coskeleton(xt, n + 1, bound);
    v = is_fibration(c.unit, FibrationClass::trivial, bound);
  }
  return TruncationVerdict{v.holds, method, bound, std::move(v.witness)};
}

RlpVerdict is_n_type(const SSetPtr& k, int n, int bound, CheckOptions opts) {
  if (n < -2) throw RangeError("type index below -2");
  if (opts.verify) {
    const auto v = is_kan(k, bound);
    if (!v) throw PreconditionError("not a Kan complex: " + describe(*v.witness));
  }
  return check_rlp(k, Family::boundary, n + 2, bound);
}

bool homotopy_m_equivalence(const SMap& f, int m, int bound, CheckOptions opts) {
  if (m < -2 || m > 0) throw RangeError("homotopy m-equivalence is decided for m in {-2, -1, 0}");
  if (opts.verify) {
    for (const SSetPtr& end : {f.source_ptr(), f.target_ptr()}) {
      const auto v = is_kan(end, bound);
      if (!v) throw PreconditionError("not a Kan complex: " + describe(*v.witness));
    }
  }
  if (m == -2) return true;
  const SSet& x = f.source();
  const SSet& y = f.target();
  if (m == -1) return (x.num_generators(0) == 0) == (y.num_generators(0) == 0);
  const auto cx = pi0(x);
  const auto cy = pi0(y);
  if (cx.size() != cy.size()) return false;
  std::vector<int> comp(y.num_generators(0));
  for (std::size_t c = 0; c < cy.size(); ++c) {
    for (int v : cy[c]) comp[sz(v)] = static_cast<int>(c);
  }
  std::set<int> hit;
  for (const auto& c : cx) hit.insert(comp[sz(f(GenRef{0, c.front()}).gen().index)]);
  return hit.size() == cy.size();
}

CategoricalVerdict categorical_n_equivalence(const SMap& f, int n, int bound, CheckOptions opts) {
  if (n < 0 || n > 1) throw RangeError("categorical n-equivalence is decided for n in {0, 1}");
  if (opts.verify) {
    for (const SSetPtr& end : {f.source_ptr(), f.target_ptr()}) {
      const auto v = is_quasi_category(end, bound);
      if (!v) throw PreconditionError("not a quasi-category: " + describe(*v.witness));
    }
  }
  const auto hx = homotopy_category(f.source_ptr(), bound, {false, false});
  const auto hy = homotopy_category(f.target_ptr(), bound, {false, false});
  const CatFunctor hf = ho_functor(f, hx, hy);
  CategoricalVerdict out;
  out.essentially_surjective = is_essentially_surjective(hf);
  if (n == 1) {
    out.value = out.essentially_surjective && is_fully_faithful(hf);
  } else {
    const FinPoset p = poset_reflection(f.source());
    const FinPoset q = poset_reflection(f.target());
    const auto px = poset_classes(f.source());
    const auto py = poset_classes(f.target());
    std::vector<int> phi(sz(p.size()), -1);
    for (std::size_t v = 0; v < px.size(); ++v) {
      phi[sz(px[v])] = py[sz(f(GenRef{0, static_cast<int>(v)}).gen().index)];
    }
    bool iso = p.size() == q.size() && std::set<int>(phi.begin(), phi.end()).size() == phi.size();
    for (int a = 0; iso && a < p.size(); ++a) {
      for (int b = 0; iso && b < p.size(); ++b) iso = p.leq(a, b) == q.leq(phi[sz(a)], phi[sz(b)]);
    }
    out.value = iso;
  }
  out.diagnostic = out.essentially_surjective ? "essentially surjective" : "not essentially surjective";
  return out;
}

}  // namespace tqc
