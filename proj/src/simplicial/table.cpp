#include "tqc/simplicial/table.hpp"

#include <set>
#include <string>
#include <utility>

#include "tqc/error.hpp"

namespace tqc {

namespace {

// Subsets of {0..n-1} of size r, lexicographic, as sorted vectors.
void subsets(int n, int r, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

SimplexTable::SimplexTable(std::vector<Level> levels) : levels_(std::move(levels)) {
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    auto& lv = levels_[k];
    const std::size_t n = lv.faces.size();
    if (k + 1 < levels_.size() && lv.degens.size() != n) {
      throw InvariantError("level " + std::to_string(k) + " is missing degeneracies");
    }
    lv.degens.resize(n);
    lv.names.resize(n);
  }
  index();
}

void SimplexTable::index() {
  const std::size_t levels = levels_.size();
  degenerate_.assign(levels, {});
  by_faces_.assign(levels, {});
  for (std::size_t k = 0; k < levels; ++k) {
    degenerate_[k].assign(levels_[k].faces.size(), 0);
  }
  for (std::size_t k = 0; k + 1 < levels; ++k) {
    for (const auto& ds : levels_[k].degens) {
      for (int y : ds) degenerate_[k + 1][static_cast<std::size_t>(y)] = 1;
    }
  }
  for (std::size_t k = 0; k < levels; ++k) {
    const auto& fs = levels_[k].faces;
    for (std::size_t id = 0; id < fs.size(); ++id) {
      by_faces_[k][fs[id]].push_back(static_cast<int>(id));
    }
  }
}

SimplexTable SimplexTable::from_sset(const SSet& x, int top) {
  if (top > x.window()) {
    throw WindowError("simplices of dimension " + std::to_string(top) +
                      " requested beyond the window " + std::to_string(x.window()));
  }
  SimplexTable t;
  const std::size_t levels = top < 0 ? 0 : static_cast<std::size_t>(top) + 1;
  t.levels_.resize(levels);
  t.exprs_.resize(levels);
  t.expr_ids_.resize(levels);
  for (int k = 0; k <= top; ++k) {
    auto& exprs = t.exprs_[static_cast<std::size_t>(k)];
    for (int j = std::min(k, x.dim()); j >= 0; --j) {
      std::vector<std::vector<int>> repeats;
      subsets(k, k - j, repeats);
      for (int g = 0; g < static_cast<int>(x.num_generators(j)); ++g) {
        for (const auto& r : repeats) {
          Monotone s(static_cast<std::size_t>(k) + 1, 0);
          std::size_t next = 0;
          for (int p = 1; p <= k; ++p) {
            const bool rep = next < r.size() && r[next] == p - 1;
            if (rep) ++next;
            s[static_cast<std::size_t>(p)] = s[static_cast<std::size_t>(p) - 1] + (rep ? 0 : 1);
          }
          exprs.push_back(SimplexExpr::from_surjection(GenRef{j, g}, s));
        }
      }
    }
    auto& ids = t.expr_ids_[static_cast<std::size_t>(k)];
    for (std::size_t id = 0; id < exprs.size(); ++id) ids.emplace(exprs[id], static_cast<int>(id));
  }
  for (int k = 0; k <= top; ++k) {
    auto& lv = t.levels_[static_cast<std::size_t>(k)];
    const auto& exprs = t.exprs_[static_cast<std::size_t>(k)];
    lv.faces.resize(exprs.size());
    lv.degens.resize(exprs.size());
    lv.names.resize(exprs.size());
    for (std::size_t id = 0; id < exprs.size(); ++id) {
      const SimplexExpr& e = exprs[id];
      if (!e.is_degenerate()) lv.names[id] = x.name(e.gen());
      if (k > 0) {
        for (int i = 0; i <= k; ++i) lv.faces[id].push_back(t.id_of(x.face(e, i)));
      }
      if (k < top) {
        for (int i = 0; i <= k; ++i) lv.degens[id].push_back(t.id_of(x.degeneracy(e, i)));
      }
    }
  }
  t.index();
  return t;
}

std::size_t SimplexTable::size(int k) const {
  if (k < 0 || k > top()) return 0;
  return levels_[static_cast<std::size_t>(k)].faces.size();
}

int SimplexTable::apply(int k, int id, std::span<const int> theta) const {
  if (theta.empty() || !monotone::is_monotone(theta, k)) {
    throw RangeError("operator is not a monotone map into [" + std::to_string(k) + "]");
  }
  const auto fact = monotone::factor(theta);
  int level = k;
  std::size_t s = fact.mono.size();
  for (int v = k; v >= 0; --v) {
    if (s > 0 && fact.mono[s - 1] == v) {
      --s;
      continue;
    }
    id = face(level, id, v);
    --level;
  }
  for (std::size_t t = 1; t < fact.epi.size(); ++t) {
    if (fact.epi[t] == fact.epi[t - 1]) {
      id = degen(level, id, static_cast<int>(t) - 1);
      ++level;
    }
  }
  return id;
}

int SimplexTable::vertex(int k, int id, int j) const {
  const int at[1] = {j};
  return apply(k, id, at);
}

int SimplexTable::degenerate(int k, int id, std::span<const int> word) const {
  for (std::size_t t = word.size(); t-- > 0;) {
    id = degen(k, id, word[t]);
    ++k;
  }
  return id;
}

std::span<const int> SimplexTable::with_faces(int k, std::span<const int> faces) const {
  const auto& idx = by_faces_[static_cast<std::size_t>(k)];
  auto it = idx.find(std::vector<int>(faces.begin(), faces.end()));
  if (it == idx.end()) return {};
  return it->second;
}

int SimplexTable::id_of(const SimplexExpr& x) const {
  const int k = x.dim();
  if (k < 0 || k > top() || expr_ids_.empty()) {
    throw RangeError("simplex of dimension " + std::to_string(k) + " outside the table");
  }
  const auto& ids = expr_ids_[static_cast<std::size_t>(k)];
  auto it = ids.find(x);
  if (it == ids.end()) throw RangeError("simplex not present in the table");
  return it->second;
}

std::vector<std::vector<int>> SimplexTable::generator_ids(const SSet& x) const {
  if (x.dim() > top()) throw WindowError("table stops below the generators of the object");
  std::vector<std::vector<int>> out(static_cast<std::size_t>(x.dim() + 1));
  for (int d = 0; d <= x.dim(); ++d) {
    for (int i = 0; i < static_cast<int>(x.num_generators(d)); ++i) {
      out[static_cast<std::size_t>(d)].push_back(id_of(SimplexExpr(GenRef{d, i})));
    }
  }
  return out;
}

SimplexTable::Extracted SimplexTable::extract(std::optional<int> truncated_at) const {
  Extracted out;
  SSet::Builder b;
  const std::size_t levels = levels_.size();
  out.exprs.resize(levels);
  int last_nondegenerate = -1;
  for (std::size_t k = 0; k < levels; ++k) {
    for (std::size_t id = 0; id < levels_[k].faces.size(); ++id) {
      if (!degenerate_[k][id]) last_nondegenerate = static_cast<int>(k);
    }
  }
  out.generator_ids.resize(static_cast<std::size_t>(last_nondegenerate + 1));
  std::set<std::string> used;
  for (std::size_t k = 0; k < levels; ++k) {
    const auto& lv = levels_[k];
    auto& exprs = out.exprs[k];
    exprs.resize(lv.faces.size());
    // One degeneracy preimage per degenerate element.
    std::vector<std::pair<int, int>> pre(lv.faces.size(), {-1, -1});
    if (k > 0) {
      const auto& below = levels_[k - 1].degens;
      for (std::size_t y = 0; y < below.size(); ++y) {
        for (std::size_t i = 0; i < below[y].size(); ++i) {
          auto& slot = pre[static_cast<std::size_t>(below[y][i])];
          if (slot.first < 0) slot = {static_cast<int>(y), static_cast<int>(i)};
        }
      }
    }
    for (std::size_t id = 0; id < lv.faces.size(); ++id) {
      if (degenerate_[k][id]) {
        const auto [y, i] = pre[id];
        const SimplexExpr& ey = out.exprs[k - 1][static_cast<std::size_t>(y)];
        const Monotone sigma =
            monotone::compose(ey.surjection(), monotone::codegeneracy(static_cast<int>(k) - 1, i));
        exprs[id] = SimplexExpr::from_surjection(ey.gen(), sigma);
        continue;
      }
      std::vector<SimplexExpr> faces;
      for (int f : lv.faces[id]) faces.push_back(out.exprs[k - 1][static_cast<std::size_t>(f)]);
      std::string name = lv.names[id];
      if (name.empty()) name = "x" + std::to_string(k) + "_" + std::to_string(id);
      while (!used.insert(name).second) name += '\'';
      exprs[id] = SimplexExpr(b.add(std::move(name), static_cast<int>(k), std::move(faces)));
      out.generator_ids[k].push_back(static_cast<int>(id));
    }
  }
  out.sset = std::move(b).build(truncated_at);
  return out;
}

void SimplexTable::check_identities() const {
  const int T = top();
  auto fail = [](const std::string& what, int k, int id) {
    throw InvariantError("identity " + what + " fails at level " + std::to_string(k) +
                         " element " + std::to_string(id));
  };
  for (int k = 0; k <= T; ++k) {
    const auto& lv = levels_[static_cast<std::size_t>(k)];
    for (int id = 0; id < static_cast<int>(lv.faces.size()); ++id) {
      if (static_cast<int>(lv.faces[static_cast<std::size_t>(id)].size()) != (k == 0 ? 0 : k + 1)) {
        fail("face arity", k, id);
      }
      if (k < T && static_cast<int>(lv.degens[static_cast<std::size_t>(id)].size()) != k + 1) {
        fail("degeneracy arity", k, id);
      }
      for (int j = 1; k >= 2 && j <= k; ++j) {
        for (int i = 0; i < j; ++i) {
          if (face(k - 1, face(k, id, j), i) != face(k - 1, face(k, id, i), j - 1)) {
            fail("d" + std::to_string(i) + "d" + std::to_string(j), k, id);
          }
        }
      }
      if (k == T) continue;
      for (int j = 0; j <= k; ++j) {
        const int s = degen(k, id, j);
        for (int i = 0; i <= k + 1; ++i) {
          const int lhs = face(k + 1, s, i);
          int rhs;
          if (i == j || i == j + 1) {
            rhs = id;
          } else if (i < j) {
            rhs = degen(k - 1, face(k, id, i), j - 1);
          } else {
            rhs = degen(k - 1, face(k, id, i - 1), j);
          }
          if (lhs != rhs) fail("d" + std::to_string(i) + "s" + std::to_string(j), k, id);
        }
        if (k + 1 < T) {
          for (int i = 0; i <= j; ++i) {
            if (degen(k + 1, degen(k, id, j), i) != degen(k + 1, degen(k, id, i), j + 1)) {
              fail("s" + std::to_string(i) + "s" + std::to_string(j), k, id);
            }
          }
        }
      }
    }
  }
}

TableMap table_map(const SMap& f, const SimplexTable& src, const SimplexTable& tgt) {
  if (tgt.top() < src.top()) throw WindowError("target table is shorter than the source table");
  TableMap out(static_cast<std::size_t>(src.top() + 1));
  for (int k = 0; k <= src.top(); ++k) {
    auto& lv = out[static_cast<std::size_t>(k)];
    lv.resize(src.size(k));
    for (int id = 0; id < static_cast<int>(src.size(k)); ++id) {
      lv[static_cast<std::size_t>(id)] = tgt.id_of(f(src.expr(k, id)));
    }
  }
  return out;
}

SMap to_smap(SSetPtr source, const std::vector<std::vector<int>>& gen_ids, SSetPtr target,
             const std::vector<std::vector<SimplexExpr>>& tgt_exprs, const TableMap& f) {
  SMap::Assignment a(gen_ids.size());
  for (std::size_t d = 0; d < gen_ids.size(); ++d) {
    for (int id : gen_ids[d]) {
      a[d].push_back(tgt_exprs[d][static_cast<std::size_t>(f[d][static_cast<std::size_t>(id)])]);
    }
  }
  return SMap(std::move(source), std::move(target), std::move(a));
}

}  // namespace tqc
