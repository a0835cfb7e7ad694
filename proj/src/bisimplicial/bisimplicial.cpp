#include "tqc/bisimplicial/bisimplicial.hpp"

#include <map>

#include "tqc/category/nerve.hpp"
#include "tqc/error.hpp"
#include "tqc/simplicial/constructions.hpp"

namespace tqc {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

std::string at(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

}  // namespace

TruncBiSSet::TruncBiSSet(int p_max, int q_max, std::vector<std::vector<Cells>> cells)
    : p_max_(p_max), q_max_(q_max), cells_(std::move(cells)) {
  if (p_max < 0 || q_max < 0) throw InvariantError("negative bisimplicial window");
  if (cells_.size() != sz(p_max + 1)) throw InvariantError("cell table does not match the window");
  for (int p = 0; p <= p_max; ++p) {
    if (cells_[sz(p)].size() != sz(q_max + 1)) throw InvariantError("cell table does not match the window");
    for (int q = 0; q <= q_max; ++q) {
      const Cells& c = cells_[sz(p)][sz(q)];
      const std::size_t n = c.names.size();
      if (c.hfaces.size() != n || c.hdegens.size() != n || c.vfaces.size() != n || c.vdegens.size() != n) {
        throw InvariantError("operator tables at " + at(p, q) + " do not cover the cells");
      }
      auto check = [&](const std::vector<std::vector<int>>& ops, std::size_t arity, int tp, int tq,
                       const char* what) {
        for (std::size_t id = 0; id < n; ++id) {
          if (ops[id].size() != arity) {
            throw InvariantError(std::string(what) + " of cell '" + c.names[id] + "' at " + at(p, q) +
                                 " have the wrong arity");
          }
          for (int t : ops[id]) {
            if (t < 0 || sz(t) >= cells_[sz(tp)][sz(tq)].names.size()) {
              throw InvariantError(std::string(what) + " of cell '" + c.names[id] + "' at " + at(p, q) +
                                   " point outside " + at(tp, tq));
            }
          }
        }
      };
      check(c.hfaces, p == 0 ? 0 : sz(p + 1), std::max(p - 1, 0), q, "horizontal faces");
      check(c.hdegens, p == p_max ? 0 : sz(p + 1), std::min(p + 1, p_max), q, "horizontal degeneracies");
      check(c.vfaces, q == 0 ? 0 : sz(q + 1), p, std::max(q - 1, 0), "vertical faces");
      check(c.vdegens, q == q_max ? 0 : sz(q + 1), p, std::min(q + 1, q_max), "vertical degeneracies");
    }
  }
  validate();
}

const TruncBiSSet::Cells& TruncBiSSet::cells(int p, int q) const {
  if (p < 0 || p > p_max_ || q < 0 || q > q_max_) throw WindowError("cell degree " + at(p, q) + " outside the window");
  return cells_[sz(p)][sz(q)];
}

int TruncBiSSet::hface(int p, int q, int id, int i) const { return cells(p, q).hfaces[sz(id)][sz(i)]; }
int TruncBiSSet::hdegen(int p, int q, int id, int i) const { return cells(p, q).hdegens[sz(id)][sz(i)]; }
int TruncBiSSet::vface(int p, int q, int id, int j) const { return cells(p, q).vfaces[sz(id)][sz(j)]; }
int TruncBiSSet::vdegen(int p, int q, int id, int j) const { return cells(p, q).vdegens[sz(id)][sz(j)]; }

SimplexTable TruncBiSSet::row(int q) const {
  std::vector<SimplexTable::Level> levels;
  for (int p = 0; p <= p_max_; ++p) {
    const Cells& c = cells(p, q);
    levels.push_back({c.hfaces, c.hdegens, c.names});
  }
  return SimplexTable(std::move(levels));
}

SimplexTable TruncBiSSet::column_table(int p) const {
  std::vector<SimplexTable::Level> levels;
  for (int q = 0; q <= q_max_; ++q) {
    const Cells& c = cells(p, q);
    levels.push_back({c.vfaces, c.vdegens, c.names});
  }
  return SimplexTable(std::move(levels));
}

void TruncBiSSet::validate() const {
  for (int q = 0; q <= q_max_; ++q) row(q).check_identities();
  for (int p = 0; p <= p_max_; ++p) column_table(p).check_identities();
  auto fail = [](const std::string& what, int p, int q, const std::string& name) {
    throw InvariantError("horizontal and vertical " + what + " do not commute on cell '" + name + "' at " +
                         at(p, q));
  };
  for (int p = 0; p <= p_max_; ++p) {
    for (int q = 0; q <= q_max_; ++q) {
      const Cells& c = cells(p, q);
      for (int id = 0; id < static_cast<int>(c.names.size()); ++id) {
        const std::string& name = c.names[sz(id)];
        for (int i = 0; p > 0 && i <= p; ++i) {
          for (int j = 0; q > 0 && j <= q; ++j) {
            if (vface(p - 1, q, hface(p, q, id, i), j) != hface(p, q - 1, vface(p, q, id, j), i)) {
              fail("faces", p, q, name);
            }
          }
          for (int j = 0; q < q_max_ && j <= q; ++j) {
            if (vdegen(p - 1, q, hface(p, q, id, i), j) != hface(p, q + 1, vdegen(p, q, id, j), i)) {
              fail("faces and degeneracies", p, q, name);
            }
          }
        }
        for (int i = 0; p < p_max_ && i <= p; ++i) {
          for (int j = 0; q > 0 && j <= q; ++j) {
            if (vface(p + 1, q, hdegen(p, q, id, i), j) != hdegen(p, q - 1, vface(p, q, id, j), i)) {
              fail("degeneracies and faces", p, q, name);
            }
          }
          for (int j = 0; q < q_max_ && j <= q; ++j) {
            if (vdegen(p + 1, q, hdegen(p, q, id, i), j) != hdegen(p, q + 1, vdegen(p, q, id, j), i)) {
              fail("degeneracies", p, q, name);
            }
          }
        }
      }
    }
  }
}

namespace {

// A functor [p] x I[q] -> A: the object at (0, 0), the row
// 0 chain and the column chains of isomorphisms.
struct Cell {
  int start = 0;
  std::vector<int> row;
  std::vector<std::vector<int>> cols;
  auto operator<=>(const Cell&) const = default;
};

class Diagram {
 public:
  Diagram(const FinCat& a, int p_max, int q_max) : a_(a), p_max_(p_max), q_max_(q_max) {
    for (int f = 0; f < a.num_morphisms(); ++f) {
      if (a.is_iso(f)) inv_.emplace(f, *a.inverse(f));
    }
  }

  TruncBiSSet build() {
    std::vector<std::vector<std::vector<Cell>>> all(sz(p_max_ + 1), std::vector<std::vector<Cell>>(sz(q_max_ + 1)));
    std::vector<std::vector<std::map<Cell, int>>> index(sz(p_max_ + 1), std::vector<std::map<Cell, int>>(sz(q_max_ + 1)));
    for (int p = 0; p <= p_max_; ++p) {
      for (int q = 0; q <= q_max_; ++q) {
        for (int x = 0; x < a_.num_objects(); ++x) {
          Cell c;
          c.start = x;
          rows(c, p, q, x);
        }
        all[sz(p)][sz(q)] = std::move(out_);
        out_.clear();
        for (std::size_t id = 0; id < all[sz(p)][sz(q)].size(); ++id) {
          index[sz(p)][sz(q)].emplace(all[sz(p)][sz(q)][id], static_cast<int>(id));
        }
      }
    }
    std::vector<std::vector<TruncBiSSet::Cells>> tables(sz(p_max_ + 1), std::vector<TruncBiSSet::Cells>(sz(q_max_ + 1)));
    for (int p = 0; p <= p_max_; ++p) {
      for (int q = 0; q <= q_max_; ++q) {
        auto& t = tables[sz(p)][sz(q)];
        for (const Cell& c : all[sz(p)][sz(q)]) {
          t.names.push_back(name(c));
          std::vector<int> hf, hd, vf, vd;
          for (int i = 0; p > 0 && i <= p; ++i) hf.push_back(index[sz(p - 1)][sz(q)].at(hface(c, i)));
          for (int i = 0; p < p_max_ && i <= p; ++i) hd.push_back(index[sz(p + 1)][sz(q)].at(hdegen(c, i)));
          for (int j = 0; q > 0 && j <= q; ++j) vf.push_back(index[sz(p)][sz(q - 1)].at(vface(c, j)));
          for (int j = 0; q < q_max_ && j <= q; ++j) vd.push_back(index[sz(p)][sz(q + 1)].at(vdegen(c, j)));
          t.hfaces.push_back(std::move(hf));
          t.hdegens.push_back(std::move(hd));
          t.vfaces.push_back(std::move(vf));
          t.vdegens.push_back(std::move(vd));
        }
      }
    }
    return TruncBiSSet(p_max_, q_max_, std::move(tables));
  }

 private:
  // Extends the row chain from object x, then fills the columns.
  void rows(Cell& c, int p, int q, int x) {
    if (static_cast<int>(c.row.size()) == p) {
      columns(c, q);
      return;
    }
    for (int f = 0; f < a_.num_morphisms(); ++f) {
      if (a_.morphism(f).src != x) continue;
      c.row.push_back(f);
      rows(c, p, q, a_.morphism(f).tgt);
      c.row.pop_back();
    }
  }

  void columns(Cell& c, int q) {
    const std::size_t p = c.row.size();
    if (c.cols.size() == p + 1 && (c.cols.empty() || static_cast<int>(c.cols.back().size()) == q)) {
      out_.push_back(c);
      return;
    }
    if (c.cols.empty() || static_cast<int>(c.cols.back().size()) == q) {
      c.cols.emplace_back();
      columns(c, q);
      c.cols.pop_back();
      return;
    }
    const std::size_t i = c.cols.size() - 1;
    const int from = c.cols[i].empty() ? object(c, i) : a_.morphism(c.cols[i].back()).tgt;
    for (const auto& [u, inv] : inv_) {
      if (a_.morphism(u).src != from) continue;
      c.cols[i].push_back(u);
      columns(c, q);
      c.cols[i].pop_back();
    }
  }

  // Object at (i, 0).
  int object(const Cell& c, std::size_t i) const {
    return i == 0 ? c.start : a_.morphism(c.row[i - 1]).tgt;
  }

  Cell hface(const Cell& c, int i) const {
    const int p = static_cast<int>(c.row.size());
    Cell out;
    out.start = i == 0 && p > 0 ? a_.morphism(c.row[0]).tgt : c.start;
    for (int t = 1; t <= p; ++t) {
      // Arrow t runs from column t-1 to column t.
      if (i == 0 && t == 1) continue;
      if (i == p && t == p) continue;
      if (t == i) continue;
      if (t == i + 1 && i > 0) {
        out.row.push_back(a_.compose(c.row[sz(t - 1)], c.row[sz(t - 2)]));
        continue;
      }
      out.row.push_back(c.row[sz(t - 1)]);
    }
    for (int t = 0; t <= p; ++t) {
      if (t != i) out.cols.push_back(c.cols[sz(t)]);
    }
    return out;
  }

  Cell hdegen(const Cell& c, int i) const {
    Cell out = c;
    out.row.insert(out.row.begin() + i, a_.identity(object(c, sz(i))));
    out.cols.insert(out.cols.begin() + i, c.cols[sz(i)]);
    return out;
  }

  // Face d_j of every column chain; d_0 moves row 0 down one step by
  // conjugating with the first column isomorphisms.
  Cell vface(const Cell& c, int j) const {
    const int q = static_cast<int>(c.cols.front().size());
    Cell out;
    out.start = c.start;
    out.row = c.row;
    if (j == 0) {
      out.start = a_.morphism(c.cols[0][0]).tgt;
      for (std::size_t t = 0; t < c.row.size(); ++t) {
        const int before = inv_.at(c.cols[t][0]);
        out.row[t] = a_.compose(c.cols[t + 1][0], a_.compose(c.row[t], before));
      }
    }
    for (const auto& col : c.cols) {
      std::vector<int> nc;
      for (int t = 1; t <= q; ++t) {
        if (j == 0 && t == 1) continue;
        if (j == q && t == q) continue;
        if (t == j) continue;
        if (t == j + 1 && j > 0) {
          nc.push_back(a_.compose(col[sz(t - 1)], col[sz(t - 2)]));
          continue;
        }
        nc.push_back(col[sz(t - 1)]);
      }
      out.cols.push_back(std::move(nc));
    }
    return out;
  }

  Cell vdegen(const Cell& c, int j) const {
    Cell out = c;
    for (std::size_t i = 0; i < out.cols.size(); ++i) {
      auto& col = out.cols[i];
      const int x = j == 0 ? object(c, i) : a_.morphism(col[sz(j - 1)]).tgt;
      col.insert(col.begin() + j, a_.identity(x));
    }
    return out;
  }

  std::string name(const Cell& c) const {
    std::string out = a_.object_name(c.start) + ":";
    for (std::size_t t = 0; t < c.row.size(); ++t) out += (t ? ";" : "") + a_.morphism(c.row[t]).name;
    out += "[";
    for (std::size_t i = 0; i < c.cols.size(); ++i) {
      out += i ? "/" : "";
      for (std::size_t t = 0; t < c.cols[i].size(); ++t) out += (t ? ";" : "") + a_.morphism(c.cols[i][t]).name;
    }
    return out + "]";
  }

  const FinCat& a_;
  int p_max_;
  int q_max_;
  std::map<int, int> inv_;
  std::vector<Cell> out_;
};

SSet extract_table(const SimplexTable& t, int top) { return t.extract(top).sset; }

}  // namespace

TruncBiSSet classifying_diagram(const FinCat& a, int p_max, int q_max) {
  if (p_max < 0 || q_max < 0) throw RangeError("negative bisimplicial window");
  return Diagram(a, p_max, q_max).build();
}

SSet zeroth_row(const TruncBiSSet& b) { return extract_table(b.row(0), b.P()); }

SSet column(const TruncBiSSet& b, int p) {
  if (p < 0 || p > b.P()) throw WindowError("column outside the window");
  return extract_table(b.column_table(p), b.Q());
}

TruncBiSSet constant_row(const SSet& a, int p_max, int q_max) {
  if (a.window() < p_max) throw WindowError("constant row needs the simplicial set through P");
  const SimplexTable t = SimplexTable::from_sset(a, p_max);
  std::vector<std::vector<TruncBiSSet::Cells>> cells(sz(p_max + 1), std::vector<TruncBiSSet::Cells>(sz(q_max + 1)));
  for (int p = 0; p <= p_max; ++p) {
    for (int q = 0; q <= q_max; ++q) {
      auto& c = cells[sz(p)][sz(q)];
      for (int id = 0; id < static_cast<int>(t.size(p)); ++id) {
        c.names.push_back(a.describe(t.expr(p, id)));
        std::vector<int> hf, hd;
        for (int i = 0; p > 0 && i <= p; ++i) hf.push_back(t.face(p, id, i));
        for (int i = 0; p < p_max && i <= p; ++i) hd.push_back(t.degen(p, id, i));
        c.hfaces.push_back(std::move(hf));
        c.hdegens.push_back(std::move(hd));
        c.vfaces.emplace_back(q == 0 ? 0 : sz(q + 1), id);
        c.vdegens.emplace_back(q == q_max ? 0 : sz(q + 1), id);
      }
    }
  }
  return TruncBiSSet(p_max, q_max, std::move(cells));
}

SSet segal_hom_space(const TruncBiSSet& b, int x, int y) {
  if (b.P() < 1) throw WindowError("hom-space needs the column p = 1");
  const int n0 = static_cast<int>(b.size(0, 0));
  if (x < 0 || x >= n0 || y < 0 || y >= n0) throw RangeError("object not in B_{0,0}");
  const int Q = b.Q();
  // Vertically constant cells at x and y in each degree q.
  std::vector<int> cx{x}, cy{y};
  for (int q = 1; q <= Q; ++q) {
    cx.push_back(b.vdegen(0, q - 1, cx.back(), 0));
    cy.push_back(b.vdegen(0, q - 1, cy.back(), 0));
  }
  std::vector<std::vector<int>> ids(sz(Q + 1));
  std::vector<std::map<int, int>> pos(sz(Q + 1));
  for (int q = 0; q <= Q; ++q) {
    for (int id = 0; id < static_cast<int>(b.size(1, q)); ++id) {
      if (b.hface(1, q, id, 1) == cx[sz(q)] && b.hface(1, q, id, 0) == cy[sz(q)]) {
        pos[sz(q)].emplace(id, static_cast<int>(ids[sz(q)].size()));
        ids[sz(q)].push_back(id);
      }
    }
  }
  std::vector<SimplexTable::Level> levels(sz(Q + 1));
  for (int q = 0; q <= Q; ++q) {
    for (int id : ids[sz(q)]) {
      std::vector<int> faces, degens;
      for (int j = 0; q > 0 && j <= q; ++j) faces.push_back(pos[sz(q - 1)].at(b.vface(1, q, id, j)));
      for (int j = 0; q < Q && j <= q; ++j) degens.push_back(pos[sz(q + 1)].at(b.vdegen(1, q, id, j)));
      levels[sz(q)].faces.push_back(std::move(faces));
      levels[sz(q)].degens.push_back(std::move(degens));
      levels[sz(q)].names.push_back(b.cells(1, q).names[sz(id)]);
    }
  }
  return extract_table(SimplexTable(std::move(levels)), Q);
}

bool verify_row_identity(const FinCatPtr& a, int p_max) {
  auto row = share(zeroth_row(classifying_diagram(*a, p_max, 0)));
  SSetPtr n = nerve(a, p_max).object;
  if (n->is_exact()) n = truncate(n, p_max);
  return is_isomorphic(row, n).has_value();
}

}  // namespace tqc
