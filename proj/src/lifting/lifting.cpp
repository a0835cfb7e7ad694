#include "tqc/lifting/lifting.hpp"

#include <algorithm>
#include <string>

#include "tqc/error.hpp"
#include "tqc/simplicial/map_search.hpp"
#include "tqc/simplicial/standard.hpp"
#include "tqc/simplicial/table.hpp"

namespace tqc {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

SMap::Assignment to_exprs(const SimplexTable& t, const IdAssignment& a) {
  SMap::Assignment out(a.size());
  for (std::size_t d = 0; d < a.size(); ++d) {
    for (int id : a[d]) out[d].push_back(t.expr(static_cast<int>(d), id));
  }
  return out;
}

// Maps K -> X in lexicographic order of their generator images.
std::vector<IdAssignment> sorted_maps(const SSet& k, const SimplexTable& t, const MapSearch& base) {
  std::vector<std::pair<SMap::Assignment, IdAssignment>> found;
  MapSearch s = base;
  s.source = &k;
  s.target = &t;
  search_maps(s, [&](const IdAssignment& a) {
    found.emplace_back(to_exprs(t, a), a);
    return true;
  });
  std::sort(found.begin(), found.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<IdAssignment> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

bool any_solution(const MapSearch& s) {
  return search_maps(s, [](const IdAssignment&) { return false; }) > 0;
}

struct FamilyMember {
  int m;
  int k;
  SSetPtr source;
  SSetPtr simplex;
  // Generator of Delta^m hit by each generator of the source.
  std::vector<std::vector<GenRef>> into;
};

std::vector<FamilyMember> members(Family family, int lo, int hi) {
  std::vector<FamilyMember> out;
  for (int m = std::max(lo, 0); m <= hi; ++m) {
    std::vector<int> ks;
    switch (family) {
      case Family::boundary:
        ks = {-1};
        break;
      case Family::inner_horn:
        for (int k = 1; k < m; ++k) ks.push_back(k);
        break;
      case Family::all_horn:
        for (int k = 0; m >= 1 && k <= m; ++k) ks.push_back(k);
        break;
      case Family::right_horn:
        for (int k = 1; m >= 1 && k <= m; ++k) ks.push_back(k);
        break;
    }
    for (int k : ks) {
      FamilyMember fm;
      fm.m = m;
      fm.k = k;
      fm.source = share(k < 0 ? standard::boundary(m) : standard::horn(m, k));
      fm.simplex = share(standard::simplex(m));
      const SMap incl = standard::inclusion(fm.source, fm.simplex);
      fm.into.resize(incl.assignment().size());
      for (std::size_t d = 0; d < incl.assignment().size(); ++d) {
        for (const auto& e : incl.assignment()[d]) fm.into[d].push_back(e.gen());
      }
      out.push_back(std::move(fm));
    }
  }
  return out;
}

IdAssignment pinned_through(const FamilyMember& fm, const IdAssignment& top) {
  IdAssignment fixed(sz(fm.m + 1));
  for (int d = 0; d <= fm.m; ++d) fixed[sz(d)].assign(fm.simplex->num_generators(d), -1);
  for (std::size_t d = 0; d < top.size(); ++d) {
    for (std::size_t i = 0; i < top[d].size(); ++i) {
      const GenRef g = fm.into[d][i];
      fixed[sz(g.dim)][sz(g.index)] = top[d][i];
    }
  }
  return fixed;
}

IdAssignment pushed(const IdAssignment& a, const TableMap& p) {
  IdAssignment out(a.size());
  for (std::size_t d = 0; d < a.size(); ++d) {
    for (int id : a[d]) out[d].push_back(id < 0 ? -1 : p[d][sz(id)]);
  }
  return out;
}

void require_window(const SSet& x, int hi) {
  if (x.window() < hi) {
    throw WindowError("lifting check through dimension " + std::to_string(hi) +
                      " exceeds the window " + std::to_string(x.window()));
  }
}

}  // namespace

Family family_of(FibrationClass c) {
  switch (c) {
    case FibrationClass::inner:
      return Family::inner_horn;
    case FibrationClass::kan:
      return Family::all_horn;
    case FibrationClass::right:
      return Family::right_horn;
    case FibrationClass::trivial:
      return Family::boundary;
  }
  return Family::boundary;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::boundary:
      return "boundary";
    case Family::inner_horn:
      return "inner-horn";
    case Family::all_horn:
      return "all-horn";
    case Family::right_horn:
      return "right-horn";
  }
  return "?";
}

std::string to_string(FibrationClass c) {
  switch (c) {
    case FibrationClass::inner:
      return "inner";
    case FibrationClass::kan:
      return "kan";
    case FibrationClass::right:
      return "right";
    case FibrationClass::trivial:
      return "trivial";
  }
  return "?";
}

int default_bound(int dim, int n) { return std::max(dim + 2, n + 2); }

std::vector<SMap> enumerate_maps(const SSetPtr& a, const SSetPtr& x) {
  require_window(*x, a->dim());
  const SimplexTable t = SimplexTable::from_sset(*x, std::max(a->dim(), 0));
  std::vector<SMap> out;
  for (const auto& ids : sorted_maps(*a, t, MapSearch{})) {
    out.emplace_back(a, x, to_exprs(t, ids));
  }
  return out;
}

std::optional<SMap> has_lift(const LiftingSquare& sq) {
  const SMap& i = sq.i;
  const SMap& p = sq.p;
  if (i.source_ptr().get() != sq.top.source_ptr().get() ||
      i.target_ptr().get() != sq.bottom.source_ptr().get() ||
      p.source_ptr().get() != sq.top.target_ptr().get() ||
      p.target_ptr().get() != sq.bottom.target_ptr().get()) {
    throw PreconditionError("lifting square ends do not match");
  }
  if (compose(p, sq.top).assignment() != compose(sq.bottom, i).assignment()) {
    throw PreconditionError("lifting square does not commute");
  }
  const SSet& b = i.target();
  const SSet& a = i.source();
  require_window(p.source(), b.dim());
  require_window(p.target(), b.dim());
  const int top = std::max(b.dim(), 0);
  const SimplexTable tx = SimplexTable::from_sset(p.source(), top);
  const SimplexTable ty = SimplexTable::from_sset(p.target(), top);
  const TableMap pm = table_map(p, tx, ty);

  IdAssignment fixed(sz(b.dim() + 1)), over(sz(b.dim() + 1));
  for (int d = 0; d <= b.dim(); ++d) {
    fixed[sz(d)].assign(b.num_generators(d), -1);
    for (int g = 0; g < static_cast<int>(b.num_generators(d)); ++g) {
      over[sz(d)].push_back(ty.id_of(sq.bottom(GenRef{d, g})));
    }
  }
  for (int d = 0; d <= a.dim(); ++d) {
    for (int g = 0; g < static_cast<int>(a.num_generators(d)); ++g) {
      const SimplexExpr& e = i(GenRef{d, g});
      if (e.is_degenerate()) continue;
      const int want = tx.id_of(sq.top(GenRef{d, g}));
      int& slot = fixed[sz(e.gen().dim)][sz(e.gen().index)];
      if (slot >= 0 && slot != want) return std::nullopt;
      slot = want;
    }
  }
  MapSearch s;
  s.source = &b;
  s.target = &tx;
  s.fixed = std::move(fixed);
  s.projection = &pm;
  s.over = std::move(over);
  std::optional<SMap> lift;
  search_maps(s, [&](const IdAssignment& ids) {
    SMap cand(i.target_ptr(), p.source_ptr(), to_exprs(tx, ids));
    if (compose(cand, i).assignment() != sq.top.assignment()) return true;
    lift = std::move(cand);
    return false;
  });
  return lift;
}

RlpVerdict check_rlp(const SSetPtr& x, Family family, int lo, int hi) {
  require_window(*x, hi);
  RlpVerdict v;
  v.verified_up_to = hi;
  if (hi < 0) return v;
  const SimplexTable tx = SimplexTable::from_sset(*x, hi);
  for (const auto& fm : members(family, lo, hi)) {
    for (const auto& top : sorted_maps(*fm.source, tx, MapSearch{})) {
      MapSearch s;
      s.source = fm.simplex.get();
      s.target = &tx;
      s.fixed = pinned_through(fm, top);
      if (any_solution(s)) continue;
      v.holds = false;
      v.witness = RlpWitness{fm.m, fm.k, SMap(fm.source, x, to_exprs(tx, top)), std::nullopt};
      return v;
    }
  }
  return v;
}

RlpVerdict check_rlp(const SMap& p, Family family, int lo, int hi) {
  require_window(p.source(), hi);
  require_window(p.target(), hi);
  RlpVerdict v;
  v.verified_up_to = hi;
  if (hi < 0) return v;
  const SimplexTable tx = SimplexTable::from_sset(p.source(), hi);
  const SimplexTable ty = SimplexTable::from_sset(p.target(), hi);
  const TableMap pm = table_map(p, tx, ty);
  for (const auto& fm : members(family, lo, hi)) {
    for (const auto& top : sorted_maps(*fm.source, tx, MapSearch{})) {
      const IdAssignment fixed = pinned_through(fm, top);
      MapSearch down;
      down.fixed = pushed(fixed, pm);
      for (const auto& bottom : sorted_maps(*fm.simplex, ty, down)) {
        MapSearch s;
        s.source = fm.simplex.get();
        s.target = &tx;
        s.fixed = fixed;
        s.projection = &pm;
        s.over = bottom;
        if (any_solution(s)) continue;
        v.holds = false;
        v.witness = RlpWitness{fm.m, fm.k, SMap(fm.source, p.source_ptr(), to_exprs(tx, top)),
                               SMap(fm.simplex, p.target_ptr(), to_exprs(ty, bottom))};
        return v;
      }
    }
  }
  return v;
}

RlpVerdict is_quasi_category(const SSetPtr& x, int bound) {
  return check_rlp(x, Family::inner_horn, 2, bound);
}

RlpVerdict is_kan(const SSetPtr& x, int bound) { return check_rlp(x, Family::all_horn, 1, bound); }

RlpVerdict is_n_acyclic(const SSetPtr& x, int n, int bound) {
  if (n < -1) throw RangeError("acyclicity index below -1");
  if (bound <= n) throw PreconditionError("acyclicity check needs a bound above n");
  return check_rlp(x, Family::boundary, n + 1, bound);
}

RlpVerdict is_fibration(const SMap& f, FibrationClass c, int bound) {
  const int lo = c == FibrationClass::trivial ? 0 : c == FibrationClass::inner ? 2 : 1;
  return check_rlp(f, family_of(c), lo, bound);
}

std::string describe(const RlpWitness& w) {
  std::string out = w.k < 0 ? "boundary(" + std::to_string(w.m) + ")"
                            : "horn(" + std::to_string(w.m) + "," + std::to_string(w.k) + ")";
  out += ":";
  const SSet& k = w.top.source();
  for (int d = 0; d <= k.dim(); ++d) {
    for (int g = 0; g < static_cast<int>(k.num_generators(d)); ++g) {
      out += " " + k.name(GenRef{d, g}) + "->" + w.top.target().describe(w.top(GenRef{d, g}));
    }
  }
  if (w.bottom) {
    const SimplexExpr& t = w.bottom->assignment().back().front();
    out += " over " + w.bottom->target().describe(t);
  }
  return out;
}

}  // namespace tqc
