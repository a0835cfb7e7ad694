#include "tqc/simplicial/map_search.hpp"

#include <algorithm>
#include <string>

#include "tqc/error.hpp"

namespace tqc {

int evaluate(const SimplexTable& target, const IdAssignment& a, const SimplexExpr& x) {
  const GenRef g = x.gen();
  const int id = a[static_cast<std::size_t>(g.dim)][static_cast<std::size_t>(g.index)];
  return target.degenerate(g.dim, id, x.degeneracies());
}

std::size_t search_maps(const MapSearch& s, const std::function<bool(const IdAssignment&)>& visit) {
  const SSet& src = *s.source;
  const SimplexTable& tgt = *s.target;
  if (src.dim() > tgt.top()) {
    throw WindowError("map search needs target simplices through dimension " +
                      std::to_string(src.dim()));
  }
  // A generator is placed right after the last vertex it touches, so that
  // higher simplices prune partial assignments early.
  std::vector<GenRef> order;
  IdAssignment a(static_cast<std::size_t>(src.dim() + 1));
  std::vector<std::vector<int>> key(static_cast<std::size_t>(src.dim() + 1));
  for (int d = 0; d <= src.dim(); ++d) {
    a[static_cast<std::size_t>(d)].assign(src.num_generators(d), -1);
    auto& kd = key[static_cast<std::size_t>(d)];
    for (int i = 0; i < static_cast<int>(src.num_generators(d)); ++i) {
      order.push_back({d, i});
      int k = d == 0 ? i : 0;
      for (const auto& f : src.generator({d, i}).faces) {
        k = std::max(k, key[static_cast<std::size_t>(f.gen().dim)]
                           [static_cast<std::size_t>(f.gen().index)]);
      }
      kd.push_back(k);
    }
  }
  std::stable_sort(order.begin(), order.end(), [&](GenRef x, GenRef y) {
    return key[static_cast<std::size_t>(x.dim)][static_cast<std::size_t>(x.index)] <
           key[static_cast<std::size_t>(y.dim)][static_cast<std::size_t>(y.index)];
  });
  auto pinned = [&](GenRef g) {
    if (s.fixed.empty()) return -1;
    return s.fixed[static_cast<std::size_t>(g.dim)][static_cast<std::size_t>(g.index)];
  };
  std::size_t found = 0;
  bool stop = false;
  std::vector<std::vector<int>> face_buf(order.size());
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == order.size()) {
      ++found;
      if (!visit(a)) stop = true;
      return;
    }
    const GenRef g = order[pos];
    const Generator& gen = src.generator(g);
    auto& faces = face_buf[pos];
    faces.clear();
    for (const auto& f : gen.faces) faces.push_back(evaluate(tgt, a, f));
    auto& slot = a[static_cast<std::size_t>(g.dim)][static_cast<std::size_t>(g.index)];
    auto admissible = [&](int c) {
      if (!s.projection) return true;
      const int want = s.over[static_cast<std::size_t>(g.dim)][static_cast<std::size_t>(g.index)];
      return (*s.projection)[static_cast<std::size_t>(g.dim)][static_cast<std::size_t>(c)] == want;
    };
    if (const int p = pinned(g); p >= 0) {
      const auto pf = tgt.faces(g.dim, p);
      if (std::equal(pf.begin(), pf.end(), faces.begin(), faces.end()) && admissible(p)) {
        slot = p;
        self(self, pos + 1);
      }
      slot = -1;
      return;
    }
    for (int c : tgt.with_faces(g.dim, faces)) {
      if (!admissible(c)) continue;
      slot = c;
      self(self, pos + 1);
      if (stop) break;
    }
    slot = -1;
  };
  rec(rec, 0);
  return found;
}

SMap assignment_to_smap(SSetPtr source, SSetPtr target,
                        const std::vector<std::vector<SimplexExpr>>& tgt_exprs,
                        const IdAssignment& a) {
  SMap::Assignment out(a.size());
  for (std::size_t d = 0; d < a.size(); ++d) {
    for (int id : a[d]) out[d].push_back(tgt_exprs[d][static_cast<std::size_t>(id)]);
  }
  return SMap(std::move(source), std::move(target), std::move(out));
}

}  // namespace tqc
