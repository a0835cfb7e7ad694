#include "tqc/simplicial/standard.hpp"

#include <map>

#include "tqc/error.hpp"

namespace tqc::standard {

std::string face_name(std::span<const int> vertices) {
  bool wide = false;
  for (int v : vertices) wide = wide || v >= 10;
  std::string out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (wide && i > 0) out += ',';
    out += std::to_string(vertices[i]);
  }
  return out;
}

SSet subcomplex(int m, const std::function<bool(std::span<const int>)>& keep) {
  if (m < 0) throw RangeError("negative simplex dimension");
  SSet::Builder b;
  std::map<std::vector<int>, GenRef> refs;
  std::vector<int> cur;
  for (int d = 0; d <= m; ++d) {
    auto rec = [&](auto&& self, int start) -> void {
      if (static_cast<int>(cur.size()) == d + 1) {
        if (!keep(cur)) return;
        std::vector<SimplexExpr> faces;
        if (d > 0) {
          for (int i = 0; i <= d; ++i) {
            std::vector<int> f = cur;
            f.erase(f.begin() + i);
            auto it = refs.find(f);
            if (it == refs.end()) throw InvariantError("vertex-set family is not face closed");
            faces.emplace_back(it->second);
          }
        }
        refs.emplace(cur, b.add(face_name(cur), d, std::move(faces)));
        return;
      }
      for (int v = start; v <= m; ++v) {
        cur.push_back(v);
        self(self, v + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
  }
  return std::move(b).build();
}

SSet simplex(int m) {
  return subcomplex(m, [](std::span<const int>) { return true; });
}

SSet boundary(int m) {
  if (m < 0) throw RangeError("negative simplex dimension");
  return subcomplex(m, [m](std::span<const int> s) { return static_cast<int>(s.size()) <= m; });
}

SSet horn(int m, int k) {
  if (m < 1 || k < 0 || k > m) {
    throw RangeError("no horn with m=" + std::to_string(m) + ", k=" + std::to_string(k));
  }
  return subcomplex(m, [m, k](std::span<const int> s) {
    const int n = static_cast<int>(s.size());
    if (n == m + 1) return false;
    if (n == m) {
      for (int v : s) {
        if (v == k) return true;
      }
      return false;
    }
    return true;
  });
}

SSet discrete(const std::vector<std::string>& names) {
  SSet::Builder b;
  for (const auto& n : names) b.add_vertex(n);
  return std::move(b).build();
}

SMap inclusion(SSetPtr sub, SSetPtr simplex) {
  SMap::Assignment a(static_cast<std::size_t>(sub->dim() + 1));
  for (int d = 0; d <= sub->dim(); ++d) {
    for (const auto& g : sub->generators(d)) {
      auto ref = simplex->find(g.name);
      if (!ref) throw RangeError("face '" + g.name + "' missing from the simplex");
      a[static_cast<std::size_t>(d)].emplace_back(*ref);
    }
  }
  return SMap(std::move(sub), std::move(simplex), std::move(a));
}

}  // namespace tqc::standard
