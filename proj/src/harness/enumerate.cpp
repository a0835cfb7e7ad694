#include "tqc/harness/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "tqc/error.hpp"
#include "tqc/simplicial/standard.hpp"

namespace tqc {

namespace {

std::vector<int> members(unsigned mask) {
  std::vector<int> v;
  for (int i = 0; mask >> i; ++i) {
    if (mask >> i & 1u) v.push_back(i);
  }
  return v;
}

}  // namespace

std::string Subcomplex::name() const {
  std::vector<unsigned> order = faces;
  std::sort(order.begin(), order.end(), [](unsigned a, unsigned b) {
    return std::pair(std::popcount(a), members(a)) < std::pair(std::popcount(b), members(b));
  });
  std::string out = "{";
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) out += ",";
    out += standard::face_name(members(order[i]));
  }
  return out + "}";
}

std::vector<Subcomplex> enumerate_subcomplexes(int n) {
  if (n < 0 || n > 3) throw RangeError("enumerate_subcomplexes: n must lie in 0..3");
  // Faces in order of size; a face may join once all of its facets have.
  std::vector<unsigned> order;
  for (unsigned f = 1; f < (1u << (n + 1)); ++f) order.push_back(f);
  std::stable_sort(order.begin(), order.end(), [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });

  std::vector<std::vector<unsigned>> found;
  std::vector<unsigned> chosen;
  std::vector<char> in(1u << (n + 1), 0);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == order.size()) {
      if (!chosen.empty()) found.push_back(chosen);
      return;
    }
    go(i + 1);
    const unsigned f = order[i];
    if (std::popcount(f) > 1) {
      for (int v : members(f)) {
        if (!in[f & ~(1u << v)]) return;
      }
    }
    in[f] = 1;
    chosen.push_back(f);
    go(i + 1);
    chosen.pop_back();
    in[f] = 0;
  };
  go(0);

  for (auto& s : found) std::sort(s.begin(), s.end());
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  std::vector<Subcomplex> out;
  for (auto& faces : found) {
    std::vector<char> keep(1u << (n + 1), 0);
    for (unsigned f : faces) keep[f] = 1;
    auto obj = share(standard::subcomplex(n, [&](std::span<const int> vs) {
      unsigned m = 0;
      for (int v : vs) m |= 1u << v;
      return keep[m] != 0;
    }));
    out.push_back(Subcomplex{n, std::move(faces), std::move(obj)});
  }
  return out;
}

std::vector<FinPoset> enumerate_posets(int max_size) {
  if (max_size < 1 || max_size > 4) throw RangeError("enumerate_posets: size must lie in 1..4");
  std::vector<FinPoset> out;
  for (int k = 1; k <= max_size; ++k) {
    std::vector<std::string> names;
    for (int i = 0; i < k; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        if (a != b) pairs.emplace_back(a, b);
      }
    }
    const std::size_t first = out.size();
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
      std::vector<std::vector<char>> le(static_cast<std::size_t>(k), std::vector<char>(static_cast<std::size_t>(k), 0));
      std::vector<std::pair<int, int>> leq;
      for (std::size_t t = 0; t < pairs.size(); ++t) {
        if (mask >> t & 1u) {
          le[static_cast<std::size_t>(pairs[t].first)][static_cast<std::size_t>(pairs[t].second)] = 1;
          leq.push_back(pairs[t]);
        }
      }
      bool ok = true;
      for (int a = 0; a < k && ok; ++a) {
        for (int b = 0; b < k && ok; ++b) {
          if (a == b || !le[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) continue;
          if (le[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]) ok = false;
          for (int c = 0; c < k && ok; ++c) {
            if (c != a && le[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] &&
                !le[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)]) {
              ok = false;
            }
          }
        }
      }
      if (!ok) continue;
      FinPoset p(names, leq);
      const bool seen = std::any_of(out.begin() + static_cast<std::ptrdiff_t>(first), out.end(),
                                    [&](const FinPoset& q) { return order_isomorphic(p, q); });
      if (!seen) out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace tqc
