#include "tqc/simplicial/simplex_expr.hpp"

#include <string>

#include "tqc/error.hpp"

namespace tqc {

SimplexExpr::SimplexExpr(GenRef gen, std::vector<int> degeneracies)
    : gen_(gen), degens_(std::move(degeneracies)) {
  // Rightmost letter acts first, on a simplex of dimension gen.dim.
  int at = gen_.dim;
  for (std::size_t t = degens_.size(); t-- > 0;) {
    const int i = degens_[t];
    if (i < 0 || i > at) {
      throw RangeError("degeneracy index " + std::to_string(i) + " out of range at dimension " +
                       std::to_string(at));
    }
    if (t + 1 < degens_.size() && degens_[t] <= degens_[t + 1]) {
      throw RangeError("degeneracy word is not strictly decreasing");
    }
    ++at;
  }
}

SimplexExpr SimplexExpr::from_surjection(GenRef gen, std::span<const int> surjection) {
  std::vector<int> degens;
  for (std::size_t t = surjection.size(); t-- > 1;) {
    if (surjection[t] == surjection[t - 1]) degens.push_back(static_cast<int>(t - 1));
  }
  SimplexExpr out;
  out.gen_ = gen;
  out.degens_ = std::move(degens);
  return out;
}

Monotone SimplexExpr::surjection() const {
  const int k = dim();
  Monotone s(static_cast<std::size_t>(k + 1), 0);
  // degens_ is decreasing; walk it from the back to visit positions in order.
  std::size_t next = degens_.size();
  for (int t = 1; t <= k; ++t) {
    const bool repeat = next > 0 && degens_[next - 1] == t - 1;
    if (repeat) --next;
    s[t] = s[t - 1] + (repeat ? 0 : 1);
  }
  return s;
}

namespace monotone {

Monotone identity(int n) {
  Monotone f(static_cast<std::size_t>(n + 1));
  for (int t = 0; t <= n; ++t) f[t] = t;
  return f;
}

Monotone coface(int n, int i) {
  Monotone f(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) f[t] = t < i ? t : t + 1;
  return f;
}

Monotone codegeneracy(int n, int i) {
  Monotone f(static_cast<std::size_t>(n + 2));
  for (int t = 0; t <= n + 1; ++t) f[t] = t <= i ? t : t - 1;
  return f;
}

Monotone compose(const Monotone& g, const Monotone& f) {
  Monotone h(f.size());
  for (std::size_t t = 0; t < f.size(); ++t) h[t] = g[f[t]];
  return h;
}

bool is_monotone(std::span<const int> f, int target) {
  for (std::size_t t = 0; t < f.size(); ++t) {
    if (f[t] < 0 || f[t] > target) return false;
    if (t > 0 && f[t] < f[t - 1]) return false;
  }
  return true;
}

Factorisation factor(std::span<const int> f) {
  Factorisation out;
  out.epi.reserve(f.size());
  for (std::size_t t = 0; t < f.size(); ++t) {
    if (t == 0 || f[t] != f[t - 1]) out.mono.push_back(f[t]);
    out.epi.push_back(static_cast<int>(out.mono.size()) - 1);
  }
  return out;
}

}  // namespace monotone

}  // namespace tqc
