#include "tqc/simplicial/sset.hpp"

#include <string>

#include "tqc/error.hpp"

namespace tqc {

GenRef SSet::Builder::add(std::string name, int dim, std::vector<SimplexExpr> faces) {
  if (dim < 0) throw RangeError("generator '" + name + "' has negative dimension");
  if (gens_.size() <= static_cast<std::size_t>(dim)) gens_.resize(static_cast<std::size_t>(dim) + 1);
  auto& level = gens_[static_cast<std::size_t>(dim)];
  level.push_back(Generator{std::move(name), std::move(faces)});
  return GenRef{dim, static_cast<int>(level.size()) - 1};
}

SSet SSet::Builder::build(std::optional<int> truncated_at) && {
  SSet out;
  out.gens_ = std::move(gens_);
  out.truncated_at_ = truncated_at;
  for (std::size_t d = 0; d < out.gens_.size(); ++d) {
    for (std::size_t i = 0; i < out.gens_[d].size(); ++i) {
      const GenRef ref{static_cast<int>(d), static_cast<int>(i)};
      if (!out.by_name_.emplace(out.gens_[d][i].name, ref).second) {
        throw InvariantError("duplicate generator name '" + out.gens_[d][i].name + "'");
      }
    }
  }
  out.validate();
  return out;
}

std::span<const Generator> SSet::generators(int d) const {
  if (d < 0 || d > dim()) return {};
  return gens_[static_cast<std::size_t>(d)];
}

std::size_t SSet::num_generators(int d) const { return generators(d).size(); }

std::vector<std::size_t> SSet::counts() const {
  std::vector<std::size_t> out;
  out.reserve(gens_.size());
  for (const auto& level : gens_) out.push_back(level.size());
  return out;
}

std::size_t SSet::total_generators() const {
  std::size_t n = 0;
  for (const auto& level : gens_) n += level.size();
  return n;
}

const Generator& SSet::generator(GenRef g) const {
  if (g.dim < 0 || g.dim > dim() || g.index < 0 ||
      static_cast<std::size_t>(g.index) >= gens_[static_cast<std::size_t>(g.dim)].size()) {
    throw RangeError("no generator at dimension " + std::to_string(g.dim) + " index " +
                     std::to_string(g.index));
  }
  return gens_[static_cast<std::size_t>(g.dim)][static_cast<std::size_t>(g.index)];
}

std::optional<GenRef> SSet::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

SimplexExpr SSet::apply(const SimplexExpr& x, std::span<const int> theta) const {
  const int k = x.dim();
  if (theta.empty() || !monotone::is_monotone(theta, k)) {
    throw RangeError("operator is not a monotone map into [" + std::to_string(k) + "]");
  }
  const Monotone sigma = x.surjection();
  Monotone phi(theta.size());
  for (std::size_t t = 0; t < theta.size(); ++t) phi[t] = sigma[theta[t]];
  const auto fact = monotone::factor(phi);

  // Restrict the generator along the injective part, one missing vertex at a
  // time, through the stored faces.
  const GenRef g = x.gen();
  const int j = g.dim;
  SimplexExpr restricted(g);
  if (static_cast<int>(fact.mono.size()) != j + 1) {
    int missing = j;
    for (std::size_t s = fact.mono.size(); s-- > 0;) {
      if (fact.mono[s] != missing) break;
      --missing;
    }
    // `missing` is now the largest vertex of [j] not hit by the mono.
    Monotone shifted(fact.mono.size());
    for (std::size_t s = 0; s < fact.mono.size(); ++s) {
      shifted[s] = fact.mono[s] < missing ? fact.mono[s] : fact.mono[s] - 1;
    }
    restricted = apply(generator(g).faces[static_cast<std::size_t>(missing)], shifted);
  }
  const Monotone tau = restricted.surjection();
  return SimplexExpr::from_surjection(restricted.gen(), monotone::compose(tau, fact.epi));
}

SimplexExpr SSet::face(const SimplexExpr& x, int i) const {
  const int k = x.dim();
  if (k < 1 || i < 0 || i > k) {
    throw RangeError("face d" + std::to_string(i) + " undefined in dimension " + std::to_string(k));
  }
  return apply(x, monotone::coface(k, i));
}

SimplexExpr SSet::degeneracy(const SimplexExpr& x, int i) const {
  const int k = x.dim();
  if (i < 0 || i > k) {
    throw RangeError("degeneracy s" + std::to_string(i) + " undefined in dimension " +
                     std::to_string(k));
  }
  return apply(x, monotone::codegeneracy(k, i));
}

SimplexExpr SSet::normalize(std::span<const FaceDegenOp> word, GenRef g) const {
  generator(g);
  SimplexExpr x(g);
  for (std::size_t t = word.size(); t-- > 0;) {
    const auto& op = word[t];
    x = op.kind == FaceDegenOp::Kind::face ? face(x, op.index) : degeneracy(x, op.index);
  }
  return x;
}

GenRef SSet::vertex(const SimplexExpr& x, int j) const {
  const Monotone at{j};
  return apply(x, at).gen();
}

std::vector<GenRef> SSet::vertices(const SimplexExpr& x) const {
  std::vector<GenRef> out;
  out.reserve(static_cast<std::size_t>(x.dim()) + 1);
  for (int j = 0; j <= x.dim(); ++j) out.push_back(vertex(x, j));
  return out;
}

std::string SSet::describe(const SimplexExpr& x) const {
  if (!x.is_degenerate()) return name(x.gen());
  std::string out;
  for (int i : x.degeneracies()) out += "s" + std::to_string(i);
  return out + "(" + name(x.gen()) + ")";
}

void SSet::validate() const {
  if (!gens_.empty() && gens_.back().empty()) {
    throw InvariantError("top dimension holds no generator");
  }
  if (truncated_at_ && *truncated_at_ < dim()) {
    throw InvariantError("generator above the truncation window " +
                         std::to_string(*truncated_at_));
  }
  for (std::size_t d = 0; d < gens_.size(); ++d) {
    for (const auto& g : gens_[d]) {
      if (g.name.empty()) throw InvariantError("generator with an empty name");
      if (d == 0) {
        if (!g.faces.empty()) throw InvariantError("vertex '" + g.name + "' carries faces");
        continue;
      }
      if (g.faces.size() != d + 1) {
        throw InvariantError("generator '" + g.name + "' needs " + std::to_string(d + 1) +
                             " faces");
      }
      for (std::size_t i = 0; i < g.faces.size(); ++i) {
        const auto& f = g.faces[i];
        const GenRef ref = f.gen();
        const bool exists = ref.dim >= 0 && static_cast<std::size_t>(ref.dim) < d &&
                            ref.index >= 0 &&
                            static_cast<std::size_t>(ref.index) < gens_[ref.dim].size();
        if (!exists || f.dim() != static_cast<int>(d) - 1) {
          throw InvariantError("face d" + std::to_string(i) + " of generator '" + g.name +
                               "' is malformed");
        }
        try {
          SimplexExpr check(ref, f.degeneracies());
        } catch (const RangeError& e) {
          throw InvariantError("face d" + std::to_string(i) + " of generator '" + g.name +
                               "': " + e.what());
        }
      }
    }
  }
  // d_i d_j = d_{j-1} d_i for i < j, checked bottom-up so lower faces are
  // already trusted.
  for (std::size_t d = 2; d < gens_.size(); ++d) {
    for (const auto& g : gens_[d]) {
      for (int j = 1; j <= static_cast<int>(d); ++j) {
        for (int i = 0; i < j; ++i) {
          if (face(g.faces[static_cast<std::size_t>(j)], i) !=
              face(g.faces[static_cast<std::size_t>(i)], j - 1)) {
            throw InvariantError("simplicial identity d" + std::to_string(i) + "d" +
                                 std::to_string(j) + " fails on generator '" + g.name + "'");
          }
        }
      }
    }
  }
}

}  // namespace tqc
