#include "tqc/simplicial/smap.hpp"

#include <set>
#include <string>

#include "tqc/error.hpp"

namespace tqc {

SMap::SMap(SSetPtr source, SSetPtr target, Assignment assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (!source_ || !target_) throw RangeError("map endpoints must be set");
  const SSet& src = *source_;
  const SSet& tgt = *target_;
  if (src.dim() > tgt.window()) {
    throw WindowError("map source reaches dimension " + std::to_string(src.dim()) +
                      " beyond the target window " + std::to_string(tgt.window()));
  }
  assignment_.resize(static_cast<std::size_t>(src.dim() + 1));
  for (int d = 0; d <= src.dim(); ++d) {
    const auto& level = assignment_[static_cast<std::size_t>(d)];
    if (level.size() != src.num_generators(d)) {
      throw InvariantError("map assignment size mismatch in dimension " + std::to_string(d));
    }
    for (std::size_t i = 0; i < level.size(); ++i) {
      const SimplexExpr& y = level[i];
      const auto& gname = src.generators(d)[i].name;
      if (y.dim() != d) {
        throw InvariantError("image of '" + gname + "' has the wrong dimension");
      }
      try {
        tgt.generator(y.gen());
      } catch (const RangeError&) {
        throw InvariantError("image of '" + gname + "' references a missing generator");
      }
    }
  }
  for (int d = 1; d <= src.dim(); ++d) {
    const auto gens = src.generators(d);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const SimplexExpr& y = assignment_[static_cast<std::size_t>(d)][i];
      for (int f = 0; f <= d; ++f) {
        if ((*this)(gens[i].faces[static_cast<std::size_t>(f)]) != tgt.face(y, f)) {
          throw InvariantError("map does not commute with d" + std::to_string(f) +
                               " on generator '" + gens[i].name + "'");
        }
      }
    }
  }
}

SMap SMap::identity(SSetPtr x) {
  Assignment a(static_cast<std::size_t>(x->dim() + 1));
  for (int d = 0; d <= x->dim(); ++d) {
    for (int i = 0; i < static_cast<int>(x->num_generators(d)); ++i) {
      a[static_cast<std::size_t>(d)].emplace_back(GenRef{d, i});
    }
  }
  return SMap(x, x, std::move(a));
}

const SimplexExpr& SMap::operator()(GenRef g) const {
  source_->generator(g);
  return assignment_[static_cast<std::size_t>(g.dim)][static_cast<std::size_t>(g.index)];
}

SimplexExpr SMap::operator()(const SimplexExpr& x) const {
  const SimplexExpr& image = (*this)(x.gen());
  if (!x.is_degenerate()) return image;
  const Monotone sigma = x.surjection();
  return target_->apply(image, sigma);
}

bool SMap::is_mono() const {
  std::set<GenRef> seen;
  for (const auto& level : assignment_) {
    for (const auto& y : level) {
      if (y.is_degenerate() || !seen.insert(y.gen()).second) return false;
    }
  }
  return true;
}

SMap compose(const SMap& g, const SMap& f) {
  if (f.target_ptr() != g.source_ptr() && f.target_ptr().get() != g.source_ptr().get()) {
    throw RangeError("maps are not composable");
  }
  SMap::Assignment a(f.assignment().size());
  for (std::size_t d = 0; d < a.size(); ++d) {
    for (const auto& y : f.assignment()[d]) a[d].push_back(g(y));
  }
  return SMap(f.source_ptr(), g.target_ptr(), std::move(a));
}

}  // namespace tqc
