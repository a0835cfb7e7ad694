#include "tqc/category/fincat.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tqc/error.hpp"

namespace tqc {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

// Transitive closure of a relation on n points, reflexive.
std::vector<std::vector<bool>> reach(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<bool>> r(sz(n), std::vector<bool>(sz(n), false));
  for (int i = 0; i < n; ++i) r[sz(i)][sz(i)] = true;
  for (auto [a, b] : edges) r[sz(a)][sz(b)] = true;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!r[sz(i)][sz(k)]) continue;
      for (int j = 0; j < n; ++j) {
        if (r[sz(k)][sz(j)]) r[sz(i)][sz(j)] = true;
      }
    }
  }
  return r;
}

}  // namespace

int FinCat::Builder::object(std::string name) {
  objects_.push_back(std::move(name));
  identities_.push_back(-1);
  return static_cast<int>(objects_.size()) - 1;
}

int FinCat::Builder::morphism(std::string name, int src, int tgt) {
  morphisms_.push_back(Morphism{std::move(name), src, tgt});
  return static_cast<int>(morphisms_.size()) - 1;
}

void FinCat::Builder::identity(int obj, int mor) { identities_.at(sz(obj)) = mor; }

void FinCat::Builder::compose(int g, int f, int gf) { table_.emplace_back(g, f, gf); }

FinCat FinCat::Builder::build() && {
  FinCat c;
  c.objects_ = std::move(objects_);
  c.morphisms_ = std::move(morphisms_);
  c.identities_ = std::move(identities_);
  const int n = c.num_morphisms();
  for (const auto& m : c.morphisms_) {
    if (m.src < 0 || m.src >= c.num_objects() || m.tgt < 0 || m.tgt >= c.num_objects()) {
      throw InvariantError("morphism '" + m.name + "' has an unknown endpoint");
    }
  }
  for (int x = 0; x < c.num_objects(); ++x) {
    const int id = c.identities_[sz(x)];
    if (id < 0 || id >= n) throw InvariantError("object '" + c.objects_[sz(x)] + "' has no identity");
    if (c.morphisms_[sz(id)].src != x || c.morphisms_[sz(id)].tgt != x) {
      throw InvariantError("identity of '" + c.objects_[sz(x)] + "' is not an endomorphism");
    }
  }
  c.comp_.assign(sz(n), std::vector<int>(sz(n), -1));
  auto set = [&](int g, int f, int gf) {
    if (g < 0 || g >= n || f < 0 || f >= n || gf < 0 || gf >= n) {
      throw InvariantError("composition entry names an unknown morphism");
    }
    const auto& mg = c.morphisms_[sz(g)];
    const auto& mf = c.morphisms_[sz(f)];
    if (mf.tgt != mg.src) {
      throw InvariantError("composite of '" + mg.name + "' after '" + mf.name +
                           "' given for non-composable morphisms");
    }
    const auto& mgf = c.morphisms_[sz(gf)];
    if (mgf.src != mf.src || mgf.tgt != mg.tgt) {
      throw InvariantError("composite '" + mgf.name + "' has the wrong type");
    }
    int& slot = c.comp_[sz(g)][sz(f)];
    if (slot >= 0 && slot != gf) {
      throw InvariantError("composite of '" + mg.name + "' after '" + mf.name +
                           "' given twice with different values");
    }
    slot = gf;
  };
  for (int f = 0; f < n; ++f) {
    const auto& m = c.morphisms_[sz(f)];
    set(c.identities_[sz(m.tgt)], f, f);
    set(f, c.identities_[sz(m.src)], f);
  }
  for (auto [g, f, gf] : table_) set(g, f, gf);
  c.validate();
  return c;
}

bool FinCat::is_identity(int f) const { return identity(morphism(f).src) == f; }

int FinCat::compose(int g, int f) const {
  const int v = comp_.at(sz(g)).at(sz(f));
  if (v < 0) {
    throw RangeError("'" + morphism(g).name + "' and '" + morphism(f).name + "' do not compose");
  }
  return v;
}

std::optional<int> FinCat::find_object(std::string_view name) const {
  for (int x = 0; x < num_objects(); ++x) {
    if (objects_[sz(x)] == name) return x;
  }
  return std::nullopt;
}

std::optional<int> FinCat::find_morphism(std::string_view name) const {
  for (int f = 0; f < num_morphisms(); ++f) {
    if (morphisms_[sz(f)].name == name) return f;
  }
  return std::nullopt;
}

std::vector<int> FinCat::hom(int a, int b) const {
  std::vector<int> out;
  for (int f = 0; f < num_morphisms(); ++f) {
    if (morphisms_[sz(f)].src == a && morphisms_[sz(f)].tgt == b) out.push_back(f);
  }
  return out;
}

std::optional<int> FinCat::inverse(int f) const {
  const auto& m = morphism(f);
  for (int g : hom(m.tgt, m.src)) {
    if (compose(g, f) == identity(m.src) && compose(f, g) == identity(m.tgt)) return g;
  }
  return std::nullopt;
}

void FinCat::validate() const {
  std::set<std::string> names;
  for (const auto& o : objects_) {
    if (!names.insert("o:" + o).second) throw InvariantError("duplicate object '" + o + "'");
  }
  for (const auto& m : morphisms_) {
    if (!names.insert("m:" + m.name).second) throw InvariantError("duplicate morphism '" + m.name + "'");
  }
  const int n = num_morphisms();
  for (int g = 0; g < n; ++g) {
    for (int f = 0; f < n; ++f) {
      const bool composable = morphisms_[sz(f)].tgt == morphisms_[sz(g)].src;
      if (composable && comp_[sz(g)][sz(f)] < 0) {
        throw InvariantError("composite of '" + morphisms_[sz(g)].name + "' after '" +
                             morphisms_[sz(f)].name + "' is missing");
      }
    }
  }
  for (int h = 0; h < n; ++h) {
    for (int g = 0; g < n; ++g) {
      if (morphisms_[sz(g)].tgt != morphisms_[sz(h)].src) continue;
      for (int f = 0; f < n; ++f) {
        if (morphisms_[sz(f)].tgt != morphisms_[sz(g)].src) continue;
        if (compose(h, compose(g, f)) != compose(compose(h, g), f)) {
          throw InvariantError("associativity fails on '" + morphisms_[sz(h)].name + "', '" +
                               morphisms_[sz(g)].name + "', '" + morphisms_[sz(f)].name + "'");
        }
      }
    }
  }
}

FinPoset::FinPoset(std::vector<std::string> elements, const std::vector<std::pair<int, int>>& leq)
    : elements_(std::move(elements)) {
  const int n = size();
  leq_.assign(sz(n), std::vector<bool>(sz(n), false));
  for (int i = 0; i < n; ++i) leq_[sz(i)][sz(i)] = true;
  for (auto [a, b] : leq) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw InvariantError("order pair names an unknown element");
    leq_[sz(a)][sz(b)] = true;
  }
  std::set<std::string> names(elements_.begin(), elements_.end());
  if (static_cast<int>(names.size()) != n) throw InvariantError("duplicate poset element");
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && leq_[sz(a)][sz(b)] && leq_[sz(b)][sz(a)]) {
        throw InvariantError("antisymmetry fails on '" + elements_[sz(a)] + "', '" +
                             elements_[sz(b)] + "'");
      }
      for (int c = 0; c < n; ++c) {
        if (leq_[sz(a)][sz(b)] && leq_[sz(b)][sz(c)] && !leq_[sz(a)][sz(c)]) {
          throw InvariantError("transitivity fails on '" + elements_[sz(a)] + "' <= '" +
                               elements_[sz(b)] + "' <= '" + elements_[sz(c)] + "'");
        }
      }
    }
  }
}

std::optional<int> FinPoset::find(std::string_view name) const {
  for (int x = 0; x < size(); ++x) {
    if (elements_[sz(x)] == name) return x;
  }
  return std::nullopt;
}

std::vector<std::pair<int, int>> FinPoset::strict_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a) {
    for (int b = 0; b < size(); ++b) {
      if (a != b && leq(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

bool order_isomorphic(const FinPoset& p, const FinPoset& q) {
  if (p.size() != q.size()) return false;
  std::vector<int> perm(sz(p.size()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int a = 0; ok && a < p.size(); ++a) {
      for (int b = 0; ok && b < p.size(); ++b) ok = p.leq(a, b) == q.leq(perm[sz(a)], perm[sz(b)]);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

CatFunctor::CatFunctor(FinCatPtr source, FinCatPtr target, std::vector<int> on_objects,
                       std::vector<int> on_morphisms)
    : source_(std::move(source)),
      target_(std::move(target)),
      objects_(std::move(on_objects)),
      morphisms_(std::move(on_morphisms)) {
  const FinCat& s = *source_;
  const FinCat& t = *target_;
  if (static_cast<int>(objects_.size()) != s.num_objects() ||
      static_cast<int>(morphisms_.size()) != s.num_morphisms()) {
    throw InvariantError("functor tables do not cover the source");
  }
  for (int x : objects_) {
    if (x < 0 || x >= t.num_objects()) throw InvariantError("functor sends an object outside the target");
  }
  for (int f = 0; f < s.num_morphisms(); ++f) {
    const int g = morphisms_[sz(f)];
    if (g < 0 || g >= t.num_morphisms()) throw InvariantError("functor sends a morphism outside the target");
    if (t.morphism(g).src != object(s.morphism(f).src) || t.morphism(g).tgt != object(s.morphism(f).tgt)) {
      throw InvariantError("functor does not preserve the type of '" + s.morphism(f).name + "'");
    }
  }
  for (int x = 0; x < s.num_objects(); ++x) {
    if (morphisms_[sz(s.identity(x))] != t.identity(object(x))) {
      throw InvariantError("functor does not preserve the identity of '" + s.object_name(x) + "'");
    }
  }
  for (int g = 0; g < s.num_morphisms(); ++g) {
    for (int f = 0; f < s.num_morphisms(); ++f) {
      if (s.morphism(f).tgt != s.morphism(g).src) continue;
      if ((*this)(s.compose(g, f)) != t.compose((*this)(g), (*this)(f))) {
        throw InvariantError("functor does not preserve the composite of '" + s.morphism(g).name +
                             "' after '" + s.morphism(f).name + "'");
      }
    }
  }
}

CatFunctor CatFunctor::identity(FinCatPtr c) {
  std::vector<int> obj(sz(c->num_objects())), mor(sz(c->num_morphisms()));
  std::iota(obj.begin(), obj.end(), 0);
  std::iota(mor.begin(), mor.end(), 0);
  return CatFunctor(c, c, std::move(obj), std::move(mor));
}

CatFunctor compose(const CatFunctor& g, const CatFunctor& f) {
  if (f.target_ptr().get() != g.source_ptr().get()) throw RangeError("functors are not composable");
  std::vector<int> obj, mor;
  for (int x = 0; x < f.source().num_objects(); ++x) obj.push_back(g.object(f.object(x)));
  for (int m = 0; m < f.source().num_morphisms(); ++m) mor.push_back(g(f(m)));
  return CatFunctor(f.source_ptr(), g.target_ptr(), std::move(obj), std::move(mor));
}

bool is_fully_faithful(const CatFunctor& f) {
  const FinCat& s = f.source();
  const FinCat& t = f.target();
  for (int a = 0; a < s.num_objects(); ++a) {
    for (int b = 0; b < s.num_objects(); ++b) {
      const auto src = s.hom(a, b);
      const auto tgt = t.hom(f.object(a), f.object(b));
      if (src.size() != tgt.size()) return false;
      std::set<int> img;
      for (int m : src) img.insert(f(m));
      if (img.size() != tgt.size()) return false;
    }
  }
  return true;
}

bool is_essentially_surjective(const CatFunctor& f) {
  const FinCat& s = f.source();
  const FinCat& t = f.target();
  for (int y = 0; y < t.num_objects(); ++y) {
    bool hit = false;
    for (int a = 0; !hit && a < s.num_objects(); ++a) {
      for (int m : t.hom(f.object(a), y)) {
        if (t.is_iso(m)) {
          hit = true;
          break;
        }
      }
    }
    if (!hit) return false;
  }
  return true;
}

bool is_equivalence(const CatFunctor& f) { return is_fully_faithful(f) && is_essentially_surjective(f); }

FinPoset preorder_reflection(const std::vector<std::string>& names,
                             const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(names.size());
  const auto r = reach(n, edges);
  std::vector<int> cls(sz(n), -1);
  std::vector<std::string> out;
  std::vector<int> rep;
  for (int x = 0; x < n; ++x) {
    if (cls[sz(x)] >= 0) continue;
    std::string name;
    for (int y = x; y < n; ++y) {
      if (r[sz(x)][sz(y)] && r[sz(y)][sz(x)]) {
        cls[sz(y)] = static_cast<int>(out.size());
        name += (name.empty() ? "" : "~") + names[sz(y)];
      }
    }
    out.push_back(std::move(name));
    rep.push_back(x);
  }
  std::vector<std::pair<int, int>> leq;
  for (std::size_t a = 0; a < rep.size(); ++a) {
    for (std::size_t b = 0; b < rep.size(); ++b) {
      if (a != b && r[sz(rep[a])][sz(rep[b])]) leq.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return FinPoset(std::move(out), leq);
}

std::vector<int> preorder_classes(int n, const std::vector<std::pair<int, int>>& edges) {
  const auto r = reach(n, edges);
  std::vector<int> cls(sz(n), -1);
  int next = 0;
  for (int x = 0; x < n; ++x) {
    if (cls[sz(x)] >= 0) continue;
    for (int y = x; y < n; ++y) {
      if (r[sz(x)][sz(y)] && r[sz(y)][sz(x)]) cls[sz(y)] = next;
    }
    ++next;
  }
  return cls;
}

FinPoset poset_reflection(const FinCat& c) {
  std::vector<std::string> names;
  for (int x = 0; x < c.num_objects(); ++x) names.push_back(c.object_name(x));
  std::vector<std::pair<int, int>> edges;
  for (int f = 0; f < c.num_morphisms(); ++f) edges.emplace_back(c.morphism(f).src, c.morphism(f).tgt);
  return preorder_reflection(names, edges);
}

FinCat core(const FinCat& c) {
  FinCat::Builder b;
  for (int x = 0; x < c.num_objects(); ++x) b.object(c.object_name(x));
  std::vector<int> idx(sz(c.num_morphisms()), -1);
  for (int f = 0; f < c.num_morphisms(); ++f) {
    if (c.is_iso(f)) idx[sz(f)] = b.morphism(c.morphism(f).name, c.morphism(f).src, c.morphism(f).tgt);
  }
  for (int x = 0; x < c.num_objects(); ++x) b.identity(x, idx[sz(c.identity(x))]);
  for (int g = 0; g < c.num_morphisms(); ++g) {
    for (int f = 0; f < c.num_morphisms(); ++f) {
      if (idx[sz(g)] < 0 || idx[sz(f)] < 0 || c.morphism(f).tgt != c.morphism(g).src) continue;
      b.compose(idx[sz(g)], idx[sz(f)], idx[sz(c.compose(g, f))]);
    }
  }
  return std::move(b).build();
}

namespace catalog {

FinCat from_poset(const FinPoset& p) {
  FinCat::Builder b;
  for (int x = 0; x < p.size(); ++x) b.object(p.name(x));
  std::vector<std::vector<int>> arrow(sz(p.size()), std::vector<int>(sz(p.size()), -1));
  for (int x = 0; x < p.size(); ++x) {
    for (int y = 0; y < p.size(); ++y) {
      if (!p.leq(x, y)) continue;
      const std::string name = x == y ? "id_" + p.name(x) : p.name(x) + "<" + p.name(y);
      arrow[sz(x)][sz(y)] = b.morphism(name, x, y);
    }
    b.identity(x, arrow[sz(x)][sz(x)]);
  }
  for (int x = 0; x < p.size(); ++x) {
    for (int y = 0; y < p.size(); ++y) {
      for (int z = 0; z < p.size(); ++z) {
        if (p.leq(x, y) && p.leq(y, z)) b.compose(arrow[sz(y)][sz(z)], arrow[sz(x)][sz(y)], arrow[sz(x)][sz(z)]);
      }
    }
  }
  return std::move(b).build();
}

FinCat chain(int n) {
  if (n < 0) throw RangeError("negative ordinal");
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> leq;
  for (int i = 0; i <= n; ++i) {
    names.push_back(std::to_string(i));
    for (int j = i + 1; j <= n; ++j) leq.emplace_back(i, j);
  }
  return from_poset(FinPoset(std::move(names), leq));
}

FinCat parallel_pair() {
  FinCat::Builder b;
  const int x = b.object("x");
  const int y = b.object("y");
  b.identity(x, b.morphism("id_x", x, x));
  b.identity(y, b.morphism("id_y", y, y));
  b.morphism("a", x, y);
  b.morphism("b", x, y);
  return std::move(b).build();
}

FinCat free_isomorphism() {
  FinCat::Builder b;
  const int x = b.object("x");
  const int y = b.object("y");
  const int ix = b.morphism("id_x", x, x);
  const int iy = b.morphism("id_y", y, y);
  b.identity(x, ix);
  b.identity(y, iy);
  const int f = b.morphism("f", x, y);
  const int g = b.morphism("g", y, x);
  b.compose(g, f, ix);
  b.compose(f, g, iy);
  return std::move(b).build();
}

FinCat cyclic_group(int n) {
  if (n < 1) throw RangeError("group order must be positive");
  FinCat::Builder b;
  const int o = b.object("*");
  std::vector<int> el;
  for (int k = 0; k < n; ++k) {
    el.push_back(b.morphism(k == 0 ? "e" : k == 1 ? "g" : "g" + std::to_string(k), o, o));
  }
  b.identity(o, el[0]);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) b.compose(el[sz(i)], el[sz(j)], el[sz((i + j) % n)]);
  }
  return std::move(b).build();
}

FinCat codiscrete(const std::vector<std::string>& objects) {
  FinCat::Builder b;
  const int n = static_cast<int>(objects.size());
  for (const auto& o : objects) b.object(o);
  std::vector<std::vector<int>> arrow(sz(n), std::vector<int>(sz(n)));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      arrow[sz(x)][sz(y)] =
          b.morphism(x == y ? "id_" + objects[sz(x)] : objects[sz(x)] + ">" + objects[sz(y)], x, y);
    }
    b.identity(x, arrow[sz(x)][sz(x)]);
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) b.compose(arrow[sz(y)][sz(z)], arrow[sz(x)][sz(y)], arrow[sz(x)][sz(z)]);
    }
  }
  return std::move(b).build();
}

FinCat opposite_arrows() {
  FinCat::Builder b;
  const int x = b.object("x");
  const int y = b.object("y");
  b.identity(x, b.morphism("id_x", x, x));
  b.identity(y, b.morphism("id_y", y, y));
  const int f = b.morphism("f", x, y);
  const int g = b.morphism("g", y, x);
  const int gf = b.morphism("gf", x, x);
  const int fg = b.morphism("fg", y, y);
  b.compose(g, f, gf);
  b.compose(f, g, fg);
  b.compose(f, gf, f);
  b.compose(gf, g, g);
  b.compose(g, fg, g);
  b.compose(fg, f, f);
  b.compose(gf, gf, gf);
  b.compose(fg, fg, fg);
  return std::move(b).build();
}

FinCat idempotent() {
  FinCat::Builder b;
  const int o = b.object("*");
  const int one = b.morphism("1", o, o);
  b.identity(o, one);
  const int e = b.morphism("e", o, o);
  b.compose(e, e, e);
  return std::move(b).build();
}

std::vector<Entry> corpus() {
  auto e = [](std::string name, FinCat c) { return Entry{std::move(name), std::make_shared<const FinCat>(std::move(c))}; };
  std::vector<Entry> out;
  for (int n = 0; n <= 3; ++n) out.push_back(e("[" + std::to_string(n) + "]", chain(n)));
  out.push_back(e("parallel-pair", parallel_pair()));
  out.push_back(e("free-iso", free_isomorphism()));
  out.push_back(e("Z/2", cyclic_group(2)));
  out.push_back(e("Z/3", cyclic_group(3)));
  out.push_back(e("opposite-arrows", opposite_arrows()));
  out.push_back(e("codiscrete-2", codiscrete({"a", "b"})));
  out.push_back(e("codiscrete-3", codiscrete({"a", "b", "c"})));
  out.push_back(e("idempotent", idempotent()));
  return out;
}

}  // namespace catalog

}  // namespace tqc
