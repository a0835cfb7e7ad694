#include <catch_amalgamated.hpp>

#include "tqc/error.hpp"
#include "tqc/simplicial/constructions.hpp"
#include "tqc/simplicial/map_search.hpp"
#include "tqc/simplicial/standard.hpp"
#include "tqc/simplicial/table.hpp"

using namespace tqc;

namespace {

using Counts = std::vector<std::size_t>;

// Monotone maps [k] -> [n], lexicographic.
std::vector<std::vector<int>> monotone_maps(int k, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int lo) -> void {
    if (static_cast<int>(cur.size()) == k + 1) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= n; ++v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Nondegenerate k-simplices of Delta^p x Delta^q: pairs of monotone maps
// with no position where both components stall.
std::size_t product_oracle(int p, int q, int k) {
  std::size_t n = 0;
  for (const auto& f : monotone_maps(k, p)) {
    for (const auto& g : monotone_maps(k, q)) {
      bool nondeg = true;
      for (int t = 0; t < k; ++t) {
        if (f[t] == f[t + 1] && g[t] == g[t + 1]) nondeg = false;
      }
      if (nondeg) ++n;
    }
  }
  return n;
}

void check_table(const SSet& x, int top) {
  SimplexTable::from_sset(x, top).check_identities();
}

}  // namespace

TEST_CASE("normal form of face and degeneracy words") {
  SSet::Builder b;
  const GenRef v = b.add_vertex("v");
  const SSet x = std::move(b).build();
  using K = FaceDegenOp::Kind;
  const FaceDegenOp d1s0[] = {{K::face, 1}, {K::degeneracy, 0}};
  const FaceDegenOp d0s0[] = {{K::face, 0}, {K::degeneracy, 0}};
  const FaceDegenOp s0s0[] = {{K::degeneracy, 0}, {K::degeneracy, 0}};
  CHECK(x.normalize(d1s0, v) == SimplexExpr(v));
  CHECK(x.normalize(d0s0, v) == SimplexExpr(v));
  CHECK(x.normalize(s0s0, v) == SimplexExpr(v, {1, 0}));
  CHECK(x.describe(x.normalize(s0s0, v)) == "s1s0(v)");
  const FaceDegenOp bad[] = {{K::face, 0}};
  CHECK_THROWS_AS(x.normalize(bad, v), RangeError);
  CHECK_THROWS_AS(SimplexExpr(v, {0, 1}), RangeError);
  CHECK_THROWS_AS(SimplexExpr(v, {1}), RangeError);
}

TEST_CASE("normalisation is idempotent on every simplex of small objects") {
  for (const SSet& x : {standard::simplex(3), standard::horn(3, 1), standard::boundary(2)}) {
    const SimplexTable t = SimplexTable::from_sset(x, 4);
    for (int k = 0; k <= 4; ++k) {
      for (int id = 0; id < static_cast<int>(t.size(k)); ++id) {
        const SimplexExpr& e = t.expr(k, id);
        CHECK(SimplexExpr::from_surjection(e.gen(), e.surjection()) == e);
        CHECK(x.apply(e, monotone::identity(k)) == e);
      }
    }
    t.check_identities();
  }
}

TEST_CASE("standard simplicial sets") {
  CHECK(standard::simplex(2).counts() == Counts{3, 3, 1});
  CHECK(standard::boundary(2).counts() == Counts{3, 3});
  CHECK(standard::horn(2, 1).counts() == Counts{3, 2});
  CHECK(standard::boundary(0).empty());
  CHECK(standard::discrete({"a", "b"}).counts() == Counts{2});
  CHECK_THROWS_AS(standard::horn(2, 3), RangeError);
  CHECK_THROWS_AS(standard::horn(0, 0), RangeError);
  // Total simplices of Delta^3 in degree k are monotone maps [k] -> [3].
  const SimplexTable t = SimplexTable::from_sset(standard::simplex(3), 5);
  for (int k = 0; k <= 5; ++k) CHECK(t.size(k) == monotone_maps(k, 3).size());
}

TEST_CASE("invalid presentations are rejected with the generator named") {
  SSet::Builder b;
  const GenRef x = b.add_vertex("x");
  const GenRef y = b.add_vertex("y");
  const GenRef e = b.add("e", 1, {SimplexExpr(y), SimplexExpr(x)});
  b.add("t", 2, {SimplexExpr(e), SimplexExpr(e), SimplexExpr(e)});
  try {
    std::move(b).build();
    FAIL("expected an invariant error");
  } catch (const InvariantError& err) {
    CHECK(std::string(err.what()).find("'t'") != std::string::npos);
  }
}

TEST_CASE("products") {
  auto d1 = share(standard::simplex(1));
  const Product p = product(d1, d1);
  CHECK(p.object->counts() == Counts{4, 5, 2});
  for (int k = 0; k <= 2; ++k) {
    CHECK(p.object->num_generators(k) == product_oracle(1, 1, k));
  }
  auto d2 = share(standard::simplex(2));
  const Product q = product(d2, d1);
  for (int k = 0; k <= 3; ++k) {
    CHECK(q.object->num_generators(k) == product_oracle(2, 1, k));
  }
  check_table(*q.object, 4);

  auto pt = share(standard::simplex(0));
  const auto b = share(standard::horn(2, 0));
  CHECK(is_isomorphic(product(pt, b).object, b));
  CHECK(product(share(SSet{}), b).object->empty());
  CHECK(compose(p.pr1, SMap::identity(p.object)).assignment() == p.pr1.assignment());
}

TEST_CASE("pushouts") {
  auto ends = share(standard::boundary(1));
  auto d1 = share(standard::simplex(1));
  const SMap i = standard::inclusion(ends, d1);
  const Pushout circle = pushout(i, i);
  CHECK(circle.object->counts() == Counts{2, 2});
  CHECK(compose(circle.leg_b, i).assignment() == compose(circle.leg_c, i).assignment());

  auto c = share(standard::horn(2, 1));
  const SMap g = standard::inclusion(share(standard::simplex(0)), c);
  const Pushout trivial = pushout(SMap::identity(g.source_ptr()), g);
  CHECK(is_isomorphic(trivial.object, c));

  // Induced map back out of the circle to a point.
  auto pt = share(standard::simplex(0));
  SMap to_pt(d1, pt, {{SimplexExpr(GenRef{0, 0}), SimplexExpr(GenRef{0, 0})},
                      {SimplexExpr(GenRef{0, 0}, {0})}});
  const SMap u = induced(circle, to_pt, to_pt);
  CHECK(u.assignment()[1].size() == 2);
}

TEST_CASE("skeleta") {
  auto d2 = share(standard::simplex(2));
  CHECK(is_isomorphic(skeleton(d2, 1).object, share(standard::boundary(2))));
  CHECK(is_isomorphic(skeleton(d2, 5).object, d2));
  CHECK(skeleton(d2, -1).object->empty());
}

TEST_CASE("coskeleta") {
  auto ab = share(standard::discrete({"a", "b"}));
  const Coskeleton c = coskeleton(ab, 0, 2);
  // (cosk_0 X)_m = X_0^{m+1}; nondegenerate tuples have no adjacent repeats.
  CHECK(c.object->counts() == Counts{2, 2, 2});
  CHECK(c.object->truncated_at() == 2);
  CHECK(is_n_bijective(c.unit, 0));

  auto pt = share(standard::simplex(0));
  const Coskeleton cp = coskeleton(pt, 0, 3);
  CHECK(is_isomorphic(cp.object, truncate(pt, 3)));

  auto d3 = share(standard::simplex(3));
  for (int n = 0; n <= 2; ++n) {
    const Coskeleton cn = coskeleton(d3, n, 4);
    CHECK(is_n_bijective(cn.unit, n));
    SimplexTable::from_sset(*cn.object, 4).check_identities();
  }
  // Delta^3 is 1-coskeletal as the nerve of a poset.
  CHECK(is_n_bijective(coskeleton(d3, 1, 4).unit, 4));
  CHECK(!is_n_bijective(coskeleton(share(standard::boundary(2)), 1, 3).unit, 2));
}

TEST_CASE("joins") {
  auto d0 = share(standard::simplex(0));
  auto d1 = share(standard::simplex(1));
  auto d2 = share(standard::simplex(2));
  CHECK(is_isomorphic(join(d1, d0).object, d2));
  CHECK(is_isomorphic(join(d1, d1).object, share(standard::simplex(3))));
  CHECK(is_isomorphic(join(share(SSet{}), d2).object, d2));
  CHECK(is_isomorphic(join(join(d0, d0).object, d0).object, d2));
  check_table(*join(share(standard::boundary(2)), d1).object, 5);
}

TEST_CASE("pushout-join of a boundary inclusion is the next boundary inclusion") {
  auto empty = share(SSet{});
  auto d0 = share(standard::simplex(0));
  for (int m = 1; m <= 3; ++m) {
    auto bd = share(standard::boundary(m));
    auto sx = share(standard::simplex(m));
    const SMap i = standard::inclusion(bd, sx);
    const SMap e = SMap(empty, d0, {});
    const Join bd_e = join(bd, empty);
    const Join sx_e = join(sx, empty);
    const Join bd_0 = join(bd, d0);
    const Join sx_0 = join(sx, d0);
    const SMap top = join_maps(SMap::identity(bd), e, bd_e, bd_0);
    const SMap left = join_maps(i, SMap::identity(empty), bd_e, sx_e);
    const Pushout po = pushout(top, left);
    const SMap corner = induced(po, join_maps(i, SMap::identity(d0), bd_0, sx_0),
                                join_maps(SMap::identity(sx), e, sx_e, sx_0));
    auto big_bd = share(standard::boundary(m + 1));
    auto big_sx = share(standard::simplex(m + 1));
    const auto src_iso = is_isomorphic(po.object, big_bd);
    const auto tgt_iso = is_isomorphic(sx_0.object, big_sx);
    REQUIRE(src_iso);
    REQUIRE(tgt_iso);
    CHECK(is_isomorphic_mono(corner, standard::inclusion(big_bd, big_sx)));
    CHECK_FALSE(is_isomorphic_mono(corner, standard::inclusion(share(standard::horn(m + 1, 0)), big_sx)));
  }
}

TEST_CASE("slices") {
  auto d0 = share(standard::simplex(0));
  CHECK(is_isomorphic(slice(d0, GenRef{0, 0}).object, d0));
  auto d1 = share(standard::simplex(1));
  const Slice s = slice(d1, GenRef{0, 1});
  CHECK(is_isomorphic(s.object, d1));
  const SimplexTable t = SimplexTable::from_sset(*s.object, 4);
  // k-simplices of Delta^1/1 are monotone maps [k+1] -> [1] ending at 1.
  for (int k = 0; k <= 4; ++k) CHECK(t.size(k) == static_cast<std::size_t>(k + 2));
  auto d2 = share(standard::simplex(2));
  const Slice s2 = slice(d2, GenRef{0, 2});
  CHECK(is_isomorphic(s2.object, d2));
  CHECK(s2.projection.target().counts() == Counts{3, 3, 1});
}

TEST_CASE("suspensions") {
  CHECK(is_isomorphic(suspension(share(SSet{})), share(standard::boundary(1))));
  CHECK(is_isomorphic(suspension(share(standard::simplex(0))), share(standard::simplex(1))));
  const SSetPtr pp = suspension(share(standard::discrete({"a", "b"})));
  CHECK(pp->counts() == Counts{2, 2});
  CHECK(pp->find("bot"));
  CHECK(pp->find("top"));
  // Suspension raises skeletal dimension by one.
  for (const SSet& u : {standard::simplex(1), standard::boundary(2), standard::horn(2, 0)}) {
    const SSetPtr s = suspension(share(u));
    CHECK(s->dim() == u.dim() + 1);
    CHECK(s->num_generators(0) == 2);
    check_table(*s, s->dim() + 1);
  }
}

TEST_CASE("isomorphism search") {
  CHECK(is_isomorphic(join(share(standard::simplex(1)), share(standard::simplex(0))).object,
                      share(standard::simplex(2))));
  CHECK_FALSE(is_isomorphic(share(standard::boundary(2)), share(standard::horn(2, 1))));
  auto ends = share(standard::boundary(1));
  const SMap i = standard::inclusion(ends, share(standard::simplex(1)));
  CHECK_FALSE(is_isomorphic(pushout(i, i).object, share(standard::boundary(2))));
  CHECK_FALSE(is_isomorphic(share(standard::horn(2, 0)), share(standard::horn(2, 1))));
  CHECK(is_isomorphic(share(standard::horn(2, 0)), share(standard::horn(2, 2))) == std::nullopt);
  CHECK_THROWS_AS(is_isomorphic(share(standard::simplex(0)), truncate(share(standard::simplex(0)), 2)),
                  PreconditionError);
}

TEST_CASE("n-bijectivity") {
  auto bd = share(standard::boundary(2));
  auto sx = share(standard::simplex(2));
  const SMap i = standard::inclusion(bd, sx);
  CHECK(is_n_bijective(i, -1));
  CHECK(is_n_bijective(i, 1));
  CHECK_FALSE(is_n_bijective(i, 2));
  auto d3 = share(standard::simplex(3));
  const Coskeleton c = coskeleton(d3, 1, 4);
  CHECK(is_n_bijective(c.unit, 1));
}

TEST_CASE("map search counts") {
  const SSet d0 = standard::simplex(0);
  const SSet d1 = standard::simplex(1);
  const SimplexTable t2 = SimplexTable::from_sset(standard::simplex(2), 1);
  const SimplexTable t1 = SimplexTable::from_sset(d1, 1);
  MapSearch s;
  s.source = &d0;
  s.target = &t2;
  CHECK(search_maps(s, [](const IdAssignment&) { return true; }) == 3);
  s.source = &d1;
  s.target = &t1;
  std::vector<IdAssignment> seen;
  search_maps(s, [&](const IdAssignment& a) {
    seen.push_back(a);
    return true;
  });
  CHECK(seen.size() == 3);
}
