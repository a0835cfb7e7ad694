#include <catch_amalgamated.hpp>

#include "tqc/error.hpp"
#include "tqc/lifting/lifting.hpp"
#include "tqc/simplicial/constructions.hpp"
#include "tqc/simplicial/standard.hpp"

using namespace tqc;

namespace {

SimplexExpr gen(const SSet& x, const char* name) { return SimplexExpr(*x.find(name)); }

SSetPtr point() {
  static const SSetPtr pt = share(standard::simplex(0));
  return pt;
}

SMap to_point(const SSetPtr& x) {
  SMap::Assignment a(static_cast<std::size_t>(x->dim() + 1));
  for (int d = 0; d <= x->dim(); ++d) {
    std::vector<int> word;
    for (int i = d - 1; i >= 0; --i) word.push_back(i);
    a[static_cast<std::size_t>(d)].assign(x->num_generators(d), SimplexExpr(GenRef{0, 0}, word));
  }
  return SMap(x, point(), std::move(a));
}

}  // namespace

TEST_CASE("enumerating maps") {
  auto d0 = point();
  auto d1 = share(standard::simplex(1));
  auto d2 = share(standard::simplex(2));
  CHECK(enumerate_maps(d0, d2).size() == 3);
  const auto maps = enumerate_maps(d1, d1);
  REQUIRE(maps.size() == 3);
  // Maps Delta^1 -> X are the 1-simplices of X, here two degenerate ones
  // and the identity.
  int degenerate = 0;
  for (const auto& m : maps) degenerate += m.assignment()[1][0].is_degenerate() ? 1 : 0;
  CHECK(degenerate == 2);
  for (std::size_t t = 1; t < maps.size(); ++t) {
    CHECK(maps[t - 1].assignment() < maps[t].assignment());
  }
  CHECK(enumerate_maps(d1, share(SSet{})).empty());
  CHECK(enumerate_maps(share(SSet{}), share(SSet{})).size() == 1);
  CHECK_THROWS_AS(enumerate_maps(d2, truncate(d1, 1)), WindowError);
}

TEST_CASE("single lifting squares") {
  auto d1 = share(standard::simplex(1));
  const SMap id = SMap::identity(d1);
  const auto lift = has_lift({id, id, id, id});
  REQUIRE(lift);
  CHECK(lift->assignment() == id.assignment());

  // Composable pair (0,1),(1,1) in Delta^1 fills to the 2-simplex (0,1,1).
  auto horn = share(standard::horn(2, 1));
  auto tri = share(standard::simplex(2));
  const SMap i = standard::inclusion(horn, tri);
  const SSet& h = *horn;
  SMap::Assignment ta(2);
  ta[0] = {gen(*d1, "0"), gen(*d1, "1"), gen(*d1, "1")};
  ta[1].resize(2);
  ta[1][static_cast<std::size_t>(h.find("01")->index)] = gen(*d1, "01");
  ta[1][static_cast<std::size_t>(h.find("12")->index)] = SimplexExpr(*d1->find("1"), {0});
  const SMap top(horn, d1, ta);
  const SMap p = to_point(d1);
  const auto filler = has_lift({i, p, top, to_point(tri)});
  REQUIRE(filler);
  CHECK(filler->assignment()[2][0] == SimplexExpr(*d1->find("01"), {1}));

  auto bd = share(standard::boundary(2));
  const SMap j = standard::inclusion(bd, tri);
  CHECK_FALSE(has_lift({j, to_point(bd), SMap::identity(bd), to_point(tri)}));

  // A square that does not commute is rejected.
  CHECK_THROWS_AS(has_lift({id, id, id, SMap(d1, d1, {{gen(*d1, "0"), gen(*d1, "0")},
                                                      {SimplexExpr(*d1->find("0"), {0})}})}),
                  PreconditionError);
}

TEST_CASE("right lifting against families") {
  CHECK(check_rlp(point(), Family::boundary, 0, 4));
  auto bd = share(standard::boundary(2));
  const auto v = check_rlp(bd, Family::boundary, 2, 2);
  REQUIRE_FALSE(v);
  REQUIRE(v.witness);
  CHECK(v.witness->m == 2);
  CHECK(v.witness->k == -1);
  CHECK(v.witness->top.assignment() == SMap::identity(bd).assignment());

  auto d2 = share(standard::simplex(2));
  const Slice s = slice(d2, *d2->find("2"));
  const auto r = check_rlp(s.projection, Family::right_horn, 1, 4);
  CHECK(r);
  CHECK(r.verified_up_to == 4);
  CHECK(is_fibration(s.projection, FibrationClass::right, 4));
}

TEST_CASE("quasi-categories and Kan complexes") {
  for (int n = 0; n <= 3; ++n) CHECK(is_quasi_category(share(standard::simplex(n)), 4));
  const auto h = is_quasi_category(share(standard::horn(2, 1)), 3);
  REQUIRE_FALSE(h);
  CHECK(h.witness->m == 2);
  CHECK(h.witness->k == 1);
  CHECK(is_quasi_category(suspension(share(standard::discrete({"a", "b"}))), 4));

  CHECK(is_kan(share(standard::discrete({"a", "b", "c"})), 4));
  const auto k = is_kan(share(standard::simplex(1)), 3);
  REQUIRE_FALSE(k);
  CHECK(k.witness->m == 2);
  CHECK(k.witness->k == 0);
  // The horn is (0,1) with (0,0) and would need the filler (0,1,0).
  const std::string w = describe(*k.witness);
  CHECK(w.find("01->01") != std::string::npos);
  CHECK(w.find("02->s0(0)") != std::string::npos);

  const auto codisc = coskeleton(share(standard::discrete({"a", "b"})), 0, 4).object;
  CHECK(is_kan(codisc, 4));
}

TEST_CASE("acyclicity") {
  CHECK(is_n_acyclic(point(), -1, 3));
  CHECK_FALSE(is_n_acyclic(share(standard::boundary(2)), 1, 3));
  const auto codisc = coskeleton(share(standard::discrete({"a", "b"})), 0, 4).object;
  CHECK(is_n_acyclic(codisc, 0, 4));
  CHECK_THROWS_AS(is_n_acyclic(codisc, 2, 2), PreconditionError);
  CHECK_THROWS_AS(is_n_acyclic(codisc, 0, 5), WindowError);
  // Acyclicity is monotone in n.
  for (const SSet& x : {standard::boundary(2), standard::horn(3, 1), standard::simplex(2),
                        standard::boundary(3)}) {
    auto px = share(x);
    bool prev = false;
    for (int n = -1; n <= 3; ++n) {
      const bool now = static_cast<bool>(is_n_acyclic(px, n, 4));
      if (prev) CHECK(now);
      prev = now;
    }
  }
}

TEST_CASE("fibration classes") {
  auto d2 = share(standard::simplex(2));
  CHECK(is_fibration(SMap::identity(d2), FibrationClass::trivial, 3));
  // Delta^2 is not contractible as a Kan complex: the endpoints (2,0) of a
  // boundary of Delta^1 have no edge between them.
  CHECK_FALSE(is_fibration(to_point(d2), FibrationClass::trivial, 3));
  const auto codisc = coskeleton(share(standard::discrete({"a", "b"})), 0, 4).object;
  CHECK(is_fibration(to_point(codisc), FibrationClass::trivial, 4));
  CHECK_FALSE(is_fibration(to_point(share(standard::boundary(2))), FibrationClass::trivial, 3));
  // Delta^1 -> Delta^0 is an inner fibration but not a right fibration.
  CHECK(is_fibration(to_point(share(standard::simplex(1))), FibrationClass::inner, 3));
  CHECK_FALSE(is_fibration(to_point(share(standard::simplex(1))), FibrationClass::right, 3));
  // Slice over the top of the parallel pair.
  auto pp = suspension(share(standard::discrete({"a", "b"})));
  const Slice s = slice(pp, *pp->find("top"));
  CHECK(is_fibration(s.projection, FibrationClass::right, 3));
  CHECK(default_bound(2, 1) == 4);
  CHECK(default_bound(0, 3) == 5);
}

TEST_CASE("witnesses are deterministic") {
  auto x = share(standard::horn(3, 0));
  const auto a = is_kan(x, 3);
  const auto b = is_kan(x, 3);
  REQUIRE(a.witness);
  REQUIRE(b.witness);
  CHECK(describe(*a.witness) == describe(*b.witness));
}
