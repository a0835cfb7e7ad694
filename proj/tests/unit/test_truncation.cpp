#include <catch_amalgamated.hpp>

#include <map>

#include "tqc/category/nerve.hpp"
#include "tqc/error.hpp"
#include "tqc/lifting/lifting.hpp"
#include "tqc/simplicial/constructions.hpp"
#include "tqc/simplicial/standard.hpp"
#include "tqc/truncation/truncation.hpp"

using namespace tqc;

namespace {

constexpr int kBound = 4;

FinCatPtr ptr(FinCat c) { return std::make_shared<const FinCat>(std::move(c)); }

SSetPtr discrete_n(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  return share(standard::discrete(names));
}

// Compares after matching truncation windows.
bool iso(const SSetPtr& a, SSetPtr b) {
  if (!a->is_exact() && b->is_exact()) b = truncate(b, a->window());
  return is_isomorphic(a, b).has_value();
}

SMap vertex_map(const SSetPtr& a, const SSetPtr& b, std::vector<int> image) {
  SMap::Assignment asg(1);
  for (int v : image) asg[0].emplace_back(GenRef{0, v});
  return SMap(a, b, std::move(asg));
}

std::vector<SSetPtr> quasi_categories() {
  std::vector<SSetPtr> out;
  for (int n = 0; n <= 3; ++n) out.push_back(share(standard::simplex(n)));
  out.push_back(suspension(share(standard::discrete({"a", "b"}))));
  for (const auto& e : catalog::corpus()) out.push_back(nerve(e.category, kBound).object);
  return out;
}

}  // namespace

TEST_CASE("right hom spaces") {
  auto d1 = share(standard::simplex(1));
  CHECK(is_isomorphic(right_hom_space(d1, *d1->find("0"), *d1->find("1")), share(standard::simplex(0))));
  CHECK(right_hom_space(d1, *d1->find("1"), *d1->find("0"))->empty());

  auto s = suspension(share(standard::discrete({"a", "b"})));
  const auto h = right_hom_space(s, *s->find("bot"), *s->find("top"));
  CHECK(is_isomorphic(h, share(standard::discrete({"a", "b"}))));

  for (const auto& e : catalog::corpus()) {
    INFO(e.name);
    const auto n = nerve(e.category, kBound).object;
    const FinCat& c = *e.category;
    for (int a = 0; a < c.num_objects(); ++a) {
      for (int b = 0; b < c.num_objects(); ++b) {
        const auto hom = right_hom_space(n, GenRef{0, a}, GenRef{0, b});
        CHECK(iso(hom, discrete_n(c.hom(a, b).size())));
      }
    }
  }
  CHECK_THROWS_AS(right_hom_space(d1, GenRef{0, 5}, GenRef{0, 0}), RangeError);
}

TEST_CASE("pi0 and pi1") {
  CHECK(pi0(standard::boundary(1)).size() == 2);
  for (int n = 0; n <= 3; ++n) CHECK(pi0(standard::simplex(n)).size() == 1);
  CHECK(pi0(SSet{}).empty());

  const auto t = pi1_presentation(standard::simplex(2), GenRef{0, 0});
  CHECK(t.generators.empty());
  CHECK(t.relators.empty());
  const auto c = pi1_presentation(standard::boundary(2), GenRef{0, 0});
  CHECK(c.generators.size() == 1);
  CHECK(c.relators.empty());
  CHECK(c.relator_rank() == 0);
  const auto z2 = pi1_presentation(*nerve(ptr(catalog::cyclic_group(2)), 2).object, GenRef{0, 0});
  CHECK(z2.to_string() == "<g | g.g>");
  CHECK(z2.relator_rank() == 1);
  // The boundary of Delta^3 is simply connected.
  CHECK(pi1_presentation(standard::boundary(3), GenRef{0, 0}).generators.empty());
  CHECK_THROWS_AS(pi1_presentation(standard::boundary(1), GenRef{0, 0}), PreconditionError);
  CHECK_THROWS_AS(pi1_presentation(standard::simplex(1), GenRef{0, 3}), RangeError);
}

TEST_CASE("truncation verdicts") {
  for (const auto& e : catalog::corpus()) {
    INFO(e.name);
    const auto n = nerve(e.category, kBound).object;
    for (auto m : {TruncationMethod::lifting, TruncationMethod::coskeleton}) {
      const auto v = is_n_truncated(n, 1, kBound, m);
      CHECK(v);
      CHECK(v.verified_up_to == kBound);
      CHECK(v.method == m);
    }
  }
  const FinPoset vee({"a", "b", "c"}, {{0, 1}, {0, 2}});
  CHECK(is_n_truncated(nerve(ptr(catalog::from_poset(vee)), kBound).object, 0, kBound, TruncationMethod::lifting));
  const auto z2 = nerve(ptr(catalog::cyclic_group(2)), kBound).object;
  const auto f0 = is_n_truncated(z2, 0, kBound, TruncationMethod::lifting);
  CHECK_FALSE(f0);
  REQUIRE(f0.witness);
  CHECK(f0.witness->m == 2);
  CHECK_FALSE(is_n_truncated(z2, 0, kBound, TruncationMethod::coskeleton));
  CHECK(is_n_truncated(z2, 1, kBound, TruncationMethod::coskeleton));

  CHECK_THROWS_AS(is_n_truncated(z2, 1, 2, TruncationMethod::lifting), PreconditionError);
  CHECK_THROWS_AS(is_n_truncated(z2, 1, 5, TruncationMethod::lifting), WindowError);
  CHECK_THROWS_AS(is_n_truncated(share(standard::horn(2, 1)), 1, 3, TruncationMethod::lifting),
                  PreconditionError);
}

TEST_CASE("truncation methods agree and are monotone") {
  for (const auto& x : quasi_categories()) {
    bool prev = false;
    for (int n = -1; n <= 2; ++n) {
      const auto a = is_n_truncated(x, n, kBound, TruncationMethod::lifting, {false});
      const auto b = is_n_truncated(x, n, kBound, TruncationMethod::coskeleton, {false});
      CHECK(a.value == b.value);
      if (prev) CHECK(a.value);
      prev = a.value;
    }
  }
}

TEST_CASE("n-types") {
  auto disc = share(standard::discrete({"a", "b", "c"}));
  CHECK(is_n_type(disc, 0, kBound));
  const auto codisc = coskeleton(share(standard::discrete({"a", "b"})), 0, kBound).object;
  CHECK(is_n_type(codisc, -2, kBound));
  CHECK_FALSE(is_n_type(disc, -1, kBound));
  CHECK_THROWS_AS(is_n_type(share(standard::boundary(2)), 1, 3), PreconditionError);

  std::vector<SSetPtr> kan{disc, codisc};
  for (const char* name : {"free-iso", "Z/2", "Z/3", "codiscrete-2"}) {
    for (const auto& e : catalog::corpus()) {
      if (e.name == name) kan.push_back(nerve(e.category, kBound).object);
    }
  }
  for (const auto& k : kan) {
    REQUIRE(is_kan(k, kBound));
    for (int n = -1; n <= 1; ++n) {
      CHECK(is_n_truncated(k, n, kBound, TruncationMethod::lifting).value ==
            static_cast<bool>(is_n_type(k, n, kBound)));
    }
  }
}

TEST_CASE("truncation through hom spaces") {
  for (const auto& x : quasi_categories()) {
    const int nv = static_cast<int>(x->num_generators(0));
    for (int n = 0; n <= 1; ++n) {
      bool all = true;
      for (int a = 0; a < nv; ++a) {
        for (int b = 0; b < nv; ++b) {
          const auto h = right_hom_space(x, GenRef{0, a}, GenRef{0, b});
          const int d = std::min(kBound, h->window());
          all = all && static_cast<bool>(is_n_type(h, n - 1, d));
        }
      }
      CHECK(all == is_n_truncated(x, n, kBound, TruncationMethod::lifting, {false}).value);
    }
  }
}

TEST_CASE("homotopy equivalences of low degree") {
  auto a = share(standard::discrete({"a"}));
  auto ab = share(standard::discrete({"a", "b"}));
  const SMap f = vertex_map(a, ab, {0});
  CHECK(homotopy_m_equivalence(f, -2, kBound));
  CHECK(homotopy_m_equivalence(f, -1, kBound));
  CHECK_FALSE(homotopy_m_equivalence(f, 0, kBound));
  const auto codisc = coskeleton(ab, 0, kBound).object;
  CHECK(homotopy_m_equivalence(vertex_map(a, codisc, {1}), 0, kBound));
  CHECK_THROWS_AS(homotopy_m_equivalence(SMap::identity(share(standard::simplex(1))), 0, 3),
                  PreconditionError);
}

TEST_CASE("categorical equivalences") {
  auto d2 = share(standard::simplex(2));
  for (int n = 0; n <= 1; ++n) CHECK(categorical_n_equivalence(SMap::identity(d2), n, kBound));

  auto c = ptr(catalog::opposite_arrows());
  const auto nc = nerve(c, kBound).object;
  const auto pt = nerve(ptr(catalog::chain(0)), kBound).object;
  const SMap incl = vertex_map(pt, nc, {*c->find_object("x")});
  const auto v0 = categorical_n_equivalence(incl, 0, kBound);
  CHECK(v0.value);
  CHECK_FALSE(v0.essentially_surjective);
  CHECK(v0.diagnostic == "not essentially surjective");
  CHECK_FALSE(categorical_n_equivalence(incl, 1, kBound));

  // The inclusion of one object into the codiscrete groupoid is an
  // equivalence.
  auto cd = ptr(catalog::codiscrete({"a", "b"}));
  const auto ncd = nerve(cd, kBound).object;
  const auto v1 = categorical_n_equivalence(vertex_map(pt, ncd, {0}), 1, kBound);
  CHECK(v1.value);
  CHECK(v1.essentially_surjective);
}

TEST_CASE("coskeleta of quasi-categories") {
  for (const auto& x : quasi_categories()) {
    const auto xt = x->dim() > kBound ? truncate(x, kBound) : x;
    for (int n = 0; n <= 1; ++n) {
      const Coskeleton c = coskeleton(xt, n + 1, kBound);
      CHECK(is_quasi_category(c.object, kBound));
      CHECK(is_n_truncated(c.object, n, kBound, TruncationMethod::lifting, {false}));
      CHECK(is_n_bijective(c.unit, n + 1));
      CHECK(categorical_n_equivalence(c.unit, n, kBound, {false}));
    }
  }
}

TEST_CASE("1-truncated iff the unit to N(ho) is a trivial fibration") {
  for (const auto& x : quasi_categories()) {
    const HomotopyCategory ho = homotopy_category(x, kBound, {false});
    const SMap unit = unit_to_nerve(x, ho, nerve(ho.category, kBound));
    CHECK(is_n_truncated(x, 1, kBound, TruncationMethod::lifting, {false}).value ==
          is_fibration(unit, FibrationClass::trivial, kBound).holds);
  }
}

TEST_CASE("two-of-three for categorical equivalences") {
  std::vector<SSetPtr> objs{share(standard::simplex(0)), share(standard::simplex(1)),
                            nerve(ptr(catalog::free_isomorphism()), kBound).object,
                            nerve(ptr(catalog::codiscrete({"a", "b"})), kBound).object,
                            nerve(ptr(catalog::cyclic_group(2)), kBound).object};
  std::map<std::pair<std::size_t, std::size_t>, std::vector<SMap>> maps;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    for (std::size_t j = 0; j < objs.size(); ++j) maps[{i, j}] = enumerate_maps(objs[i], objs[j]);
  }
  std::size_t triples = 0;
  for (int n = 0; n <= 1; ++n) {
    for (std::size_t i = 0; i < objs.size(); ++i) {
      for (std::size_t j = 0; j < objs.size(); ++j) {
        for (std::size_t k = 0; k < objs.size(); ++k) {
          for (const SMap& f : maps[{i, j}]) {
            for (const SMap& g : maps[{j, k}]) {
              const bool a = categorical_n_equivalence(f, n, kBound, {false}).value;
              const bool b = categorical_n_equivalence(g, n, kBound, {false}).value;
              const bool c = categorical_n_equivalence(compose(g, f), n, kBound, {false}).value;
              CHECK(a + b + c != 2);
              ++triples;
            }
          }
        }
      }
    }
  }
  CHECK(triples > 100);
}
