#include <catch_amalgamated.hpp>

#include <algorithm>
#include <bit>
#include <filesystem>
#include <functional>

#include "tqc/bisimplicial/bisimplicial.hpp"
#include "tqc/category/nerve.hpp"
#include "tqc/error.hpp"
#include "tqc/harness/compare.hpp"
#include "tqc/harness/corpus.hpp"
#include "tqc/harness/enumerate.hpp"
#include "tqc/harness/io.hpp"
#include "tqc/harness/oracle.hpp"
#include "tqc/harness/suites.hpp"
#include "tqc/lifting/lifting.hpp"
#include "tqc/simplicial/constructions.hpp"
#include "tqc/simplicial/standard.hpp"
#include "tqc/simplicial/table.hpp"
#include "tqc/truncation/truncation.hpp"

using namespace tqc;
using io::json;

namespace {

constexpr int kBound = 4;

// Vertices a, b and an edge e : a -> b whose d1 face is given.
json edge_doc(const std::string& face_gen, std::vector<int> degens = {}) {
  json faces = json::array({json{{"gen", "b"}, {"degens", json::array()}}, json{{"gen", face_gen}, {"degens", degens}}});
  return json{{"generators",
               {{{"name", "a"}, {"dim", 0}, {"faces", json::array()}},
                {{"name", "b"}, {"dim", 0}, {"faces", json::array()}},
                {{"name", "e"}, {"dim", 1}, {"faces", faces}}}},
              {"truncated_at", nullptr}};
}

template <class E>
std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const E& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("round trips") {
  const Corpus corpus = load_corpus(default_fixture_dir());
  REQUIRE(corpus.categories.size() == 12);
  REQUIRE(corpus.posets.size() == 8);
  const json manifest = io::read_file(default_fixture_dir() / "manifest.json");
  for (const char* section : {"categories", "posets", "ssets"}) {
    for (const auto& entry : manifest.at(section)) {
      const std::string name = entry.at("name");
      INFO(name);
      const json j = io::read_file(default_fixture_dir() / entry.at("file").get<std::string>());
      switch (io::kind_of(j)) {
        case io::Kind::sset: CHECK(io::to_json(io::sset_from_json(j)) == j); break;
        case io::Kind::fincat: CHECK(io::to_json(io::fincat_from_json(j)) == j); break;
        case io::Kind::poset: CHECK(io::to_json(io::poset_from_json(j)) == j); break;
        default: FAIL("unexpected fixture kind");
      }
    }
  }
  for (const auto& c : corpus.categories) {
    INFO(c.name);
    const auto n = nerve(c.value, kBound).object;
    const json j = io::to_json(*n);
    CHECK(io::to_json(io::sset_from_json(j)) == j);
    CHECK(is_isomorphic(share(io::sset_from_json(j)), n));
    const auto b = classifying_diagram(*c.value, 1, 2);
    const json jb = io::to_json(b);
    CHECK(io::to_json(io::bisset_from_json(jb)) == jb);
  }
  auto d2 = share(standard::simplex(2));
  const SMap f = standard::inclusion(share(standard::horn(2, 1)), d2);
  const json jf = io::to_json(f);
  const SMap g = io::smap_from_json(jf);
  CHECK(io::to_json(g) == jf);
  CHECK(g.is_mono());
}

TEST_CASE("fixtures match the built-in corpus") {
  const Corpus disk = load_corpus(default_fixture_dir());
  const Corpus mem = builtin_corpus();
  REQUIRE(disk.categories.size() == mem.categories.size());
  for (std::size_t i = 0; i < mem.categories.size(); ++i) {
    CHECK(disk.categories[i].name == mem.categories[i].name);
    CHECK(io::to_json(*disk.categories[i].value) == io::to_json(*mem.categories[i].value));
  }
  REQUIRE(disk.posets.size() == mem.posets.size());
  for (std::size_t i = 0; i < mem.posets.size(); ++i) {
    CHECK(io::to_json(disk.posets[i].value) == io::to_json(mem.posets[i].value));
  }
  REQUIRE(disk.ssets.size() == mem.ssets.size());
  for (std::size_t i = 0; i < mem.ssets.size(); ++i) {
    CHECK(io::to_json(*disk.ssets[i].value) == io::to_json(*mem.ssets[i].value));
  }
  CHECK_THROWS_AS(load_corpus("/nonexistent/fixtures"), FixtureError);
}

TEST_CASE("load errors") {
  CHECK_NOTHROW(io::sset_from_json(edge_doc("a")));
  const std::string unknown = error_of<InvariantError>([] { io::sset_from_json(edge_doc("zz")); });
  CHECK(unknown.find("'e'") != std::string::npos);
  const std::string bad_index = error_of<InvariantError>([] { io::sset_from_json(edge_doc("a", {3})); });
  CHECK(bad_index.find("'e'") != std::string::npos);

  json wrong_arity = edge_doc("a");
  wrong_arity["generators"][2]["faces"].erase(0);
  CHECK(error_of<InvariantError>([&] { io::sset_from_json(wrong_arity); }).find("e") != std::string::npos);
  json dup = edge_doc("a");
  dup["generators"][1]["name"] = "a";
  CHECK_THROWS_AS(io::sset_from_json(dup), InvariantError);

  CHECK_THROWS_AS(io::sset_from_json(json{{"gens", json::array()}}), SchemaError);
  json bad_dim = edge_doc("a");
  bad_dim["generators"][0]["dim"] = "zero";
  CHECK_THROWS_AS(io::sset_from_json(bad_dim), SchemaError);
  CHECK_THROWS_AS(io::kind_of(json::array()), SchemaError);
  CHECK_THROWS_AS(io::kind_of(json{{"stuff", 1}}), SchemaError);

  // One object, two endomorphisms a, b with aa = a, ab = a, ba = b, bb = a:
  // (ba)b = a but b(ab) = b.
  const json nonassoc = json::parse(R"({
    "objects": ["*"],
    "morphisms": [{"name": "1", "src": "*", "tgt": "*"}, {"name": "a", "src": "*", "tgt": "*"},
                  {"name": "b", "src": "*", "tgt": "*"}],
    "identities": {"*": "1"},
    "compose": [["a", "a", "a"], ["a", "b", "a"], ["b", "a", "b"], ["b", "b", "a"]]})");
  CHECK_THROWS_AS(io::fincat_from_json(nonassoc), InvariantError);
  json missing = nonassoc;
  missing["compose"].erase(3);
  CHECK_THROWS_AS(io::fincat_from_json(missing), InvariantError);
  json unknown_obj = nonassoc;
  unknown_obj["morphisms"][1]["tgt"] = "?";
  CHECK_THROWS_AS(io::fincat_from_json(unknown_obj), InvariantError);

  CHECK_THROWS_AS(io::poset_from_json(json::parse(R"({"elements": ["a", "b"], "leq": [["a", "b"], ["b", "a"]]})")),
                  InvariantError);
  CHECK_THROWS_AS(io::poset_from_json(json::parse(R"({"elements": ["a"], "leq": [["a"]]})")), SchemaError);

  json cells = io::to_json(classifying_diagram(catalog::chain(1), 1, 1));
  cells["vfaces"]["1,1"][0] = json::array({0, 0, 0});
  CHECK_THROWS_AS(io::bisset_from_json(cells), InvariantError);
}

TEST_CASE("subcomplex enumeration") {
  // Frozen from the powerset filter; the first two agree with a hand count.
  const std::vector<std::size_t> expected{1, 4, 18, 166};
  for (int n = 0; n <= 3; ++n) {
    INFO(n);
    const auto naive = oracle::subcomplexes(n);
    CHECK(naive.size() == expected[static_cast<std::size_t>(n)]);
    const auto subs = enumerate_subcomplexes(n);
    std::vector<std::vector<unsigned>> got;
    for (const auto& s : subs) {
      got.push_back(s.faces);
      std::vector<std::size_t> by_dim(static_cast<std::size_t>(n + 1), 0);
      for (unsigned f : s.faces) ++by_dim[static_cast<std::size_t>(std::popcount(f) - 1)];
      for (int d = 0; d <= n; ++d) CHECK(s.object->num_generators(d) == by_dim[static_cast<std::size_t>(d)]);
    }
    auto sorted_naive = naive;
    std::sort(sorted_naive.begin(), sorted_naive.end());
    std::sort(got.begin(), got.end());
    CHECK(got == sorted_naive);
    const auto again = enumerate_subcomplexes(n);
    for (std::size_t i = 0; i < subs.size(); ++i) CHECK(subs[i].name() == again[i].name());
  }
  CHECK(enumerate_subcomplexes(1)[3].name() == "{0,1,01}");
  CHECK_THROWS_AS(enumerate_subcomplexes(4), RangeError);
  CHECK_THROWS_AS(enumerate_subcomplexes(-1), RangeError);
}

TEST_CASE("poset enumeration") {
  const auto p = enumerate_posets(4);
  std::vector<int> per_size(5, 0);
  for (const auto& q : p) ++per_size[static_cast<std::size_t>(q.size())];
  CHECK(per_size == std::vector<int>{0, 1, 2, 5, 16});
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) CHECK_FALSE(order_isomorphic(p[i], p[j]));
  }
  CHECK_THROWS_AS(enumerate_posets(0), RangeError);
}

TEST_CASE("naive lifting oracle") {
  const auto d2 = oracle::simplex_faces(2);
  CHECK(oracle::rlp(d2, Family::inner_horn, 2).holds);
  const auto bd2 = oracle::boundary_faces(2);
  const auto v = oracle::rlp(bd2, Family::inner_horn, 2);
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness);
  CHECK(v.witness->first == 1);
  CHECK(v.witness->second == std::vector<int>{0, 1, 2});
  CHECK(oracle::maps(oracle::boundary_faces(0), bd2).size() == 1);
  CHECK(oracle::rlp(oracle::FaceComplex{2, {}}, Family::boundary, 0).holds == false);
  CHECK(oracle::horn_faces(3, 1).faces.size() == 13);

  const Family families[] = {Family::boundary, Family::inner_horn, Family::all_horn, Family::right_horn};
  for (int n = 1; n <= 3; ++n) {
    for (const auto& s : enumerate_subcomplexes(n)) {
      INFO(s.name());
      const oracle::FaceComplex fc{n, s.faces};
      for (Family fam : families) {
        for (int m = 0; m <= 3; ++m) {
          CHECK(check_rlp(s.object, fam, m, m).holds == oracle::rlp(fc, fam, m).holds);
        }
      }
      for (int m = 0; m <= 3; ++m) {
        const auto k = share(standard::boundary(m));
        CHECK(enumerate_maps(k, s.object).size() == oracle::maps(oracle::boundary_faces(m), fc).size());
      }
      for (int k = 0; k <= 3; ++k) {
        const auto h = share(standard::horn(3, k));
        CHECK(enumerate_maps(h, s.object).size() == oracle::maps(oracle::horn_faces(3, k), fc).size());
      }
    }
  }
}

TEST_CASE("quasi-categorical subcomplexes of Delta^3") {
  // Counted with the naive oracle through dimension 4; the acceptance
  // criterion for the two truncation methods relies on this number.
  std::size_t naive = 0, engine = 0;
  for (const auto& s : enumerate_subcomplexes(3)) {
    const oracle::FaceComplex fc{3, s.faces};
    bool q = true;
    for (int m = 2; m <= 4; ++m) q = q && oracle::rlp(fc, Family::inner_horn, m).holds;
    naive += q;
    engine += is_quasi_category(s.object, 4).holds;
  }
  CHECK(naive == 84);
  CHECK(engine == naive);
}

TEST_CASE("pushout quotient oracle") {
  auto d1 = share(standard::simplex(1));
  auto bd = share(standard::boundary(1));
  const SMap i = standard::inclusion(bd, d1);
  const Pushout circle = pushout(i, i);
  for (int t = 1; t <= 3; ++t) {
    const auto counts = oracle::pushout_counts(i, i, t);
    const auto table = SimplexTable::from_sset(*circle.object, t);
    for (int k = 0; k <= t; ++k) CHECK(table.size(k) == counts[static_cast<std::size_t>(k)]);
  }
  auto d2 = share(standard::simplex(2));
  auto horn = share(standard::horn(2, 0));
  const SMap j = standard::inclusion(horn, d2);
  const SMap h = standard::inclusion(horn, share(standard::boundary(2)));
  const Pushout po = pushout(j, h);
  const auto counts = oracle::pushout_counts(j, h, 3);
  const auto table = SimplexTable::from_sset(*po.object, 3);
  for (int k = 0; k <= 3; ++k) CHECK(table.size(k) == counts[static_cast<std::size_t>(k)]);
}

TEST_CASE("pullbacks of right fibrations") {
  for (const auto& e : catalog::corpus()) {
    INFO(e.name);
    const auto x = nerve(e.category, kBound + 1).object;
    for (int y = 0; y < e.category->num_objects(); ++y) {
      const Slice s = slice(x, GenRef{0, y});
      const SMap& p = s.projection;
      // Along each vertex the pullback is the fibre, i.e. the right hom space.
      for (int v = 0; v < e.category->num_objects(); ++v) {
        const SMap pick(share(standard::simplex(0)), x, {{SimplexExpr(GenRef{0, v})}});
        const auto pb = oracle::pullback(p, pick, kBound);
        const auto hom = right_hom_space(x, GenRef{0, v}, GenRef{0, y});
        CHECK(is_isomorphic(pb.object, hom->window() > kBound ? truncate(hom, kBound) : hom));
      }
      // Along every nondegenerate edge the pulled-back map stays a right fibration.
      for (std::size_t a = 0; a < x->num_generators(1); ++a) {
        const Generator& g = x->generator(GenRef{1, static_cast<int>(a)});
        auto d1 = share(standard::simplex(1));
        const SMap edge(d1, x, {{g.faces[1], g.faces[0]}, {SimplexExpr(GenRef{1, static_cast<int>(a)})}});
        const auto pb = oracle::pullback(p, edge, kBound);
        CHECK(is_fibration(pb.pr2, FibrationClass::right, kBound));
      }
    }
  }
  auto d1 = share(standard::simplex(1));
  const auto pb = oracle::pullback(SMap::identity(d1), SMap::identity(d1), 3);
  CHECK(is_isomorphic(pb.object, truncate(d1, 3)));
}

TEST_CASE("equivalence of categories") {
  const auto point = catalog::chain(0);
  CHECK(equivalent_categories(catalog::free_isomorphism(), point));
  CHECK(equivalent_categories(catalog::codiscrete({"a", "b", "c"}), point));
  CHECK_FALSE(equivalent_categories(catalog::chain(1), point));
  CHECK_FALSE(equivalent_categories(catalog::cyclic_group(2), point));
  CHECK_FALSE(equivalent_categories(catalog::opposite_arrows(), point));
  CHECK(skeleton(catalog::opposite_arrows()).num_objects() == 2);
  CHECK(skeleton(catalog::codiscrete({"a", "b", "c"})).num_morphisms() == 1);
}

TEST_CASE("verification reports") {
  const Corpus corpus = load_corpus(default_fixture_dir());
  const auto a = verify_suite("counterexample", corpus);
  const auto b = verify_suite("counterexample", corpus);
  CHECK(to_json(a) == to_json(b));
  CHECK(a.ok());
  const json j = to_json(a);
  CHECK(j["summary"]["total"] == a.entries.size());
  CHECK(j["summary"]["passed"].get<std::size_t>() + j["summary"]["failed"].get<std::size_t>() == a.entries.size());

  // Bound 3 is below what n = 2 needs, so those claims fail with a witness.
  const auto low = verify_suite("trunc-methods", corpus, 3);
  CHECK_FALSE(low.ok());
  for (const auto& e : low.entries) {
    if (!e.pass) CHECK(e.witness.has_value());
  }
  CHECK(low.failed() > 0);
  CHECK(to_text(low).find("FAIL") != std::string::npos);
  CHECK_THROWS_AS(verify_suite("nope", corpus), RangeError);
  CHECK(suite_names().size() == 10);
}
