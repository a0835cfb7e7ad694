#include <catch_amalgamated.hpp>

#include <algorithm>
#include <functional>

#include "tqc/bisimplicial/bisimplicial.hpp"
#include "tqc/category/nerve.hpp"
#include "tqc/error.hpp"
#include "tqc/lifting/lifting.hpp"
#include "tqc/simplicial/constructions.hpp"
#include "tqc/simplicial/standard.hpp"
#include "tqc/truncation/truncation.hpp"

using namespace tqc;

namespace {

FinCatPtr ptr(FinCat c) { return std::make_shared<const FinCat>(std::move(c)); }

// Functors from the (p+1) x (q+1) grid with invertible vertical arrows,
// counted by assigning every grid arrow and checking each square.
std::size_t grid_functors(const FinCat& a, int p, int q) {
  struct Arrow {
    int from;
    int to;
    bool vertical;
  };
  auto node = [&](int i, int j) { return j * (p + 1) + i; };
  std::vector<Arrow> arrows;
  for (int j = 0; j <= q; ++j) {
    for (int i = 0; i < p; ++i) arrows.push_back({node(i, j), node(i + 1, j), false});
  }
  for (int j = 0; j < q; ++j) {
    for (int i = 0; i <= p; ++i) arrows.push_back({node(i, j), node(i, j + 1), true});
  }
  const int nodes = (p + 1) * (q + 1);
  std::vector<int> obj(static_cast<std::size_t>(nodes), -1);
  std::vector<int> mor(arrows.size(), -1);
  std::size_t count = 0;
  auto find = [&](int from, int to) {
    for (std::size_t t = 0; t < arrows.size(); ++t) {
      if (arrows[t].from == from && arrows[t].to == to) return mor[t];
    }
    return -1;
  };
  std::function<void(std::size_t)> go = [&](std::size_t t) {
    if (t == arrows.size()) {
      for (int j = 0; j < q; ++j) {
        for (int i = 0; i < p; ++i) {
          const int right_down = a.compose(find(node(i + 1, j), node(i + 1, j + 1)), find(node(i, j), node(i + 1, j)));
          const int down_right = a.compose(find(node(i, j + 1), node(i + 1, j + 1)), find(node(i, j), node(i, j + 1)));
          if (right_down != down_right) return;
        }
      }
      ++count;
      return;
    }
    const Arrow& ar = arrows[t];
    for (int f = 0; f < a.num_morphisms(); ++f) {
      const auto& m = a.morphism(f);
      if (ar.vertical && !a.is_iso(f)) continue;
      const int old_from = obj[static_cast<std::size_t>(ar.from)];
      const int old_to = obj[static_cast<std::size_t>(ar.to)];
      if ((old_from >= 0 && old_from != m.src) || (old_to >= 0 && old_to != m.tgt)) continue;
      obj[static_cast<std::size_t>(ar.from)] = m.src;
      obj[static_cast<std::size_t>(ar.to)] = m.tgt;
      mor[t] = f;
      go(t + 1);
      obj[static_cast<std::size_t>(ar.from)] = old_from;
      obj[static_cast<std::size_t>(ar.to)] = old_to;
    }
    mor[t] = -1;
  };
  if (nodes == 1) return static_cast<std::size_t>(a.num_objects());
  go(0);
  return count;
}

SSetPtr discrete_n(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  return share(standard::discrete(names));
}

bool iso(SSetPtr a, SSetPtr b) {
  const int w = std::min(a->window(), b->window());
  if (a->window() > w) a = truncate(a, w);
  if (b->window() > w) b = truncate(b, w);
  return is_isomorphic(a, b).has_value();
}

}  // namespace

TEST_CASE("classifying diagram cell counts") {
  const auto pt = classifying_diagram(catalog::chain(0), 3, 3);
  for (int p = 0; p <= 3; ++p) {
    for (int q = 0; q <= 3; ++q) CHECK(pt.size(p, q) == 1);
  }
  const auto c1 = classifying_diagram(catalog::chain(1), 2, 3);
  CHECK(c1.size(1, 0) == 3);
  for (int q = 0; q <= 3; ++q) CHECK(c1.size(0, q) == 2);

  const auto c2 = ptr(catalog::chain(2));
  const auto row = classifying_diagram(*c2, 3, 0);
  const auto n = SimplexTable::from_sset(*nerve(c2, 3).object, 3);
  for (int p = 0; p <= 3; ++p) CHECK(row.size(p, 0) == n.size(p));

  for (const auto& e : catalog::corpus()) {
    INFO(e.name);
    const auto b = classifying_diagram(*e.category, 2, 2);
    for (int p = 0; p <= 2; ++p) {
      for (int q = 0; q + p <= 3 && q <= 2; ++q) CHECK(b.size(p, q) == grid_functors(*e.category, p, q));
    }
  }
}

TEST_CASE("rows and columns") {
  auto d1 = share(standard::simplex(1));
  CHECK(iso(share(zeroth_row(classifying_diagram(catalog::chain(1), 3, 1))), d1));
  CHECK(iso(share(zeroth_row(classifying_diagram(catalog::chain(0), 2, 2))), share(standard::simplex(0))));

  for (const SSet& a : {standard::simplex(1), standard::boundary(2), standard::horn(3, 1)}) {
    auto pa = share(a);
    const auto b = constant_row(a, 3, 2);
    CHECK(iso(share(zeroth_row(b)), pa));
    const auto t = SimplexTable::from_sset(a, 3);
    for (int p = 0; p <= 3; ++p) {
      for (int q = 0; q <= 2; ++q) CHECK(b.size(p, q) == t.size(p));
    }
  }
  const auto empty = constant_row(SSet{}, 2, 2);
  CHECK(empty.size(0, 0) == 0);
  CHECK_THROWS_AS(constant_row(*truncate(d1, 1), 2, 1), WindowError);

  for (const auto& e : catalog::corpus()) {
    INFO(e.name);
    const auto b = classifying_diagram(*e.category, 1, 3);
    for (int p = 0; p <= 1; ++p) CHECK(is_kan(share(column(b, p)), 3));
  }
}

TEST_CASE("row identity") {
  for (const auto& e : catalog::corpus()) {
    INFO(e.name);
    CHECK(verify_row_identity(e.category, 4));
  }
  CHECK(verify_row_identity(ptr(catalog::chain(1)), 3));
  CHECK(verify_row_identity(ptr(catalog::opposite_arrows()), 3));
}

TEST_CASE("Segal hom-spaces") {
  const auto pt = classifying_diagram(catalog::chain(0), 2, 2);
  CHECK(iso(share(segal_hom_space(pt, 0, 0)), share(standard::simplex(0))));

  const FinPoset vee({"a", "b", "c"}, {{0, 1}, {0, 2}});
  const auto pv = classifying_diagram(catalog::from_poset(vee), 1, 2);
  CHECK(iso(share(segal_hom_space(pv, 0, 1)), share(standard::simplex(0))));
  CHECK(segal_hom_space(pv, 1, 2).empty());

  for (const auto& e : catalog::corpus()) {
    INFO(e.name);
    const FinCat& c = *e.category;
    const auto b = classifying_diagram(c, 1, 3);
    const auto n = nerve(e.category, 4).object;
    for (int x = 0; x < c.num_objects(); ++x) {
      for (int y = 0; y < c.num_objects(); ++y) {
        auto h = share(segal_hom_space(b, x, y));
        CHECK(iso(h, right_hom_space(n, GenRef{0, x}, GenRef{0, y})));
        CHECK(iso(h, discrete_n(c.hom(x, y).size())));
      }
    }
  }
  CHECK_THROWS_AS(segal_hom_space(pt, 0, 3), RangeError);
  CHECK_THROWS_AS(segal_hom_space(classifying_diagram(catalog::chain(0), 0, 1), 0, 0), WindowError);
}

TEST_CASE("bisimplicial validation") {
  const auto b = classifying_diagram(catalog::free_isomorphism(), 1, 1);
  std::vector<std::vector<TruncBiSSet::Cells>> cells;
  for (int p = 0; p <= 1; ++p) {
    cells.emplace_back();
    for (int q = 0; q <= 1; ++q) cells.back().push_back(b.cells(p, q));
  }
  CHECK_NOTHROW(TruncBiSSet(1, 1, cells));
  // Swap the vertical faces of a (1,1)-cell whose two faces differ.
  auto broken = cells;
  auto& faces = broken[1][1].vfaces;
  const auto it = std::find_if(faces.begin(), faces.end(), [](const auto& f) { return f[0] != f[1]; });
  REQUIRE(it != faces.end());
  std::swap((*it)[0], (*it)[1]);
  CHECK_THROWS_AS(TruncBiSSet(1, 1, broken), InvariantError);
  auto arity = cells;
  arity[1][0].hfaces[0].pop_back();
  CHECK_THROWS_AS(TruncBiSSet(1, 1, arity), InvariantError);
}
