// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "tqc/harness/corpus.hpp"
#include "tqc/harness/suites.hpp"

using namespace tqc;

namespace {

using Clock = std::chrono::steady_clock;

struct Result {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// A suite passes a criterion when every claim passes and the claim count is
// the one the corpus implies, so that an empty run cannot pass.
Result suite(const Corpus& corpus, const std::string& name, std::size_t expected_entries, double time_limit = 0) {
  const auto start = Clock::now();
  const VerificationReport r = verify_suite(name, corpus, 4);
  const double secs = seconds_since(start);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu/%zu claims, %.2f s", r.passed(), r.entries.size(), secs);
  std::string detail = buf;
  bool pass = r.ok() && r.entries.size() == expected_entries;
  if (r.entries.size() != expected_entries) detail += ", expected " + std::to_string(expected_entries) + " claims";
  if (time_limit > 0 && secs >= time_limit) {
    pass = false;
    detail += ", over the time limit";
  }
  for (const auto& e : r.entries) {
    if (!e.pass) {
      detail += "; first failure " + e.instance + ": " + e.claim + " [" + e.witness.value_or("") + "]";
      break;
    }
  }
  return {pass, detail};
}

}  // namespace

int main() {
  const auto start = Clock::now();
  Corpus corpus;
  try {
    corpus = load_corpus(default_fixture_dir());
  } catch (const std::exception& e) {
    std::cout << "FAIL fixtures: " << e.what() << '\n';
    return 1;
  }
  const std::size_t cats = corpus.categories.size();
  std::size_t objects = 0;
  std::size_t pairs = 0;
  for (const auto& c : corpus.categories) {
    const auto k = static_cast<std::size_t>(c.value->num_objects());
    objects += k;
    pairs += k * k;
  }

  struct Criterion {
    const char* label;
    std::function<Result()> run;
  };
  const std::vector<Criterion> criteria{
      {"1 catprop: nerves are 1-truncated quasi-categories, unit to N(ho) a trivial fibration",
       [&] { return suite(corpus, "catprop", 3 * cats, 60.0); }},
      {"2 posetprop: poset nerves 0-truncated, N(Z/2) fails n=0 and passes n=1",
       [&] { return suite(corpus, "posetprop", corpus.posets.size() + 2); }},
      {"3 lifting and coskeleton methods agree on quasi-categorical subcomplexes of Delta^3",
       // 84 of the 166 subcomplexes are quasi-categories, four levels each.
       [&] { return suite(corpus, "trunc-methods", 84 * 4); }},
      {"4 kancor: n-truncated = n-type on Kan complexes, n = -1, 0, 1",
       // Six discrete sets, their cosk0, six groupoid nerves.
       [&] { return suite(corpus, "kancor", 18 * 3); }},
      {"5 rightfibre: slice projections lift against boundaries iff fibres are n-acyclic",
       [&] { return suite(corpus, "fibre-criterion", objects * 4); }},
      {"6 coskqcat: cosk_{n+1} X is an n-truncated quasi-category, unit bijective and an n-equivalence",
       // Eleven standard sets are quasi-categories: Delta^0..3, the five
       // discrete ones and the outer 2-horns. Then every nerve.
       [&] { return suite(corpus, "coskqcat", (11 + cats + corpus.posets.size()) * 8); }},
      {"7 counterexample: N(1) -> N(C) is a 0-equivalence, not essentially surjective",
       [&] { return suite(corpus, "counterexample", 3); }},
      {"8 Segal bridge: row identity at P=4, Segal hom = right hom = discrete hom set",
       [&] { return suite(corpus, "segal-bridge", cats + 2 * pairs); }},
      {"9 pushout-join of boundary inclusions, m = 1, 2, 3",
       [&] { return suite(corpus, "pushout-join", 6); }},
      {"10 check_rlp agrees with the exhaustive oracle on all subcomplexes of Delta^3",
       [&] { return suite(corpus, "oracle", 1 + 166 * 6); }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("error: ") + e.what()};
    }
    all = all && r.pass;
    std::cout << (r.pass ? "PASS " : "FAIL ") << c.label << " (" << r.detail << ")\n";
  }
  const double total = seconds_since(start);
  std::printf("total %.2f s (limit 600 s)\n", total);
  if (total >= 600) all = false;
  return all ? 0 : 1;
}
