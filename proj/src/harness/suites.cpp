#include "tqc/harness/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "tqc/bisimplicial/bisimplicial.hpp"
#include "tqc/category/nerve.hpp"
#include "tqc/harness/enumerate.hpp"
#include "tqc/harness/oracle.hpp"
#include "tqc/lifting/lifting.hpp"
#include "tqc/simplicial/constructions.hpp"
#include "tqc/simplicial/standard.hpp"
#include "tqc/truncation/truncation.hpp"

namespace tqc {

namespace {

// A claim either passes or fails with a witness.
struct Outcome {
  bool pass;
  std::string witness;
};

Outcome from(const RlpVerdict& v) { return {v.holds, v.witness ? describe(*v.witness) : "no square found"}; }
Outcome from(const TruncationVerdict& v) { return {v.value, v.witness ? describe(*v.witness) : "no square found"}; }

class Run {
 public:
  Run(std::string suite, int bound) : bound_(bound) { report_.suite = std::move(suite); }

  void claim(const std::string& instance, const std::string& claim, const std::function<Outcome()>& body) {
    ReportEntry e{instance, claim, false, bound_, std::nullopt};
    try {
      const Outcome o = body();
      e.pass = o.pass;
      if (!o.pass) e.witness = o.witness.empty() ? "claim failed" : o.witness;
    } catch (const std::exception& ex) {
      e.witness = std::string("error: ") + ex.what();
    }
    report_.entries.push_back(std::move(e));
  }

  int bound() const { return bound_; }
  VerificationReport take() { return std::move(report_); }

 private:
  int bound_;
  VerificationReport report_;
};

bool iso_up_to_window(SSetPtr a, SSetPtr b) {
  const int w = std::min(a->window(), b->window());
  if (a->window() > w) a = truncate(a, w);
  if (b->window() > w) b = truncate(b, w);
  return is_isomorphic(a, b).has_value();
}

SSetPtr discrete_of_size(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  return share(standard::discrete(names));
}

bool is_groupoid(const FinCat& c) {
  for (int f = 0; f < c.num_morphisms(); ++f) {
    if (!c.is_iso(f)) return false;
  }
  return true;
}

std::string pair_name(const std::string& base, const FinCat& c, int x, int y) {
  return base + "(" + c.object_name(x) + "," + c.object_name(y) + ")";
}

std::string n_label(int n) { return "n=" + std::to_string(n); }

std::vector<Named<SSetPtr>> quasi_categories(const Corpus& corpus, int bound) {
  std::vector<Named<SSetPtr>> out;
  for (const auto& s : corpus.ssets) {
    if (is_quasi_category(s.value, bound)) out.push_back(s);
  }
  for (const auto& c : corpus.categories) out.push_back({"N(" + c.name + ")", nerve(c.value, bound).object});
  for (const auto& p : corpus.posets) {
    out.push_back({"N(" + p.name + ")", nerve(std::make_shared<const FinCat>(catalog::from_poset(p.value)), bound).object});
  }
  return out;
}

std::vector<Named<SSetPtr>> kan_complexes(const Corpus& corpus, int bound) {
  std::vector<Named<SSetPtr>> out;
  for (const auto& s : corpus.ssets) {
    if (s.value->dim() <= 0) out.push_back(s);
  }
  for (const auto& s : corpus.ssets) {
    if (s.value->dim() <= 0) out.push_back({"cosk0(" + s.name + ")", coskeleton(s.value, 0, bound).object});
  }
  for (const auto& c : corpus.categories) {
    if (is_groupoid(*c.value)) out.push_back({"N(" + c.name + ")", nerve(c.value, bound).object});
  }
  return out;
}

void catprop(Run& run, const Corpus& corpus) {
  const int d = run.bound();
  for (const auto& c : corpus.categories) {
    const auto n = nerve(c.value, d).object;
    const std::string inst = "N(" + c.name + ")";
    run.claim(inst, "quasi-category", [&] { return from(is_quasi_category(n, d)); });
    run.claim(inst, "1-truncated", [&] {
      return from(is_n_truncated(n, 1, d, TruncationMethod::lifting, {false}));
    });
    run.claim(inst, "unit to N(ho) is a trivial fibration", [&] {
      const HomotopyCategory ho = homotopy_category(n, d, {false});
      const Nerve nh = nerve(ho.category, d);
      return from(is_fibration(unit_to_nerve(n, ho, nh), FibrationClass::trivial, d));
    });
  }
}

void posetprop(Run& run, const Corpus& corpus) {
  const int d = run.bound();
  for (const auto& p : corpus.posets) {
    const auto n = nerve(std::make_shared<const FinCat>(catalog::from_poset(p.value)), d).object;
    run.claim("N(" + p.name + ")", "0-truncated", [&] {
      return from(is_n_truncated(n, 0, d, TruncationMethod::lifting, {false}));
    });
  }
  const auto z2 = nerve(corpus.category("Z/2"), d).object;
  run.claim("N(Z/2)", "not 0-truncated", [&] {
    const auto v = is_n_truncated(z2, 0, d, TruncationMethod::lifting, {false});
    return Outcome{!v.value, "every square lifted"};
  });
  run.claim("N(Z/2)", "1-truncated", [&] {
    return from(is_n_truncated(z2, 1, d, TruncationMethod::lifting, {false}));
  });
}

void trunc_methods(Run& run, const Corpus&) {
  const int d = run.bound();
  for (const auto& s : enumerate_subcomplexes(3)) {
    if (!is_quasi_category(s.object, d)) continue;
    for (int n = -1; n <= 2; ++n) {
      run.claim(s.name(), "lifting = coskeleton, " + n_label(n), [&] {
        const auto a = is_n_truncated(s.object, n, d, TruncationMethod::lifting, {false});
        const auto b = is_n_truncated(s.object, n, d, TruncationMethod::coskeleton, {false});
        std::ostringstream w;
        w << "lifting=" << a.value << " coskeleton=" << b.value;
        return Outcome{a.value == b.value, w.str()};
      });
    }
  }
}

void kancor(Run& run, const Corpus& corpus) {
  const int d = run.bound();
  for (const auto& k : kan_complexes(corpus, d)) {
    for (int n = -1; n <= 1; ++n) {
      run.claim(k.name, "n-truncated = n-type, " + n_label(n), [&] {
        const auto a = is_n_truncated(k.value, n, d, TruncationMethod::lifting, {false});
        const auto b = is_n_type(k.value, n, d, {false});
        std::ostringstream w;
        w << "truncated=" << a.value << " type=" << b.holds;
        return Outcome{a.value == b.holds, w.str()};
      });
    }
  }
}

void coskqcat(Run& run, const Corpus& corpus) {
  const int d = run.bound();
  for (const auto& x : quasi_categories(corpus, d)) {
    const auto xt = x.value->dim() > d ? truncate(x.value, d) : x.value;
    for (int n = 0; n <= 1; ++n) {
      const std::string k = std::to_string(n + 1);
      std::optional<Coskeleton> c;
      run.claim(x.name, "cosk" + k + " quasi-category", [&] {
        c = coskeleton(xt, n + 1, d);
        return from(is_quasi_category(c->object, d));
      });
      if (!c) continue;
      run.claim(x.name, "cosk" + k + " " + std::to_string(n) + "-truncated", [&] {
        return from(is_n_truncated(c->object, n, d, TruncationMethod::lifting, {false}));
      });
      run.claim(x.name, "unit " + k + "-bijective", [&] {
        return Outcome{is_n_bijective(c->unit, n + 1), "some degree <= " + k + " is not a bijection"};
      });
      run.claim(x.name, "unit categorical " + std::to_string(n) + "-equivalence", [&] {
        const auto v = categorical_n_equivalence(c->unit, n, d, {false});
        return Outcome{v.value, v.diagnostic};
      });
    }
  }
}

void counterexample(Run& run, const Corpus& corpus) {
  const int d = run.bound();
  const auto one = nerve(std::make_shared<const FinCat>(catalog::chain(0)), d).object;
  const auto target = nerve(corpus.category("opposite-arrows"), d).object;
  const SMap f(one, target, {{SimplexExpr(GenRef{0, 0})}});
  const std::string inst = "N(1) -> N(opposite-arrows)";
  run.claim(inst, "categorical 0-equivalence", [&] {
    const auto v = categorical_n_equivalence(f, 0, d);
    return Outcome{v.value, v.diagnostic};
  });
  run.claim(inst, "not essentially surjective", [&] {
    const auto v = categorical_n_equivalence(f, 0, d);
    return Outcome{!v.essentially_surjective, v.diagnostic};
  });
  run.claim(inst, "not a categorical 1-equivalence", [&] {
    const auto v = categorical_n_equivalence(f, 1, d);
    return Outcome{!v.value, v.diagnostic};
  });
}

void segal_bridge(Run& run, const Corpus& corpus) {
  const int d = run.bound();
  for (const auto& c : corpus.categories) {
    const FinCat& a = *c.value;
    run.claim(c.name, "row identity P=" + std::to_string(d), [&] {
      return Outcome{verify_row_identity(c.value, d), "zeroth row differs from the nerve"};
    });
    const auto b = classifying_diagram(a, 1, d - 1);
    const auto n = nerve(c.value, d).object;
    for (int x = 0; x < a.num_objects(); ++x) {
      for (int y = 0; y < a.num_objects(); ++y) {
        const std::string inst = pair_name(c.name, a, x, y);
        SSetPtr h;
        run.claim(inst, "Segal hom = right hom", [&] {
          h = share(segal_hom_space(b, x, y));
          return Outcome{iso_up_to_window(h, right_hom_space(n, GenRef{0, x}, GenRef{0, y})), "not isomorphic"};
        });
        if (!h) continue;
        run.claim(inst, "Segal hom is discrete on A(a,b)", [&] {
          return Outcome{iso_up_to_window(h, discrete_of_size(a.hom(x, y).size())), "not isomorphic"};
        });
      }
    }
  }
}

void fibre_criterion(Run& run, const Corpus& corpus) {
  const int d = run.bound();
  for (const auto& c : corpus.categories) {
    const auto x = nerve(c.value, d + 1).object;
    const FinCat& a = *c.value;
    for (int y = 0; y < a.num_objects(); ++y) {
      const Slice s = slice(x, GenRef{0, y});
      const std::string inst = "N(" + c.name + ")/" + a.object_name(y);
      run.claim(inst, "right fibration", [&] { return from(is_fibration(s.projection, FibrationClass::right, d)); });
      for (int n = -1; n <= 1; ++n) {
        run.claim(inst, "boundary lifting iff acyclic fibres, " + n_label(n), [&] {
          const auto lhs = check_rlp(s.projection, Family::boundary, n + 1, d);
          bool rhs = true;
          std::string where;
          for (int v = 0; v < a.num_objects() && rhs; ++v) {
            rhs = is_n_acyclic(right_hom_space(x, GenRef{0, v}, GenRef{0, y}), n, d).holds;
            if (!rhs) where = " (fibre over " + a.object_name(v) + ")";
          }
          std::ostringstream w;
          w << "lifting=" << lhs.holds << " fibres=" << rhs << where;
          return Outcome{lhs.holds == rhs, w.str()};
        });
      }
    }
  }
}

void pushout_join(Run& run, const Corpus&) {
  auto empty = share(SSet{});
  auto d0 = share(standard::simplex(0));
  for (int m = 1; m <= 3; ++m) {
    const std::string inst = "m=" + std::to_string(m);
    auto bd = share(standard::boundary(m));
    auto sx = share(standard::simplex(m));
    const SMap i = standard::inclusion(bd, sx);
    const SMap e(empty, d0, {});
    const Join bd_e = join(bd, empty);
    const Join sx_e = join(sx, empty);
    const Join bd_0 = join(bd, d0);
    const Join sx_0 = join(sx, d0);
    const SMap top = join_maps(SMap::identity(bd), e, bd_e, bd_0);
    const SMap left = join_maps(i, SMap::identity(empty), bd_e, sx_e);
    const Pushout po = pushout(top, left);
    run.claim(inst, "pushout simplex counts match the quotient oracle", [&] {
      const int t = m + 2;
      const auto expected = oracle::pushout_counts(top, left, t);
      const auto table = SimplexTable::from_sset(*po.object, t);
      for (int k = 0; k <= t; ++k) {
        if (table.size(k) != expected[static_cast<std::size_t>(k)]) {
          return Outcome{false, "degree " + std::to_string(k) + ": " + std::to_string(table.size(k)) + " vs " +
                                    std::to_string(expected[static_cast<std::size_t>(k)])};
        }
      }
      return Outcome{true, ""};
    });
    run.claim(inst, "corner map is the boundary inclusion of Delta^" + std::to_string(m + 1), [&] {
      const SMap corner = induced(po, join_maps(i, SMap::identity(d0), bd_0, sx_0),
                                  join_maps(SMap::identity(sx), e, sx_e, sx_0));
      auto big_sx = share(standard::simplex(m + 1));
      const bool ok = is_isomorphic_mono(corner, standard::inclusion(share(standard::boundary(m + 1)), big_sx));
      return Outcome{ok, "not isomorphic as arrows"};
    });
  }
}

void oracle_suite(Run& run, const Corpus&) {
  const auto subs = enumerate_subcomplexes(3);
  run.claim("Delta^3", "enumeration matches the powerset filter", [&] {
    auto expected = oracle::subcomplexes(3);
    std::vector<std::vector<unsigned>> got;
    for (const auto& s : subs) got.push_back(s.faces);
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    return Outcome{got == expected, std::to_string(got.size()) + " vs " + std::to_string(expected.size())};
  });
  struct Case {
    Family family;
    int m;
  };
  std::vector<Case> cases;
  for (int m = 0; m <= 3; ++m) cases.push_back({Family::boundary, m});
  for (int m = 2; m <= 3; ++m) cases.push_back({Family::inner_horn, m});
  std::map<std::pair<int, int>, SSetPtr> sources;
  for (const Case& c : cases) {
    if (c.family == Family::boundary) {
      sources[{c.m, -1}] = share(standard::boundary(c.m));
    } else {
      for (int k = 1; k < c.m; ++k) sources[{c.m, k}] = share(standard::horn(c.m, k));
    }
  }
  for (const auto& s : subs) {
    const oracle::FaceComplex fc{3, s.faces};
    for (const Case& c : cases) {
      run.claim(s.name(), to_string(c.family) + " m=" + std::to_string(c.m), [&] {
        const auto naive = oracle::rlp(fc, c.family, c.m);
        const auto engine = check_rlp(s.object, c.family, c.m, c.m);
        std::size_t squares = 0;
        for (const auto& [key, k] : sources) {
          if (key.first == c.m && (c.family == Family::boundary) == (key.second < 0)) {
            squares += enumerate_maps(k, s.object).size();
          }
        }
        std::ostringstream w;
        w << "engine=" << engine.holds << " oracle=" << naive.holds << " squares " << squares << " vs "
          << naive.squares;
        return Outcome{engine.holds == naive.holds && squares == naive.squares, w.str()};
      });
    }
  }
}

using SuiteFn = void (*)(Run&, const Corpus&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"catprop", catprop},
      {"posetprop", posetprop},
      {"kancor", kancor},
      {"trunc-methods", trunc_methods},
      {"coskqcat", coskqcat},
      {"counterexample", counterexample},
      {"segal-bridge", segal_bridge},
      {"fibre-criterion", fibre_criterion},
      {"pushout-join", pushout_join},
      {"oracle", oracle_suite},
  };
  return r;
}

}  // namespace

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.pass; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

VerificationReport verify_suite(const std::string& name, const Corpus& corpus, int bound) {
  for (const auto& [n, fn] : registry()) {
    if (n == name) {
      Run run(name, bound);
      fn(run, corpus);
      return run.take();
    }
  }
  throw RangeError("unknown suite '" + name + "'");
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries) {
    nlohmann::json j{{"instance", e.instance}, {"claim", e.claim}, {"pass", e.pass}, {"bound", e.bound}};
    j["witness"] = e.witness ? nlohmann::json(*e.witness) : nlohmann::json(nullptr);
    entries.push_back(std::move(j));
  }
  return {{"suite", r.suite},
          {"entries", entries},
          {"summary", {{"total", r.entries.size()}, {"passed", r.passed()}, {"failed", r.failed()}}}};
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream out;
  for (const auto& e : r.entries) {
    out << (e.pass ? "pass  " : "FAIL  ") << e.instance << ": " << e.claim;
    if (e.witness) out << "  [" << *e.witness << "]";
    out << '\n';
  }
  out << r.suite << ": " << r.passed() << "/" << r.entries.size() << " passed\n";
  return out.str();
}

}  // namespace tqc
