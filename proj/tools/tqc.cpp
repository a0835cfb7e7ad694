#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "tqc/bisimplicial/bisimplicial.hpp"
#include "tqc/category/nerve.hpp"
#include "tqc/error.hpp"
#include "tqc/harness/compare.hpp"
#include "tqc/harness/corpus.hpp"
#include "tqc/harness/enumerate.hpp"
#include "tqc/harness/io.hpp"
#include "tqc/harness/suites.hpp"
#include "tqc/lifting/lifting.hpp"
#include "tqc/simplicial/constructions.hpp"
#include "tqc/truncation/truncation.hpp"

using namespace tqc;
using io::json;

namespace {

enum Exit { ok = 0, false_ = 1, usage = 2, schema = 3, invariant = 4, precondition = 5, fixtures = 6, failure = 7 };

struct Options {
  std::string format = "text";
  int bound = 4;
  std::string fixtures;
  std::optional<std::string> out;
};

int env_bound() {
  if (const char* v = std::getenv("TQC_BOUND"); v && *v) {
    try {
      return std::stoi(v);
    } catch (const std::exception&) {
      throw RangeError(std::string("TQC_BOUND is not an integer: ") + v);
    }
  }
  return 4;
}

void emit(const Options& o, const json& j, const std::string& text) {
  std::ostringstream s;
  if (o.format == "json") {
    s << j.dump(2) << '\n';
  } else {
    s << text;
    if (!text.empty() && text.back() != '\n') s << '\n';
  }
  if (o.out) {
    std::ofstream f(*o.out);
    if (!f) throw Error("cannot write " + *o.out);
    f << s.str();
  } else {
    std::cout << s.str();
  }
}

SSetPtr load_sset(const std::string& path, int bound) {
  const json j = io::read_file(path);
  switch (io::kind_of(j)) {
    case io::Kind::sset:
      return share(io::sset_from_json(j));
    case io::Kind::fincat:
      return nerve(std::make_shared<const FinCat>(io::fincat_from_json(j)), bound).object;
    case io::Kind::poset:
      return nerve(std::make_shared<const FinCat>(catalog::from_poset(io::poset_from_json(j))), bound).object;
    default:
      throw SchemaError(path + ": expected a simplicial set, category or poset");
  }
}

FinCatPtr load_fincat(const std::string& path) {
  const json j = io::read_file(path);
  switch (io::kind_of(j)) {
    case io::Kind::fincat:
      return std::make_shared<const FinCat>(io::fincat_from_json(j));
    case io::Kind::poset:
      return std::make_shared<const FinCat>(catalog::from_poset(io::poset_from_json(j)));
    default:
      throw SchemaError(path + ": expected a category or poset");
  }
}

GenRef vertex(const SSet& x, const std::string& name) {
  const auto g = x.find(name);
  if (!g || g->dim != 0) throw RangeError("no vertex named '" + name + "'");
  return *g;
}

std::string verdict_text(bool value, int up_to, const std::optional<RlpWitness>& w) {
  std::string s = std::string(value ? "true" : "false") + " (verified up to " + std::to_string(up_to) + ")";
  if (w) s += "\nwitness: " + describe(*w);
  return s;
}

int run_check(const Options& o, const std::string& pred, const std::string& file, int n, const std::string& method) {
  const json j = io::read_file(file);
  const io::Kind kind = io::kind_of(j);
  if (pred == "valid") {
    switch (kind) {
      case io::Kind::sset: io::sset_from_json(j); break;
      case io::Kind::fincat: io::fincat_from_json(j); break;
      case io::Kind::poset: io::poset_from_json(j); break;
      case io::Kind::bisset: io::bisset_from_json(j); break;
      case io::Kind::smap: io::smap_from_json(j); break;
    }
    emit(o, json{{"value", true}}, "valid");
    return ok;
  }
  static const std::map<std::string, FibrationClass> fibrations{{"inner-fibration", FibrationClass::inner},
                                                                  {"kan-fibration", FibrationClass::kan},
                                                                  {"right-fibration", FibrationClass::right},
                                                                  {"trivial-fibration", FibrationClass::trivial}};
  if (const auto it = fibrations.find(pred); it != fibrations.end()) {
    if (kind != io::Kind::smap) throw SchemaError(file + ": " + pred + " needs a map document");
    const auto v = is_fibration(io::smap_from_json(j), it->second, o.bound);
    emit(o, io::to_json(v), verdict_text(v.holds, v.verified_up_to, v.witness));
    return v.holds ? ok : false_;
  }
  const SSetPtr x = load_sset(file, o.bound);
  if (pred == "n-truncated") {
    const auto m = method == "coskeleton" ? TruncationMethod::coskeleton : TruncationMethod::lifting;
    const auto v = is_n_truncated(x, n, o.bound, m);
    emit(o, io::to_json(v), verdict_text(v.value, v.verified_up_to, v.witness));
    return v.value ? ok : false_;
  }
  RlpVerdict v;
  if (pred == "quasi-category") {
    v = is_quasi_category(x, o.bound);
  } else if (pred == "kan") {
    v = is_kan(x, o.bound);
  } else if (pred == "n-acyclic") {
    v = is_n_acyclic(x, n, o.bound);
  } else if (pred == "n-type") {
    v = is_n_type(x, n, o.bound);
  } else {
    throw RangeError("unknown predicate '" + pred + "'");
  }
  emit(o, io::to_json(v), verdict_text(v.holds, v.verified_up_to, v.witness));
  return v.holds ? ok : false_;
}

struct ComputeArgs {
  std::string op;
  std::vector<std::string> files;
  int n = 0;
  std::string from, to, at;
  int p = 2, q = 2;
};

json pi0_json(const SSet& x) {
  json out = json::array();
  for (const auto& comp : pi0(x)) {
    json c = json::array();
    for (int v : comp) c.push_back(x.name(GenRef{0, v}));
    out.push_back(c);
  }
  return out;
}

int run_compute(const Options& o, const ComputeArgs& a) {
  auto need = [&](std::size_t k) {
    if (a.files.size() != k) throw RangeError(a.op + " takes " + std::to_string(k) + " input file(s)");
  };
  auto sset_out = [&](const SSetPtr& x) { emit(o, io::to_json(*x), io::to_json(*x).dump(2)); };
  const std::string& op = a.op;
  if (op == "nerve") {
    need(1);
    sset_out(nerve(load_fincat(a.files[0]), o.bound).object);
  } else if (op == "ho") {
    need(1);
    const auto ho = homotopy_category(load_sset(a.files[0], o.bound), o.bound);
    const json j = io::to_json(*ho.category);
    emit(o, j, j.dump(2));
  } else if (op == "poset-reflection") {
    need(1);
    const json j = io::to_json(poset_reflection(*load_sset(a.files[0], o.bound)));
    emit(o, j, j.dump(2));
  } else if (op == "coskeleton") {
    need(1);
    sset_out(coskeleton(load_sset(a.files[0], o.bound), a.n, o.bound).object);
  } else if (op == "skeleton") {
    need(1);
    sset_out(skeleton(load_sset(a.files[0], o.bound), a.n).object);
  } else if (op == "truncate") {
    need(1);
    sset_out(truncate(load_sset(a.files[0], o.bound), a.n));
  } else if (op == "slice") {
    need(1);
    const auto x = load_sset(a.files[0], o.bound);
    sset_out(slice(x, vertex(*x, a.at)).object);
  } else if (op == "right-hom") {
    need(1);
    const auto x = load_sset(a.files[0], o.bound);
    sset_out(right_hom_space(x, vertex(*x, a.from), vertex(*x, a.to)));
  } else if (op == "maximal-kan") {
    need(1);
    sset_out(maximal_kan(load_sset(a.files[0], o.bound), o.bound).object);
  } else if (op == "suspension") {
    need(1);
    sset_out(suspension(load_sset(a.files[0], o.bound)));
  } else if (op == "product") {
    need(2);
    sset_out(product(load_sset(a.files[0], o.bound), load_sset(a.files[1], o.bound)).object);
  } else if (op == "join") {
    need(2);
    sset_out(join(load_sset(a.files[0], o.bound), load_sset(a.files[1], o.bound)).object);
  } else if (op == "pi0") {
    need(1);
    const json j = pi0_json(*load_sset(a.files[0], o.bound));
    emit(o, j, j.dump());
  } else if (op == "pi1") {
    need(1);
    const auto x = load_sset(a.files[0], o.bound);
    const auto p = pi1_presentation(*x, vertex(*x, a.at));
    emit(o, io::to_json(p), p.to_string());
  } else if (op == "classifying-diagram") {
    need(1);
    const json j = io::to_json(classifying_diagram(*load_fincat(a.files[0]), a.p, a.q));
    emit(o, j, j.dump(2));
  } else if (op == "zeroth-row" || op == "segal-hom") {
    need(1);
    const auto b = io::bisset_from_json(io::read_file(a.files[0]));
    if (op == "zeroth-row") {
      sset_out(share(zeroth_row(b)));
    } else {
      const auto& objs = b.cells(0, 0).names;
      auto find = [&](const std::string& name) {
        const auto it = std::find(objs.begin(), objs.end(), name);
        if (it == objs.end()) throw RangeError("no (0,0)-cell named '" + name + "'");
        return static_cast<int>(it - objs.begin());
      };
      sset_out(share(segal_hom_space(b, find(a.from), find(a.to))));
    }
  } else {
    throw RangeError("unknown operation '" + op + "'");
  }
  return ok;
}

int run_compare(const Options& o, const std::string& f1, const std::string& f2, int n,
                const std::optional<std::string>& map_file) {
  if (n != 0 && n != 1) throw RangeError("compare: --n must be 0 or 1");
  if (map_file) {
    const SMap f = io::smap_from_json(io::read_file(*map_file));
    const auto x = load_sset(f1, o.bound);
    const auto y = load_sset(f2, o.bound);
    if (!is_isomorphic(x, f.source_ptr()) || !is_isomorphic(y, f.target_ptr())) {
      throw InvariantError("the map does not run from " + f1 + " to " + f2);
    }
    const auto v = categorical_n_equivalence(f, n, o.bound);
    emit(o, json{{"value", v.value}, {"essentially_surjective", v.essentially_surjective}, {"diagnostic", v.diagnostic}},
         std::string(v.value ? "true" : "false") + " (" + v.diagnostic + ")");
    return v.value ? ok : false_;
  }
  bool value;
  if (n == 0) {
    value = order_isomorphic(poset_reflection(*load_sset(f1, o.bound)), poset_reflection(*load_sset(f2, o.bound)));
  } else {
    const auto hx = homotopy_category(load_sset(f1, o.bound), o.bound);
    const auto hy = homotopy_category(load_sset(f2, o.bound), o.bound);
    value = equivalent_categories(*hx.category, *hy.category);
  }
  emit(o, json{{"value", value}}, value ? "true" : "false");
  return value ? ok : false_;
}

int run_verify(const Options& o, const std::string& suite) {
  const Corpus corpus = load_corpus(o.fixtures.empty() ? default_fixture_dir() : std::filesystem::path(o.fixtures));
  std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  json reports = json::array();
  std::string text;
  bool all = true;
  for (const auto& name : names) {
    const auto r = verify_suite(name, corpus, o.bound);
    all = all && r.ok();
    reports.push_back(to_json(r));
    text += to_text(r);
  }
  emit(o, names.size() == 1 ? reports[0] : reports, text);
  return all ? ok : false_;
}

int run_enumerate(const Options& o, int sub_of, bool qcat_only) {
  json list = json::array();
  std::string text;
  std::size_t count = 0;
  for (const auto& s : enumerate_subcomplexes(sub_of)) {
    if (qcat_only && !is_quasi_category(s.object, o.bound)) continue;
    ++count;
    list.push_back(json{{"name", s.name()}, {"sset", io::to_json(*s.object)}});
    text += s.name() + "\n";
  }
  text += std::to_string(count) + " subcomplexes\n";
  emit(o, list, text);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated quasi-category toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  int code = ok;
  try {
    o.bound = env_bound();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  }
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--bound,-D", o.bound, "Dimension bound for every check (default 4 or $TQC_BOUND)");

  int n = 0;
  std::string pred, file, method = "lifting";
  auto* check = app.add_subcommand("check", "Check a predicate on a document");
  check->add_option("pred", pred,
                    "valid, quasi-category, kan, n-acyclic, n-truncated, n-type, "
                    "inner-fibration, kan-fibration, right-fibration, trivial-fibration")
      ->required();
  check->add_option("file", file)->required()->check(CLI::ExistingFile);
  check->add_option("--n", n, "Truncation level");
  check->add_option("--method", method)->check(CLI::IsMember({"lifting", "coskeleton"}));

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "Run a construction and print the result as JSON");
  compute->add_option("op", ca.op,
                      "nerve, ho, poset-reflection, coskeleton, skeleton, truncate, slice, right-hom, "
                      "maximal-kan, suspension, product, join, pi0, pi1, classifying-diagram, zeroth-row, "
                      "segal-hom")
      ->required();
  compute->add_option("files", ca.files)->required()->check(CLI::ExistingFile);
  compute->add_option("-o,--output", o.out, "Write to a file instead of stdout");
  compute->add_option("--n", ca.n);
  compute->add_option("--from", ca.from);
  compute->add_option("--to", ca.to);
  compute->add_option("--at,--base,--vertex", ca.at);
  compute->add_option("--P", ca.p);
  compute->add_option("--Q", ca.q);

  std::string f1, f2;
  std::optional<std::string> map_file;
  auto* compare = app.add_subcommand("compare", "Categorical n-equivalence, of two objects or along a map");
  compare->add_option("file1", f1)->required()->check(CLI::ExistingFile);
  compare->add_option("file2", f2)->required()->check(CLI::ExistingFile);
  compare->add_option("--n", n)->required();
  compare->add_option("--map", map_file, "A map file1 -> file2")->check(CLI::ExistingFile);

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite over the fixtures");
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(choices));
  verify->add_option("--fixtures", o.fixtures, "Fixture directory (default $TQC_FIXTURES or the bundled one)");

  int sub_of = 0;
  bool qcat_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "List the simplicial subsets of a standard simplex");
  enumerate->add_option("--sub-of", sub_of)->required();
  enumerate->add_flag("--qcat", qcat_only, "Keep quasi-categories only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int c = app.exit(e);
    return c == 0 ? ok : usage;
  }

  try {
    if (*check) code = run_check(o, pred, file, n, method);
    if (*compute) code = run_compute(o, ca);
    if (*compare) code = run_compare(o, f1, f2, n, map_file);
    if (*verify) code = run_verify(o, suite);
    if (*enumerate) code = run_enumerate(o, sub_of, qcat_only);
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << '\n';
    return schema;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return invariant;
  } catch (const FixtureError& e) {
    std::cerr << "fixtures: " << e.what() << '\n';
    return fixtures;
  } catch (const RangeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return precondition;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << '\n';
    return precondition;
  } catch (const WindowError& e) {
    std::cerr << "window: " << e.what() << '\n';
    return precondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return failure;
  }
  return code;
}
