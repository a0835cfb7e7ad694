#include "tqc/harness/corpus.hpp"

#include <cctype>
#include <cstdlib>

#include "tqc/harness/enumerate.hpp"
#include "tqc/harness/io.hpp"
#include "tqc/simplicial/standard.hpp"

#ifndef TQC_FIXTURE_DIR
#define TQC_FIXTURE_DIR "fixtures"
#endif

namespace tqc {

namespace {

std::string file_stem(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') out += c;
  }
  return out;
}

template <class T, class Parse>
std::vector<Named<T>> load_section(const io::json& manifest, const char* key, const std::filesystem::path& dir,
                                   Parse parse) {
  std::vector<Named<T>> out;
  if (!manifest.contains(key)) throw FixtureError(std::string("manifest has no '") + key + "' section");
  for (const auto& entry : manifest.at(key)) {
    const std::string name = entry.at("name").get<std::string>();
    const std::filesystem::path file = dir / entry.at("file").get<std::string>();
    if (!std::filesystem::exists(file)) throw FixtureError("missing fixture " + file.string());
    out.push_back(Named<T>{name, parse(io::read_file(file))});
  }
  return out;
}

}  // namespace

const FinCatPtr& Corpus::category(const std::string& name) const {
  for (const auto& c : categories) {
    if (c.name == name) return c.value;
  }
  throw FixtureError("corpus has no category '" + name + "'");
}

Corpus builtin_corpus() {
  Corpus c;
  for (auto& e : catalog::corpus()) c.categories.push_back({e.name, e.category});
  const auto posets = enumerate_posets(3);
  std::vector<int> per_size(4, 0);
  for (const auto& p : posets) {
    const int k = p.size();
    c.posets.push_back({"poset" + std::to_string(k) + "-" + std::to_string(++per_size[static_cast<std::size_t>(k)]), p});
  }
  for (int n = 0; n <= 3; ++n) c.ssets.push_back({"simplex-" + std::to_string(n), share(standard::simplex(n))});
  for (int n = 1; n <= 3; ++n) c.ssets.push_back({"boundary-" + std::to_string(n), share(standard::boundary(n))});
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k <= n; ++k) {
      c.ssets.push_back({"horn-" + std::to_string(n) + "-" + std::to_string(k), share(standard::horn(n, k))});
    }
  }
  for (int n = 2; n <= 3; ++n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
    c.ssets.push_back({"discrete-" + std::to_string(n), share(standard::discrete(names))});
  }
  return c;
}

std::filesystem::path default_fixture_dir() {
  if (const char* env = std::getenv("TQC_FIXTURES"); env && *env) return env;
  return TQC_FIXTURE_DIR;
}

Corpus load_corpus(const std::filesystem::path& dir) {
  const auto manifest_path = dir / "manifest.json";
  if (!std::filesystem::exists(manifest_path)) throw FixtureError("no fixtures at " + dir.string());
  const io::json manifest = io::read_file(manifest_path);
  Corpus c;
  c.categories = load_section<FinCatPtr>(manifest, "categories", dir, [](const io::json& j) {
    return std::make_shared<const FinCat>(io::fincat_from_json(j));
  });
  c.posets = load_section<FinPoset>(manifest, "posets", dir, [](const io::json& j) { return io::poset_from_json(j); });
  c.ssets = load_section<SSetPtr>(manifest, "ssets", dir, [](const io::json& j) { return share(io::sset_from_json(j)); });
  return c;
}

void write_corpus(const Corpus& corpus, const std::filesystem::path& dir) {
  io::json manifest = io::json::object();
  auto section = [&](const char* key, const char* sub, const auto& items, auto serialise) {
    std::filesystem::create_directories(dir / sub);
    io::json list = io::json::array();
    for (const auto& item : items) {
      const std::string file = std::string(sub) + "/" + file_stem(item.name) + ".json";
      io::write_file(dir / file, serialise(item.value));
      list.push_back({{"name", item.name}, {"file", file}});
    }
    manifest[key] = list;
  };
  section("categories", "categories", corpus.categories, [](const FinCatPtr& c) { return io::to_json(*c); });
  section("posets", "posets", corpus.posets, [](const FinPoset& p) { return io::to_json(p); });
  section("ssets", "ssets", corpus.ssets, [](const SSetPtr& x) { return io::to_json(*x); });
  io::write_file(dir / "manifest.json", manifest);
}

}  // namespace tqc
