#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "tqc/category/fincat.hpp"
#include "tqc/error.hpp"
#include "tqc/simplicial/sset.hpp"

namespace tqc {

/// The fixture directory or one of its files is missing.
class FixtureError : public Error {
 public:
  using Error::Error;
};

template <class T>
struct Named {
  std::string name;
  T value;
};

/// The bundled instances, in manifest order.
struct Corpus {
  std::vector<Named<FinCatPtr>> categories;
  std::vector<Named<FinPoset>> posets;
  std::vector<Named<SSetPtr>> ssets;

  const FinCatPtr& category(const std::string& name) const;
};

/// The corpus as built in code: the catalog categories, every poset on at
/// most three elements, and the standard simplices, boundaries, horns
/// (dimension <= 3) and small discrete sets.
Corpus builtin_corpus();

/// $TQC_FIXTURES when set, else the fixtures directory of the source tree.
std::filesystem::path default_fixture_dir();

/// Reads dir/manifest.json and every file it lists. Throws FixtureError when
/// something is missing; parse errors propagate.
Corpus load_corpus(const std::filesystem::path& dir);

/// Writes the corpus and its manifest under dir.
void write_corpus(const Corpus& corpus, const std::filesystem::path& dir);

}  // namespace tqc
