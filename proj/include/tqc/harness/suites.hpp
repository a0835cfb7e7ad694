#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tqc/harness/corpus.hpp"

namespace tqc {

struct ReportEntry {
  std::string instance;
  std::string claim;
  bool pass = false;
  int bound = 0;
  /// Always present on failure.
  std::optional<std::string> witness;
};

struct VerificationReport {
  std::string suite;
  std::vector<ReportEntry> entries;

  std::size_t passed() const;
  std::size_t failed() const { return entries.size() - passed(); }
  bool ok() const { return failed() == 0; }
};

/// catprop, posetprop, kancor, trunc-methods, coskqcat, counterexample,
/// segal-bridge, fibre-criterion, pushout-join, oracle.
const std::vector<std::string>& suite_names();

/// Runs one suite over the corpus with bound D. Entries come in corpus
/// order. Throws RangeError for an unknown suite name.
VerificationReport verify_suite(const std::string& name, const Corpus& corpus, int bound = 4);

nlohmann::json to_json(const VerificationReport& r);
/// One line per entry, then a summary line.
std::string to_text(const VerificationReport& r);

}  // namespace tqc
