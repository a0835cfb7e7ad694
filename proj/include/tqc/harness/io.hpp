#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "tqc/bisimplicial/bisimplicial.hpp"
#include "tqc/category/fincat.hpp"
#include "tqc/lifting/lifting.hpp"
#include "tqc/simplicial/smap.hpp"
#include "tqc/simplicial/sset.hpp"
#include "tqc/truncation/truncation.hpp"

namespace tqc::io {

using json = nlohmann::json;

/// Malformed documents raise SchemaError; well-formed documents describing
/// invalid structures raise InvariantError.
SSet sset_from_json(const json& j);
json to_json(const SSet& x);

FinCat fincat_from_json(const json& j);
json to_json(const FinCat& c);

FinPoset poset_from_json(const json& j);
json to_json(const FinPoset& p);

TruncBiSSet bisset_from_json(const json& j);
json to_json(const TruncBiSSet& b);

/// {"source": sset, "target": sset, "images": {name: {"gen": name, "degens": [...]}}}
SMap smap_from_json(const json& j);
json to_json(const SMap& f);

json to_json(const RlpWitness& w);
json to_json(const RlpVerdict& v);
json to_json(const TruncationVerdict& v);
json to_json(const GroupPresentation& p);

enum class Kind { sset, fincat, poset, bisset, smap };
/// Guesses the document kind from its top-level keys.
Kind kind_of(const json& j);

json read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const json& j);

}  // namespace tqc::io
