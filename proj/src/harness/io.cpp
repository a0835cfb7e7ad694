#include "tqc/harness/io.hpp"

#include <fstream>
#include <map>
#include <set>

#include "tqc/error.hpp"

namespace tqc::io {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw SchemaError(std::string("expected an object holding '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing field '") + key + "'");
  return *it;
}

std::string str(const json& j, const char* what) {
  if (!j.is_string()) throw SchemaError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

int integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw SchemaError(std::string(what) + " must be an integer");
  return j.get<int>();
}

const json& array(const json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array");
  return j;
}

std::vector<int> int_list(const json& j, const char* what) {
  std::vector<int> out;
  for (const auto& v : array(j, what)) out.push_back(integer(v, what));
  return out;
}

json face_json(const SSet& x, const SimplexExpr& e) {
  return json{{"gen", x.name(e.gen())}, {"degens", e.degeneracies()}};
}

std::string cell_key(int p, int q) { return std::to_string(p) + "," + std::to_string(q); }

}  // namespace

SSet sset_from_json(const json& j) {
  const json& gens = array(field(j, "generators"), "generators");
  std::optional<int> trunc;
  if (j.contains("truncated_at") && !j.at("truncated_at").is_null()) {
    trunc = integer(j.at("truncated_at"), "truncated_at");
  }
  struct Raw {
    std::string name;
    int dim;
    std::vector<std::pair<std::string, std::vector<int>>> faces;
  };
  std::vector<Raw> raw;
  int top = -1;
  for (const auto& g : gens) {
    Raw r{str(field(g, "name"), "generator name"), integer(field(g, "dim"), "generator dim"), {}};
    for (const auto& f : array(field(g, "faces"), "faces")) {
      std::vector<int> degens;
      if (f.contains("degens")) degens = int_list(f.at("degens"), "degens");
      r.faces.emplace_back(str(field(f, "gen"), "face generator"), std::move(degens));
    }
    if (r.dim < 0) throw InvariantError("generator '" + r.name + "' has negative dimension");
    top = std::max(top, r.dim);
    raw.push_back(std::move(r));
  }
  SSet::Builder b;
  std::map<std::string, GenRef> refs;
  for (int d = 0; d <= top; ++d) {
    for (const Raw& r : raw) {
      if (r.dim != d) continue;
      std::vector<SimplexExpr> faces;
      for (const auto& [name, degens] : r.faces) {
        const auto it = refs.find(name);
        if (it == refs.end()) {
          throw InvariantError("generator '" + r.name + "' has a face naming unknown generator '" + name + "'");
        }
        try {
          faces.emplace_back(it->second, degens);
        } catch (const Error& e) {
          throw InvariantError("generator '" + r.name + "': " + e.what());
        }
      }
      if (refs.count(r.name)) throw InvariantError("duplicate generator '" + r.name + "'");
      refs.emplace(r.name, b.add(r.name, d, std::move(faces)));
    }
  }
  try {
    return std::move(b).build(trunc);
  } catch (const InvariantError&) {
    throw;
  } catch (const Error& e) {
    throw InvariantError(e.what());
  }
}

json to_json(const SSet& x) {
  json gens = json::array();
  for (int d = 0; d <= x.dim(); ++d) {
    for (int i = 0; i < static_cast<int>(x.num_generators(d)); ++i) {
      const Generator& g = x.generator(GenRef{d, i});
      json faces = json::array();
      for (const auto& f : g.faces) faces.push_back(face_json(x, f));
      gens.push_back(json{{"name", g.name}, {"dim", d}, {"faces", faces}});
    }
  }
  json out{{"generators", gens}};
  out["truncated_at"] = x.truncated_at() ? json(*x.truncated_at()) : json(nullptr);
  return out;
}

FinCat fincat_from_json(const json& j) {
  FinCat::Builder b;
  std::map<std::string, int> obj, mor;
  for (const auto& o : array(field(j, "objects"), "objects")) {
    const std::string name = str(o, "object");
    if (obj.count(name)) throw InvariantError("duplicate object '" + name + "'");
    obj.emplace(name, b.object(name));
  }
  auto object = [&](const std::string& name) {
    const auto it = obj.find(name);
    if (it == obj.end()) throw InvariantError("unknown object '" + name + "'");
    return it->second;
  };
  auto morphism = [&](const std::string& name) {
    const auto it = mor.find(name);
    if (it == mor.end()) throw InvariantError("unknown morphism '" + name + "'");
    return it->second;
  };
  for (const auto& m : array(field(j, "morphisms"), "morphisms")) {
    const std::string name = str(field(m, "name"), "morphism name");
    if (mor.count(name)) throw InvariantError("duplicate morphism '" + name + "'");
    mor.emplace(name, b.morphism(name, object(str(field(m, "src"), "src")), object(str(field(m, "tgt"), "tgt"))));
  }
  const json& ids = field(j, "identities");
  if (!ids.is_object()) throw SchemaError("identities must be an object");
  for (const auto& [o, m] : ids.items()) b.identity(object(o), morphism(str(m, "identity")));
  for (const auto& row : array(field(j, "compose"), "compose")) {
    if (!row.is_array() || row.size() != 3) throw SchemaError("compose entries must be [g, f, gf]");
    b.compose(morphism(str(row[0], "g")), morphism(str(row[1], "f")), morphism(str(row[2], "gf")));
  }
  if (static_cast<int>(ids.size()) != static_cast<int>(obj.size())) {
    throw InvariantError("every object needs exactly one identity");
  }
  return std::move(b).build();
}

json to_json(const FinCat& c) {
  json objects = json::array(), morphisms = json::array(), ids = json::object(), comp = json::array();
  for (int x = 0; x < c.num_objects(); ++x) {
    objects.push_back(c.object_name(x));
    ids[c.object_name(x)] = c.morphism(c.identity(x)).name;
  }
  for (int f = 0; f < c.num_morphisms(); ++f) {
    const auto& m = c.morphism(f);
    morphisms.push_back(json{{"name", m.name}, {"src", c.object_name(m.src)}, {"tgt", c.object_name(m.tgt)}});
  }
  for (int g = 0; g < c.num_morphisms(); ++g) {
    for (int f = 0; f < c.num_morphisms(); ++f) {
      if (c.is_identity(g) || c.is_identity(f) || c.morphism(f).tgt != c.morphism(g).src) continue;
      comp.push_back(json::array({c.morphism(g).name, c.morphism(f).name, c.morphism(c.compose(g, f)).name}));
    }
  }
  return json{{"objects", objects}, {"morphisms", morphisms}, {"identities", ids}, {"compose", comp}};
}

FinPoset poset_from_json(const json& j) {
  std::vector<std::string> names;
  std::map<std::string, int> idx;
  for (const auto& e : array(field(j, "elements"), "elements")) {
    const std::string n = str(e, "element");
    if (idx.count(n)) throw InvariantError("duplicate poset element '" + n + "'");
    idx.emplace(n, static_cast<int>(names.size()));
    names.push_back(n);
  }
  std::vector<std::pair<int, int>> leq;
  for (const auto& row : array(field(j, "leq"), "leq")) {
    if (!row.is_array() || row.size() != 2) throw SchemaError("leq entries must be [a, b]");
    const std::string a = str(row[0], "a");
    const std::string b = str(row[1], "b");
    if (!idx.count(a) || !idx.count(b)) throw InvariantError("order pair names an unknown element");
    leq.emplace_back(idx.at(a), idx.at(b));
  }
  return FinPoset(std::move(names), leq);
}

json to_json(const FinPoset& p) {
  json el = json::array(), leq = json::array();
  for (int x = 0; x < p.size(); ++x) el.push_back(p.name(x));
  for (auto [a, b] : p.strict_pairs()) leq.push_back(json::array({p.name(a), p.name(b)}));
  return json{{"elements", el}, {"leq", leq}};
}

TruncBiSSet bisset_from_json(const json& j) {
  const int P = integer(field(j, "P"), "P");
  const int Q = integer(field(j, "Q"), "Q");
  if (P < 0 || Q < 0) throw InvariantError("negative bisimplicial window");
  const json& cells = field(j, "cells");
  std::vector<std::vector<TruncBiSSet::Cells>> out(sz(P + 1), std::vector<TruncBiSSet::Cells>(sz(Q + 1)));
  auto ops = [&](const char* key, const std::string& at, std::size_t n) {
    std::vector<std::vector<int>> v;
    const json& table = field(field(j, key), at.c_str());
    for (const auto& row : array(table, key)) v.push_back(int_list(row, key));
    if (v.size() != n) throw InvariantError(std::string(key) + " at " + at + " do not cover the cells");
    return v;
  };
  for (int p = 0; p <= P; ++p) {
    for (int q = 0; q <= Q; ++q) {
      const std::string at = cell_key(p, q);
      auto& c = out[sz(p)][sz(q)];
      for (const auto& n : array(field(cells, at.c_str()), "cells")) c.names.push_back(str(n, "cell name"));
      c.hfaces = ops("hfaces", at, c.names.size());
      c.hdegens = ops("hdegens", at, c.names.size());
      c.vfaces = ops("vfaces", at, c.names.size());
      c.vdegens = ops("vdegens", at, c.names.size());
    }
  }
  return TruncBiSSet(P, Q, std::move(out));
}

json to_json(const TruncBiSSet& b) {
  json cells = json::object(), hf = json::object(), hd = json::object(), vf = json::object(), vd = json::object();
  for (int p = 0; p <= b.P(); ++p) {
    for (int q = 0; q <= b.Q(); ++q) {
      const std::string at = cell_key(p, q);
      const auto& c = b.cells(p, q);
      cells[at] = c.names;
      hf[at] = c.hfaces;
      hd[at] = c.hdegens;
      vf[at] = c.vfaces;
      vd[at] = c.vdegens;
    }
  }
  return json{{"P", b.P()}, {"Q", b.Q()}, {"cells", cells}, {"hfaces", hf}, {"hdegens", hd}, {"vfaces", vf}, {"vdegens", vd}};
}

SMap smap_from_json(const json& j) {
  auto source = share(sset_from_json(field(j, "source")));
  auto target = share(sset_from_json(field(j, "target")));
  const json& images = field(j, "images");
  if (!images.is_object()) throw SchemaError("images must be an object");
  SMap::Assignment a(sz(source->dim() + 1));
  for (int d = 0; d <= source->dim(); ++d) {
    for (int i = 0; i < static_cast<int>(source->num_generators(d)); ++i) {
      const std::string& name = source->name(GenRef{d, i});
      if (!images.contains(name)) throw InvariantError("no image for generator '" + name + "'");
      const json& img = images.at(name);
      const std::string tname = str(field(img, "gen"), "image generator");
      const auto g = target->find(tname);
      if (!g) throw InvariantError("image of '" + name + "' names unknown generator '" + tname + "'");
      std::vector<int> degens;
      if (img.contains("degens")) degens = int_list(img.at("degens"), "degens");
      a[sz(d)].emplace_back(*g, degens);
    }
  }
  return SMap(source, target, std::move(a));
}

json to_json(const SMap& f) {
  json images = json::object();
  const SSet& s = f.source();
  for (int d = 0; d <= s.dim(); ++d) {
    for (int i = 0; i < static_cast<int>(s.num_generators(d)); ++i) {
      images[s.name(GenRef{d, i})] = face_json(f.target(), f(GenRef{d, i}));
    }
  }
  return json{{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"images", images}};
}

json to_json(const RlpWitness& w) {
  json top = json::object();
  const SSet& k = w.top.source();
  for (int d = 0; d <= k.dim(); ++d) {
    for (int i = 0; i < static_cast<int>(k.num_generators(d)); ++i) {
      top[k.name(GenRef{d, i})] = w.top.target().describe(w.top(GenRef{d, i}));
    }
  }
  json out{{"m", w.m}, {"k", w.k}, {"top", top}, {"text", describe(w)}};
  out["bottom"] = w.bottom ? json(w.bottom->target().describe(w.bottom->assignment().back().front())) : json(nullptr);
  return out;
}

json to_json(const RlpVerdict& v) {
  json out{{"value", v.holds}, {"verified_up_to", v.verified_up_to}};
  out["witness"] = v.witness ? to_json(*v.witness) : json(nullptr);
  return out;
}

json to_json(const TruncationVerdict& v) {
  json out{{"value", v.value}, {"method", to_string(v.method)}, {"verified_up_to", v.verified_up_to}};
  out["witness"] = v.witness ? to_json(*v.witness) : json(nullptr);
  return out;
}

json to_json(const GroupPresentation& p) {
  json rels = json::array();
  for (const Word& w : p.relators) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      s += (i ? "." : "") + p.generators[sz(w[i].gen)] + (w[i].exp < 0 ? "^-1" : "");
    }
    rels.push_back(s);
  }
  return json{{"generators", p.generators}, {"relators", rels}, {"relator_rank", p.relator_rank()},
              {"text", p.to_string()}};
}

Kind kind_of(const json& j) {
  if (!j.is_object()) throw SchemaError("document must be a JSON object");
  if (j.contains("images")) return Kind::smap;
  if (j.contains("generators")) return Kind::sset;
  if (j.contains("objects")) return Kind::fincat;
  if (j.contains("elements")) return Kind::poset;
  if (j.contains("cells")) return Kind::bisset;
  throw SchemaError("unrecognised document: expected generators, objects, elements, cells or images");
}

json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

void write_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace tqc::io
