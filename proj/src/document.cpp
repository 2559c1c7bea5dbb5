// SPDX-License-Identifier: Apache-2.0

#include "ctbound/document.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "ctbound/error.hpp"

namespace ctbound {

namespace {

using nlohmann::json;

[[noreturn]] void fail_at(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kBadDocument, "at " + path + ": " + what);
}

// Re-tags errors from the algebra and weights layers with a location while
// keeping their code.
template <typename F>
auto located(const std::string& path, F&& build) {
  try {
    return build();
  } catch (const Error& e) {
    throw Error(e.code(), "at " + path + ": " + e.detail());
  }
}

const json* field(const json& obj, const std::string& key) {
  const auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

int integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail_at(path, "expected an integer");
  const auto n = v.get<long long>();
  if (n < -1'000'000'000LL || n > 1'000'000'000LL) fail_at(path, "integer out of range");
  return static_cast<int>(n);
}

bool boolean(const json& v, const std::string& path) {
  if (!v.is_boolean()) fail_at(path, "expected a boolean");
  return v.get<bool>();
}

const std::string& text(const json& v, const std::string& path) {
  if (!v.is_string()) fail_at(path, "expected a string");
  return v.get_ref<const std::string&>();
}

void only_keys(const json& obj, const std::string& path, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : obj.items()) {
    bool known = false;
    for (const char* allowed : keys) known = known || k == allowed;
    if (!known) fail_at(path + "/" + k, "unknown field");
  }
}

std::vector<Generator> parse_generators(const json& list) {
  if (!list.is_array() || list.empty()) fail_at("/generators", "expected a non-empty array");
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string at = "/generators/" + std::to_string(i);
    const json& g = list[i];
    if (!g.is_object()) fail_at(at, "expected an object");
    only_keys(g, at, {"name", "degree", "nilpotency"});
    Generator gen;
    const json* name = field(g, "name");
    if (!name) fail_at(at + "/name", "missing");
    gen.name = text(*name, at + "/name");
    const json* degree = field(g, "degree");
    if (!degree) fail_at(at + "/degree", "missing");
    gen.degree = integer(*degree, at + "/degree");
    if (const json* nil = field(g, "nilpotency")) {
      if (nil->is_string()) {
        if (nil->get<std::string>() != "unbounded") {
          fail_at(at + "/nilpotency", "expected an integer or \"unbounded\"");
        }
      } else {
        gen.nilpotency = integer(*nil, at + "/nilpotency");
      }
    }
    gens.push_back(std::move(gen));
  }
  return gens;
}

std::map<std::string, WeightSpec> parse_weights(const json& obj) {
  if (!obj.is_object()) fail_at("/weights", "expected an object");
  std::map<std::string, WeightSpec> specs;
  for (const auto& [name, entry] : obj.items()) {
    const std::string at = "/weights/" + name;
    WeightSpec spec;
    if (entry.is_number_integer()) {
      spec.weight = integer(entry, at);
      spec.justification = Justification::kManual;
    } else if (entry.is_object()) {
      only_keys(entry, at, {"weight", "justification"});
      const json* w = field(entry, "weight");
      if (!w) fail_at(at + "/weight", "missing");
      spec.weight = integer(*w, at + "/weight");
      spec.justification = Justification::kManual;
      if (const json* j = field(entry, "justification")) {
        spec.justification =
            located(at + "/justification", [&] { return parse_justification(text(*j, at + "/justification")); });
      }
    } else {
      fail_at(at, "expected an object {weight, justification}");
    }
    specs[name] = spec;
  }
  return specs;
}

std::vector<SequenceEntry> parse_sequence(const json& list) {
  if (!list.is_array()) fail_at("/sequence", "expected an array");
  std::vector<SequenceEntry> entries;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string at = "/sequence/" + std::to_string(i);
    const json& item = list[i];
    SequenceEntry e;
    e.copies = 1;
    if (item.is_string()) {
      e.factor = item.get<std::string>();
    } else if (item.is_object()) {
      only_keys(item, at, {"factor", "copies", "weight"});
      const json* f = field(item, "factor");
      if (!f) fail_at(at + "/factor", "missing");
      e.factor = text(*f, at + "/factor");
      if (const json* c = field(item, "copies")) e.copies = integer(*c, at + "/copies");
      if (const json* w = field(item, "weight")) e.weight = integer(*w, at + "/weight");
    } else {
      fail_at(at, "expected an object {factor, copies, weight}");
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

// Locates a build_sequence failure at the first entry that fails on its own.
WeightedSequence locate_sequence(const std::vector<SequenceEntry>& entries, const MonomialAlgebra& a,
                                 const WeightAssignment& wa) {
  try {
    return build_sequence(entries, a, wa);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kZeroProduct) {
      for (std::size_t i = 0; i < entries.size(); ++i) {
        try {
          (void)build_sequence({entries[i]}, a, wa);
        } catch (const Error& single) {
          if (single.code() == e.code()) {
            throw Error(e.code(), "at /sequence/" + std::to_string(i) + ": " + e.detail());
          }
        }
      }
    }
    throw Error(e.code(), "at /sequence: " + e.detail());
  }
}

}  // namespace

RefinementRequest ProblemDocument::refinements() const {
  RefinementRequest r;
  if (refine_hdim) r.hdim = hdim;
  r.independent_min_weight = refine_indep;
  return r;
}

ProblemDocument parse_document(const json& doc) {
  if (!doc.is_object()) fail_at("/", "expected a JSON object");
  only_keys(doc, "", {"prime", "generators", "degree_cap", "weights", "sequence", "hdim", "refinements"});

  const json* prime = field(doc, "prime");
  if (!prime) fail_at("/prime", "missing");
  const int p = integer(*prime, "/prime");
  const json* gens_json = field(doc, "generators");
  if (!gens_json) fail_at("/generators", "missing");
  std::vector<Generator> gens = parse_generators(*gens_json);
  std::optional<int> cap;
  if (const json* c = field(doc, "degree_cap")) cap = integer(*c, "/degree_cap");
  MonomialAlgebra algebra = located("/generators", [&] { return make_algebra(p, std::move(gens), cap); });

  std::map<std::string, WeightSpec> specs;
  if (const json* w = field(doc, "weights")) specs = parse_weights(*w);
  WeightAssignment weights = located("/weights", [&] { return make_weights(algebra, specs); });

  ProblemDocument out{algebra, weights, std::nullopt, std::nullopt, false, false};
  if (const json* s = field(doc, "sequence")) {
    out.sequence = locate_sequence(parse_sequence(*s), algebra, weights);
  }
  if (const json* h = field(doc, "hdim")) out.hdim = integer(*h, "/hdim");
  if (const json* r = field(doc, "refinements")) {
    if (!r->is_object()) fail_at("/refinements", "expected an object");
    only_keys(*r, "/refinements", {"hdim", "indep"});
    if (const json* h = field(*r, "hdim")) out.refine_hdim = boolean(*h, "/refinements/hdim");
    if (const json* i = field(*r, "indep")) out.refine_indep = boolean(*i, "/refinements/indep");
  }
  if (out.refine_hdim && !out.hdim) fail_at("/hdim", "required when refinements.hdim is true");
  return out;
}

ProblemDocument parse_document_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, std::string("invalid JSON: ") + e.what());
  }
  return parse_document(doc);
}

ProblemDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kBadDocument, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document_text(buf.str());
}

}  // namespace ctbound
