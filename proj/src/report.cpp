// SPDX-License-Identifier: Apache-2.0

#include "ctbound/report.hpp"

#include <algorithm>
#include <sstream>

#include "ctbound/error.hpp"

namespace ctbound {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kBadDocument, "malformed report: " + what);
}

const ordered_json& member(const ordered_json& obj, const char* key) {
  if (!obj.is_object()) malformed("expected an object around '" + std::string(key) + "'");
  const auto it = obj.find(key);
  if (it == obj.end()) malformed(std::string("missing '") + key + "'");
  return *it;
}

int as_int(const ordered_json& v, const char* key) {
  if (!v.is_number_integer()) malformed(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

const std::string& as_string(const ordered_json& v, const char* key) {
  if (!v.is_string()) malformed(std::string("'") + key + "' must be a string");
  return v.get_ref<const std::string&>();
}

std::string pad(const std::string& s, std::size_t width, bool right) {
  if (s.size() >= width) return s;
  const std::string fill(width - s.size(), ' ');
  return right ? fill + s : s + fill;
}

}  // namespace

ordered_json report_to_json(const WctReport& r) {
  ordered_json table = ordered_json::array();
  for (const TableRow& row : r.dmax_table) {
    ordered_json witness = ordered_json::array();
    for (const WitnessPart& part : row.witness) {
      witness.push_back({{"factor", part.factor}, {"copies", part.copies}});
    }
    table.push_back({{"k", row.k},
                     {"dimension", row.dimension},
                     {"witness", std::move(witness)},
                     {"subproduct", row.subproduct}});
  }
  ordered_json refinements = ordered_json::array();
  for (const Refinement& ref : r.refinements_applied) {
    refinements.push_back({{"name", std::string(refinement_name(ref.kind))},
                           {"delta", ref.delta},
                           {"rationale", ref.rationale}});
  }
  ordered_json out;
  out["total_weight"] = r.total_weight;
  out["dmax_table"] = std::move(table);
  out["base_value"] = r.base_value;
  out["refinements_applied"] = std::move(refinements);
  out["final_value"] = r.final_value;
  out["bound_target"] = std::string(bound_target_name(r.bound_target));
  out["delta_applies"] = r.delta_applies;
  return out;
}

WctReport report_from_json(const ordered_json& j) {
  WctReport r;
  r.total_weight = as_int(member(j, "total_weight"), "total_weight");
  const ordered_json& table = member(j, "dmax_table");
  if (!table.is_array()) malformed("'dmax_table' must be an array");
  for (const ordered_json& row_json : table) {
    TableRow row;
    row.k = as_int(member(row_json, "k"), "k");
    row.dimension = as_int(member(row_json, "dimension"), "dimension");
    const ordered_json& witness = member(row_json, "witness");
    if (!witness.is_array()) malformed("'witness' must be an array");
    for (const ordered_json& part : witness) {
      row.witness.push_back({as_string(member(part, "factor"), "factor"),
                             as_int(member(part, "copies"), "copies")});
    }
    row.subproduct = as_string(member(row_json, "subproduct"), "subproduct");
    r.dmax_table.push_back(std::move(row));
  }
  r.base_value = as_int(member(j, "base_value"), "base_value");
  const ordered_json& refinements = member(j, "refinements_applied");
  if (!refinements.is_array()) malformed("'refinements_applied' must be an array");
  for (const ordered_json& ref_json : refinements) {
    Refinement ref;
    const std::string& name = as_string(member(ref_json, "name"), "name");
    if (name == refinement_name(RefinementKind::kHdim)) {
      ref.kind = RefinementKind::kHdim;
    } else if (name == refinement_name(RefinementKind::kIndependentMinWeight)) {
      ref.kind = RefinementKind::kIndependentMinWeight;
    } else {
      malformed("unknown refinement '" + name + "'");
    }
    ref.delta = as_int(member(ref_json, "delta"), "delta");
    ref.rationale = as_string(member(ref_json, "rationale"), "rationale");
    r.refinements_applied.push_back(std::move(ref));
  }
  r.final_value = as_int(member(j, "final_value"), "final_value");
  const std::string& target = as_string(member(j, "bound_target"), "bound_target");
  if (target == "SCT") {
    r.bound_target = BoundTarget::kSct;
  } else if (target == "CT") {
    r.bound_target = BoundTarget::kCt;
  } else {
    malformed("unknown bound_target '" + target + "'");
  }
  const ordered_json& delta = member(j, "delta_applies");
  if (!delta.is_boolean()) malformed("'delta_applies' must be a boolean");
  r.delta_applies = delta.get<bool>();
  return r;
}

std::string render_table(const WctReport& r) {
  const std::string hk = "k";
  const std::string hs = "subproduct";
  const std::string hd = "dimension";
  std::size_t wk = hk.size();
  std::size_t ws = hs.size();
  std::size_t wd = hd.size();
  for (const TableRow& row : r.dmax_table) {
    wk = std::max(wk, std::to_string(row.k).size());
    ws = std::max(ws, row.subproduct.size());
    wd = std::max(wd, std::to_string(row.dimension).size());
  }
  std::ostringstream out;
  out << pad(hk, wk, true) << " | " << pad(hs, ws, false) << " | " << hd << '\n';
  out << std::string(wk, '-') << "-+-" << std::string(ws, '-') << "-+-" << std::string(wd, '-') << '\n';
  for (const TableRow& row : r.dmax_table) {
    out << pad(std::to_string(row.k), wk, true) << " | " << pad(row.subproduct, ws, false) << " | "
        << pad(std::to_string(row.dimension), wd, true) << '\n';
  }
  return out.str();
}

std::string render_report(const WctReport& r) {
  std::ostringstream out;
  out << (r.bound_target == BoundTarget::kCt ? "ct" : "sct") << " ≥ " << r.final_value << '\n';
  if (r.delta_applies) out << "Δ ≥ " << r.final_value << '\n';
  out << '\n' << render_table(r) << '\n';
  long long sum = 0;
  for (const TableRow& row : r.dmax_table) sum += row.dimension;
  out << "base value: 1 + " << r.total_weight << " + " << sum << " = " << r.base_value << '\n';
  if (r.refinements_applied.empty()) {
    out << "refinements: none\n";
  } else {
    out << "refinements:\n";
    for (const Refinement& ref : r.refinements_applied) {
      out << "  " << refinement_name(ref.kind) << " +" << ref.delta << " (" << ref.rationale << ")\n";
    }
  }
  return out.str();
}

}  // namespace ctbound
