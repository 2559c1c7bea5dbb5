// SPDX-License-Identifier: Apache-2.0

#include "ctbound/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "ctbound/catalog.hpp"
#include "ctbound/document.hpp"
#include "ctbound/error.hpp"
#include "ctbound/oracle.hpp"
#include "ctbound/report.hpp"
#include "ctbound/search.hpp"

namespace ctbound {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string format = "table";
  bool oracle = false;
  std::string file;
  std::vector<std::string> refine;
  std::optional<int> max_degree;
  std::optional<int> max_factors;
  std::string entry;
  std::vector<std::string> params;
  bool all = false;
};

bool json_output(const Options& o) { return o.format == "json"; }

void check_oracle(const WeightedSequence& s, const WctReport& base) {
  if (s.copy_count() > oracle::kMaxCopies) {
    throw Error(ErrorCode::kBadParam, "--oracle supports at most " + std::to_string(oracle::kMaxCopies) +
                                          " factor copies, got " + std::to_string(s.copy_count()));
  }
  const std::vector<int> expected = oracle::brute_force_dmax(s);
  if (expected.size() != base.dmax_table.size()) {
    throw Error(ErrorCode::kOracleMismatch, "table length differs from brute force");
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (expected[i] != base.dmax_table[i].dimension) {
      throw Error(ErrorCode::kOracleMismatch,
                  "k=" + std::to_string(i + 1) + ": knapsack " +
                      std::to_string(base.dmax_table[i].dimension) + ", brute force " +
                      std::to_string(expected[i]));
    }
  }
}

std::string render_witness(const WeightedSequence& s) {
  std::ostringstream out;
  out << '(';
  bool first = true;
  for (const Factor& f : s.factors()) {
    out << (first ? "" : ", ") << f.monomial.to_string();
    if (f.copies > 1) out << "×" << f.copies;
    first = false;
  }
  out << ')';
  return out.str();
}

ordered_json witness_json(const WeightedSequence& s) {
  ordered_json list = ordered_json::array();
  for (const Factor& f : s.factors()) {
    list.push_back({{"factor", f.monomial.to_string()}, {"copies", f.copies}, {"weight", f.weight}});
  }
  return list;
}

int cmd_wct(const Options& o, std::ostream& out) {
  const ProblemDocument doc = load_document(o.file);
  if (!doc.sequence) throw Error(ErrorCode::kBadDocument, "at /sequence: missing");
  RefinementRequest request = doc.refinements();
  for (const std::string& r : o.refine) {
    if (r == "hdim") {
      if (!doc.hdim) throw Error(ErrorCode::kBadDocument, "at /hdim: required by --refine hdim");
      request.hdim = doc.hdim;
    } else {
      request.independent_min_weight = true;
    }
  }
  const WctReport base = wct(*doc.sequence);
  if (o.oracle) check_oracle(*doc.sequence, base);
  const WctReport report = apply_refinements(base, *doc.sequence, request);
  if (json_output(o)) {
    out << report_to_json(report).dump(2) << '\n';
  } else {
    out << render_report(report);
  }
  return kExitOk;
}

int cmd_swct(const Options& o, std::ostream& out) {
  const ProblemDocument doc = load_document(o.file);
  SearchBudget budget;
  budget.max_total_degree = o.max_degree;
  budget.max_factors = o.max_factors;
  const SearchResult found = swct_lower(doc.algebra, doc.weights, budget);
  const WctReport report = wct(found.witness);
  if (o.oracle) check_oracle(found.witness, report);
  if (json_output(o)) {
    ordered_json j;
    j["value"] = found.value;
    j["witness"] = witness_json(found.witness);
    j["classes_examined"] = found.classes_examined;
    j["report"] = report_to_json(report);
    out << j.dump(2) << '\n';
  } else {
    out << "swct ≥ " << found.value << '\n';
    out << "witness: " << render_witness(found.witness) << '\n';
    out << "classes examined: " << found.classes_examined << '\n';
    out << '\n' << render_report(report);
  }
  return kExitOk;
}

std::map<std::string, std::string> parse_params(const std::vector<std::string>& raw) {
  std::map<std::string, std::string> params;
  for (const std::string& item : raw) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorCode::kBadParam, "expected key=value, got '" + item + "'");
    }
    const std::string key = item.substr(0, eq);
    if (!params.emplace(key, item.substr(eq + 1)).second) {
      throw Error(ErrorCode::kBadParam, "parameter '" + key + "' given twice");
    }
  }
  return params;
}

std::string pad_status(EntryStatus s) {
  std::string name(entry_status_name(s));
  name.resize(9, ' ');
  return name;
}

std::string params_text(const CatalogEntry& e) {
  std::string s;
  for (const auto& [k, v] : e.params) s += " " + k + "=" + v;
  return s;
}

ordered_json entry_json(const CatalogEntry& e, const EntryResult& r) {
  ordered_json j;
  j["name"] = e.name;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : e.params) params[k] = v;
  j["params"] = std::move(params);
  j["computed"] = r.computed;
  j["expected"] = e.expected ? ordered_json(*e.expected) : ordered_json(nullptr);
  j["expected_source"] = e.expected_source;
  ordered_json refs = ordered_json::array();
  for (const ReferenceValue& ref : e.references) refs.push_back({{"label", ref.label}, {"value", ref.value}});
  j["references"] = std::move(refs);
  j["status"] = std::string(entry_status_name(r.status));
  j["discrepancy_note"] = e.discrepancy_note ? ordered_json(*e.discrepancy_note) : ordered_json(nullptr);
  j["convention_note"] = e.convention_note ? ordered_json(*e.convention_note) : ordered_json(nullptr);
  j["cat_bound"] = r.cat_bound ? ordered_json(*r.cat_bound) : ordered_json(nullptr);
  j["classes_examined"] = r.classes_examined ? ordered_json(*r.classes_examined) : ordered_json(nullptr);
  j["report"] = report_to_json(r.report);
  return j;
}

void render_entry(const CatalogEntry& e, const EntryResult& r, std::ostream& out) {
  out << "entry: " << e.name << params_text(e) << '\n';
  out << "computed: " << r.computed << '\n';
  out << "expected: " << (e.expected ? std::to_string(*e.expected) : "none");
  if (!e.expected_source.empty()) out << "  [" << e.expected_source << ']';
  out << '\n';
  for (const ReferenceValue& ref : e.references) out << "reference: " << ref.value << "  [" << ref.label << "]\n";
  if (r.cat_bound) out << "category bound: " << *r.cat_bound << '\n';
  if (r.classes_examined) out << "classes examined: " << *r.classes_examined << '\n';
  out << "status: " << entry_status_name(r.status) << '\n';
  if (e.discrepancy_note) out << "discrepancy: " << *e.discrepancy_note << '\n';
  if (e.convention_note) out << "convention: " << *e.convention_note << '\n';
  out << '\n' << render_report(r.report);
}

int cmd_catalog(const Options& o, std::ostream& out) {
  if (o.all) {
    if (!o.entry.empty() || !o.params.empty()) {
      throw Error(ErrorCode::kBadParam, "--all takes no entry name or parameters");
    }
    int failures = 0;
    ordered_json list = ordered_json::array();
    for (const CatalogEntry& e : full_catalog()) {
      const EntryResult r = evaluate(e);
      if (o.oracle && e.sequence.copy_count() <= oracle::kMaxCopies) check_oracle(e.sequence, wct(e.sequence));
      if (r.status == EntryStatus::kFail) ++failures;
      if (json_output(o)) {
        list.push_back(entry_json(e, r));
      } else {
        out << pad_status(r.status) << e.name << params_text(e) << "  computed=" << r.computed
            << " expected=" << (e.expected ? std::to_string(*e.expected) : "none") << '\n';
      }
    }
    if (json_output(o)) {
      out << list.dump(2) << '\n';
    } else {
      out << failures << " failing entries\n";
    }
    return failures == 0 ? kExitOk : kExitInternal;
  }
  if (o.entry.empty()) throw Error(ErrorCode::kBadParam, "catalog needs an entry name or --all");
  const CatalogEntry e = make_entry(o.entry, parse_params(o.params));
  if (o.oracle) check_oracle(e.sequence, wct(e.sequence));
  const EntryResult r = evaluate(e);
  if (json_output(o)) {
    out << entry_json(e, r).dump(2) << '\n';
  } else {
    render_entry(e, r, out);
  }
  return r.status == EntryStatus::kFail ? kExitInternal : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Lower bounds for covering type and triangulation size from cohomology"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  app.add_flag("--oracle", o.oracle, "Cross-check the table by exhaustive subset enumeration");
  app.fallthrough();

  CLI::App* wct_cmd = app.add_subcommand("wct", "Evaluate the estimate for a problem document");
  wct_cmd->add_option("file", o.file, "Problem document (JSON)")->required();
  wct_cmd->add_option("--refine", o.refine, "Refinements to apply")
      ->delimiter(',')
      ->check(CLI::IsMember({"hdim", "indep"}));

  CLI::App* swct_cmd = app.add_subcommand("swct", "Search all factor sequences of a presentation");
  swct_cmd->add_option("file", o.file, "Problem document (JSON)")->required();
  swct_cmd->add_option("--max-degree", o.max_degree, "Largest product degree searched")
      ->check(CLI::NonNegativeNumber);
  swct_cmd->add_option("--max-factors", o.max_factors, "Largest number of factor copies")
      ->check(CLI::PositiveNumber);

  CLI::App* cat_cmd = app.add_subcommand("catalog", "Evaluate a catalog entry");
  cat_cmd->add_option("name", o.entry, "Entry name");
  cat_cmd->add_option("params", o.params, "Parameters as key=value");
  cat_cmd->add_flag("--all", o.all, "Run the whole catalog grid");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (wct_cmd->parsed()) return cmd_wct(o, out);
    if (swct_cmd->parsed()) return cmd_swct(o, out);
    return cmd_catalog(o, out);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.code() == ErrorCode::kOracleMismatch ? kExitInternal : kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace ctbound
