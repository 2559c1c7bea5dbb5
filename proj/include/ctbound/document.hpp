// SPDX-License-Identifier: Apache-2.0

// JSON problem documents: one object holding the ring presentation, weights,
// a factor sequence and optional refinements. Failures carry the JSON
// pointer of the offending field in the error detail.

#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "ctbound/estimate.hpp"

namespace ctbound {

struct ProblemDocument {
  MonomialAlgebra algebra;
  WeightAssignment weights;
  /// Absent documents are accepted by `swct`, which builds its own sequences.
  std::optional<WeightedSequence> sequence;
  std::optional<int> hdim;
  bool refine_hdim = false;
  bool refine_indep = false;

  RefinementRequest refinements() const;
};

ProblemDocument parse_document(const nlohmann::json& doc);
/// Parses text first; malformed JSON is PARSE_ERROR.
ProblemDocument parse_document_text(const std::string& text);
/// Reads the file; unreadable paths are BAD_DOCUMENT.
ProblemDocument load_document(const std::string& path);

}  // namespace ctbound
