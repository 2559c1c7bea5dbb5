// SPDX-License-Identifier: Apache-2.0

// Text and JSON renderings of estimate reports.

#pragma once

#include <string>

#include <json.hpp>

#include "ctbound/estimate.hpp"

namespace ctbound {

/// Fields in WctReport declaration order; refinements use "name" for the kind.
nlohmann::ordered_json report_to_json(const WctReport& r);
/// Inverse of report_to_json; malformed input is BAD_DOCUMENT.
WctReport report_from_json(const nlohmann::ordered_json& j);

/// The k | subproduct | dimension table.
std::string render_table(const WctReport& r);
/// Bound lines ("sct ≥ N" or "ct ≥ N", then "Δ ≥ N"), the table and the
/// applied refinements.
std::string render_report(const WctReport& r);

}  // namespace ctbound
