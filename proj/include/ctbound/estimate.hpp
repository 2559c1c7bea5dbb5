// SPDX-License-Identifier: Apache-2.0

// The weighted covering-type estimate of a factor sequence s with weights w:
//
//   wct(s; w) = 1 + w(s) + sum_{k=1..w(s)} max{ |s'| : s' <= s, w(s') <= k }
//
// where s' ranges over sub-multisets of factors and the empty sub-multiset
// has dimension -1. Every sub-multiset of a nonzero product is nonzero, so
// the inner maximum is a plain 0/1 knapsack over factor copies.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctbound/weights.hpp"

namespace ctbound {

enum class BoundTarget { kSct, kCt };

std::string_view bound_target_name(BoundTarget t);  // "SCT" / "CT"

enum class RefinementKind { kHdim, kIndependentMinWeight };

std::string_view refinement_name(RefinementKind k);  // "HDIM" / "INDEPENDENT_MIN_WEIGHT"

struct WitnessPart {
  std::string factor;
  int copies = 0;
  friend bool operator==(const WitnessPart&, const WitnessPart&) = default;
};

struct TableRow {
  int k = 0;
  int dimension = -1;
  std::vector<WitnessPart> witness;  // empty when dimension == -1
  std::string subproduct;            // rendered product of the witness, "-" if empty
  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct Refinement {
  RefinementKind kind = RefinementKind::kHdim;
  int delta = 0;
  std::string rationale;
  friend bool operator==(const Refinement&, const Refinement&) = default;
};

struct WctReport {
  int total_weight = 0;
  std::vector<TableRow> dmax_table;  // rows for k = 1..total_weight
  int base_value = 1;
  std::vector<Refinement> refinements_applied;
  int final_value = 1;
  BoundTarget bound_target = BoundTarget::kSct;
  bool delta_applies = true;

  /// |s^|, the dimension of the full product (-1 for the empty sequence).
  int top_dimension() const { return dmax_table.empty() ? -1 : dmax_table.back().dimension; }
  friend bool operator==(const WctReport&, const WctReport&) = default;
};

struct Subproduct {
  int dimension = -1;
  /// Copies taken from each factor entry, indexed like s.factors().
  std::vector<int> multiplicities;
};

/// Max dimension of a sub-multiset of weight <= k. Ties go to the
/// lexicographically smallest list of chosen factor copies in declaration order.
Subproduct max_dim_subproduct(const WeightedSequence& s, int k);

WctReport wct(const WeightedSequence& s);

/// n + 1 + sum_k k * |u_k| over unit copies sorted by non-decreasing dimension.
int nonweighted_ct(const WeightedSequence& s);

/// cat * (cat + 1) / 2 for an unnormalized LS category.
long long cat_lower_bound(int cat);

struct RefinementRequest {
  std::optional<int> hdim;
  bool independent_min_weight = false;
};

/// Adds hdim - |s^| when hdim is given (HDIM_BELOW_TOP_CLASS if smaller), and
/// +1 when two distinct factor monomials share the minimal weight
/// (INDEPENDENCE_NOT_WITNESSED otherwise). `s` must be the sequence of `r`.
WctReport apply_refinements(const WctReport& r, const WeightedSequence& s,
                            const RefinementRequest& request);

}  // namespace ctbound
