// SPDX-License-Identifier: Apache-2.0

// Ready-made spaces: each entry pairs a cohomology presentation and a
// distinguished factor sequence with the value its closed form predicts.
// Published values that disagree with a direct evaluation are kept next to
// the computed value and flagged rather than corrected.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctbound/estimate.hpp"
#include "ctbound/search.hpp"

namespace ctbound {

struct ReferenceValue {
  std::string label;
  long long value = 0;
};

struct CatalogEntry {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  MonomialAlgebra algebra;
  WeightAssignment weights;
  WeightedSequence sequence;
  RefinementRequest refinements;
  /// LS category; when set the bound is also at least cat(cat+1)/2.
  std::optional<int> category;
  /// When set the value comes from swct_lower and `sequence` is its witness.
  std::optional<SearchBudget> search;
  std::optional<long long> expected;
  std::string expected_source;
  /// Printed values kept for comparison, e.g. a closed form with a typo.
  std::vector<ReferenceValue> references;
  std::optional<std::string> discrepancy_note;
  std::optional<std::string> convention_note;
};

enum class EntryStatus { kPass, kFlagged, kFail };

std::string_view entry_status_name(EntryStatus s);

struct EntryResult {
  WctReport report;  // after refinements
  long long computed = 0;
  std::optional<long long> cat_bound;
  std::optional<std::int64_t> classes_examined;
  EntryStatus status = EntryStatus::kFail;
};

/// FLAGGED when the entry carries a discrepancy note, otherwise PASS iff the
/// computed value equals `expected`.
EntryResult evaluate(const CatalogEntry& entry);

// Constructors. Parameter violations throw BAD_PARAM.

/// Z_p[x,y]/(x^2, y^{n+1}), w(y) = 2, sequence (x, y^n).
CatalogEntry lens(int n, int p);
/// L^{2n+1}(p) x S^m with the independent-minimal-weight refinement.
CatalogEntry lens_times_sphere(int n, int m, int p);
/// Orbit space of a free Z_d action on a connected sum of copies of
/// S^{2n+1} x S^{2n+1}; cohomologically reduces to lens_times_sphere(n, 2n+1).
CatalogEntry highly_connected(int n);
/// Skeleton B Z_m^{(n)} searched exhaustively.
CatalogEntry bg_cyclic_skeleton(int n, int m, int p);
/// Orbit space of a free Z_m action (m > 2) on an n-acyclic space.
CatalogEntry acyclic_quotient(int n, int m, int p);
CatalogEntry sp2(bool weighted, bool independent);
/// x^2 y z with |x|=2, |y|=3, |z|=5 and weights (2, 2, 3).
CatalogEntry abstract_product();
CatalogEntry two_spheres_quotient(int m, int n, int p, bool transgression_trivial);
/// `omitted` is 1-based.
CatalogEntry product_of_spheres_quotient(const std::vector<int>& dims, int omitted, int p);
/// Orbit space of V_k(C^n); exterior generators in degrees 2(n-k)+1 .. 2n-1.
CatalogEntry stiefel(int k, int n, int omitted, int p);
CatalogEntry su_quotient(int n, int p, int r);
CatalogEntry lie_quotient(const std::vector<int>& dims, int omitted, int p);
/// Minimum of lie_quotient over every omitted generator, ignoring the
/// power-of-p constraint on the truncation.
CatalogEntry lie_quotient_min(const std::vector<int>& dims, int p);
CatalogEntry symplectic_product(int m, int n);
CatalogEntry symplectically_aspherical(int m);
CatalogEntry dold(int r, int s);

/// n/6 (4n^2 + 3n(4k-5) + 5) - 3(k-1)^2.
long long su_closed_form(long long n, long long k);
/// Prime powers k | n admissible for su_quotient (odd p, or p = 2 with r >= 2).
std::vector<int> su_admissible_divisors(int n);
/// True iff su_closed_form(n, k) is non-decreasing over admissible k.
bool su_monotonicity_check(int n);

/// Named constructor dispatch for the CLI; params are "k=v" strings.
CatalogEntry make_entry(const std::string& name,
                        const std::map<std::string, std::string>& params);
std::vector<std::string> entry_names();

/// The full grid used by the acceptance suite and `catalog --all`.
std::vector<CatalogEntry> full_catalog();

}  // namespace ctbound
