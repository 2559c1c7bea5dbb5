// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ctbound/estimate.hpp"

namespace ctbound {

struct SearchBudget {
  /// Cap on |s^|; defaults to the top nonzero degree of the algebra.
  std::optional<int> max_total_degree;
  /// Cap on the number of factor copies; defaults to the largest total
  /// weight of a candidate monomial.
  std::optional<int> max_factors;
  /// Permutation-equivalent sequences are always visited once; kept for the
  /// record in reports.
  bool dedup_equivalent = true;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Nonzero non-unit monomials of degree <= max_degree, graded then
/// lexicographic by exponent vector.
std::vector<Monomial> enumerate_nonzero_monomials(const MonomialAlgebra& a, int max_degree);

using FactorizationVisitor = std::function<void(std::span<const Monomial>)>;

/// Visits every multiset of non-unit monomials with product m exactly once,
/// parts in non-increasing graded order. Factorizations with more than
/// max_parts parts are skipped.
void for_each_factorization(const Monomial& m, const FactorizationVisitor& visit,
                            std::optional<int> max_parts = std::nullopt);

std::vector<std::vector<Monomial>> factorizations(const Monomial& m);

struct SearchResult {
  int value = 0;
  WeightedSequence witness;
  std::int64_t classes_examined = 0;
};

/// Maximum of wct over all factorizations of nonzero monomials within the
/// budget, factors weighted by default_factor_weight. Requires a strict
/// assignment (NOT_STRICT); EMPTY_SEARCH_SPACE when nothing qualifies.
/// Ties go to the smaller canonical witness, independent of thread count;
/// the witness lists factors in non-decreasing graded order.
SearchResult swct_lower(const MonomialAlgebra& a, const WeightAssignment& wa,
                        const SearchBudget& budget = {});

/// Groups consecutive equal parts into factors with default weights.
WeightedSequence sequence_from_parts(std::span<const Monomial> parts, const WeightAssignment& wa);

}  // namespace ctbound
