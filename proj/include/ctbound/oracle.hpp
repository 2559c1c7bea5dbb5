// SPDX-License-Identifier: Apache-2.0

// Exhaustive reference for the per-k maximal subproduct dimensions. Shares no
// code with the knapsack in estimate.cpp.

#pragma once

#include <vector>

#include "ctbound/weights.hpp"

namespace ctbound::oracle {

inline constexpr int kMaxCopies = 24;

/// dmax[k-1] for k = 1..w(s), by enumerating all 2^n subsets of factor copies.
/// Throws BAD_PARAM when the sequence has more than kMaxCopies copies.
std::vector<int> brute_force_dmax(const WeightedSequence& s);

/// 1 + W + the sum of brute_force_dmax.
long long brute_force_wct(const WeightedSequence& s);

}  // namespace ctbound::oracle
