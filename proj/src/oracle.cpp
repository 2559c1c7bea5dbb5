// SPDX-License-Identifier: Apache-2.0

#include "ctbound/oracle.hpp"

#include <algorithm>
#include <cstdint>

#include "ctbound/error.hpp"

namespace ctbound::oracle {

std::vector<int> brute_force_dmax(const WeightedSequence& s) {
  std::vector<int> weights;
  std::vector<int> dims;
  for (const auto& f : s.factors()) {
    for (int c = 0; c < f.copies; ++c) {
      weights.push_back(f.weight);
      dims.push_back(f.monomial.degree());
    }
  }
  const int n = static_cast<int>(weights.size());
  if (n > kMaxCopies) {
    throw Error(ErrorCode::kBadParam, "oracle limited to " + std::to_string(kMaxCopies) + " copies");
  }
  int total = 0;
  for (int w : weights) total += w;

  // best_at[w] = largest dimension of a nonempty subset of weight exactly w.
  std::vector<int> best_at(static_cast<std::size_t>(total) + 1, -1);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    int w = 0;
    int d = 0;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1U) {
        w += weights[i];
        d += dims[i];
      }
    }
    best_at[w] = std::max(best_at[w], d);
  }
  std::vector<int> dmax;
  int running = -1;
  for (int k = 1; k <= total; ++k) {
    running = std::max(running, best_at[k]);
    dmax.push_back(running);
  }
  return dmax;
}

long long brute_force_wct(const WeightedSequence& s) {
  const auto dmax = brute_force_dmax(s);
  long long v = 1 + static_cast<long long>(dmax.size());
  for (int d : dmax) v += d;
  return v;
}

}  // namespace ctbound::oracle
