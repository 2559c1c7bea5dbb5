// SPDX-License-Identifier: Apache-2.0

// Seeded generators of random presentations and factor sequences shared by
// the property tests and the acceptance runner.

#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "ctbound/algebra.hpp"
#include "ctbound/weights.hpp"

namespace ctbound::testing {

struct Limits {
  int max_copies = 18;
  int max_weight = 5;
  int max_dim = 9;
};

inline int uniform(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline MonomialAlgebra random_algebra(std::mt19937& rng, int max_degree = 9) {
  static constexpr int kPrimes[] = {2, 3, 5};
  const int p = kPrimes[uniform(rng, 0, 2)];
  const int n = uniform(rng, 1, 4);
  std::vector<Generator> gens;
  for (int i = 0; i < n; ++i) {
    Generator g{std::string(1, static_cast<char>('a' + i)), uniform(rng, 1, max_degree), 2};
    const bool odd_exterior = p != 2 && g.degree % 2 == 1;
    if (!odd_exterior) {
      const int roll = uniform(rng, 0, 5);
      g.nilpotency = roll == 0 ? std::nullopt : std::optional<int>(uniform(rng, 2, 6));
    }
    gens.push_back(std::move(g));
  }
  return make_algebra(p, std::move(gens));
}

/// A random nonzero non-unit monomial of degree <= max_degree, if one exists
/// within a few tries.
inline std::optional<Monomial> random_monomial(std::mt19937& rng, const MonomialAlgebra& a,
                                               int max_degree) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<int> e(a.size(), 0);
    int degree = 0;
    const int parts = uniform(rng, 1, 3);
    for (int j = 0; j < parts; ++j) {
      const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(a.size()) - 1));
      if (degree + a.generator(i).degree > max_degree) continue;
      ++e[i];
      degree += a.generator(i).degree;
    }
    if (degree == 0 || !a.is_nonzero(e)) continue;
    return a.monomial(e);
  }
  return std::nullopt;
}

/// Random factors whose running product stays nonzero; weights in
/// [1, min(max_weight, degree)].
inline std::vector<Factor> random_factors(std::mt19937& rng, const MonomialAlgebra& a,
                                          const Limits& limits) {
  std::vector<Factor> factors;
  Monomial product = a.unit();
  int copies = 0;
  const int target = uniform(rng, 0, limits.max_copies);
  for (int attempt = 0; attempt < 4 * target + 4 && copies < target; ++attempt) {
    const std::optional<Monomial> m = random_monomial(rng, a, limits.max_dim);
    if (!m) break;
    const int c = std::min(uniform(rng, 1, 3), target - copies);
    std::optional<Monomial> next = product;
    for (int j = 0; j < c && next; ++j) next = mono_mul(*next, *m);
    if (!next) continue;
    product = *next;
    copies += c;
    factors.push_back(Factor{*m, uniform(rng, 1, std::min(limits.max_weight, m->degree())), c});
  }
  return factors;
}

inline WeightedSequence random_sequence(std::mt19937& rng, const Limits& limits = {}) {
  const MonomialAlgebra a = random_algebra(rng, limits.max_dim);
  return make_sequence(a, random_factors(rng, a, limits), uniform(rng, 0, 1) == 1);
}

inline WeightedSequence with_factors(const WeightedSequence& s, std::vector<Factor> factors) {
  return make_sequence(s.algebra(), std::move(factors), s.strict());
}

/// Every factor copy as its own entry, keeping weights.
inline std::vector<Factor> expanded(const WeightedSequence& s) {
  std::vector<Factor> out;
  for (const Factor& f : s.factors()) {
    for (int c = 0; c < f.copies; ++c) out.push_back(Factor{f.monomial, f.weight, 1});
  }
  return out;
}

}  // namespace ctbound::testing
