// SPDX-License-Identifier: Apache-2.0

#include "ctbound/search.hpp"

#include <algorithm>
#include <thread>

#include "ctbound/error.hpp"

namespace ctbound {

std::vector<Monomial> enumerate_nonzero_monomials(const MonomialAlgebra& a, int max_degree) {
  if (max_degree < 1) throw Error(ErrorCode::kBadBudget, "max_degree must be >= 1");
  if (a.degree_cap()) max_degree = std::min(max_degree, *a.degree_cap());
  const std::size_t n = a.size();
  std::vector<Monomial> out;
  std::vector<int> exps(n, 0);

  // Depth-first over generators with the running degree bounded.
  std::function<void(std::size_t, int)> walk = [&](std::size_t i, int degree) {
    if (i == n) {
      if (degree > 0) out.push_back(a.monomial(exps));
      return;
    }
    const Generator& g = a.generator(i);
    for (int e = 0; degree + e * g.degree <= max_degree; ++e) {
      if (g.nilpotency && e >= *g.nilpotency) break;
      exps[i] = e;
      walk(i + 1, degree + e * g.degree);
    }
    exps[i] = 0;
  };
  walk(0, 0);
  std::sort(out.begin(), out.end(),
            [](const Monomial& x, const Monomial& y) { return graded_compare(x, y) < 0; });
  return out;
}

namespace {

class FactorizationWalker {
 public:
  FactorizationWalker(const Monomial& m, const FactorizationVisitor& visit,
                      std::optional<int> max_parts)
      : algebra_(m.algebra()), visit_(visit), max_parts_(max_parts) {
    std::vector<int> rest(m.exponents().begin(), m.exponents().end());
    if (std::all_of(rest.begin(), rest.end(), [](int e) { return e == 0; })) return;
    descend(rest, std::nullopt);
  }

 private:
  // Emits the parts of `rest` that are <= `bound` in graded order, recursing
  // on the remainder so parts come out non-increasing.
  void descend(std::vector<int>& rest, const std::optional<Monomial>& bound) {
    if (std::all_of(rest.begin(), rest.end(), [](int e) { return e == 0; })) {
      visit_(parts_);
      return;
    }
    if (max_parts_ && static_cast<int>(parts_.size()) >= *max_parts_) return;

    std::vector<int> part(rest.size(), 0);
    // Odometer over all nonzero sub-vectors of rest.
    while (true) {
      std::size_t i = 0;
      while (i < part.size() && part[i] == rest[i]) part[i++] = 0;
      if (i == part.size()) break;
      ++part[i];
      Monomial candidate = algebra_.monomial(part);
      if (bound && graded_compare(candidate, *bound) > 0) continue;
      for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= part[j];
      parts_.push_back(candidate);
      descend(rest, candidate);
      parts_.pop_back();
      for (std::size_t j = 0; j < rest.size(); ++j) rest[j] += part[j];
    }
  }

  MonomialAlgebra algebra_;
  const FactorizationVisitor& visit_;
  std::optional<int> max_parts_;
  std::vector<Monomial> parts_;
};

// Lexicographic comparison of canonical part lists.
bool canonical_less(std::span<const Monomial> a, std::span<const Monomial> b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = graded_compare(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

struct Best {
  int value = -1;
  std::vector<Monomial> parts;
  std::int64_t examined = 0;

  void offer(int v, std::span<const Monomial> candidate) {
    if (v > value || (v == value && canonical_less(candidate, parts))) {
      value = v;
      parts.assign(candidate.begin(), candidate.end());
    }
  }
};

}  // namespace

void for_each_factorization(const Monomial& m, const FactorizationVisitor& visit,
                            std::optional<int> max_parts) {
  FactorizationWalker walker(m, visit, max_parts);
}

std::vector<std::vector<Monomial>> factorizations(const Monomial& m) {
  std::vector<std::vector<Monomial>> out;
  for_each_factorization(m, [&](std::span<const Monomial> parts) {
    out.emplace_back(parts.begin(), parts.end());
  });
  return out;
}

WeightedSequence sequence_from_parts(std::span<const Monomial> parts, const WeightAssignment& wa) {
  std::vector<Factor> factors;
  for (const Monomial& p : parts) {
    if (!factors.empty() && factors.back().monomial == p) {
      ++factors.back().copies;
    } else {
      factors.push_back(Factor{p, default_factor_weight(p, wa), 1});
    }
  }
  return make_sequence(wa.algebra(), std::move(factors), wa.strict());
}

SearchResult swct_lower(const MonomialAlgebra& a, const WeightAssignment& wa,
                        const SearchBudget& budget) {
  if (!wa.strict()) {
    throw Error(ErrorCode::kNotStrict, "the exhaustive search needs a strict weight assignment");
  }
  if (!wa.algebra().same_as(a)) {
    throw Error(ErrorCode::kAlgebraMismatch, "weights belong to a different algebra");
  }
  std::optional<int> max_degree = budget.max_total_degree;
  if (!max_degree) max_degree = a.top_degree();
  if (!max_degree) {
    throw Error(ErrorCode::kBadBudget, "algebra is unbounded; give a maximum total degree");
  }
  if (*max_degree < 1) throw Error(ErrorCode::kEmptySearchSpace, "no positive-degree classes");
  if (budget.max_factors && *budget.max_factors < 1) {
    throw Error(ErrorCode::kBadBudget, "max_factors must be >= 1");
  }

  const std::vector<Monomial> monomials = enumerate_nonzero_monomials(a, *max_degree);
  if (monomials.empty()) {
    throw Error(ErrorCode::kEmptySearchSpace, "no nonzero monomial within the budget");
  }
  int max_factors = 0;
  if (budget.max_factors) {
    max_factors = *budget.max_factors;
  } else {
    for (const auto& m : monomials) max_factors = std::max(max_factors, default_factor_weight(m, wa));
  }

  unsigned threads = budget.threads ? budget.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(monomials.size()));
  std::vector<Best> partial(threads);
  auto work = [&](unsigned worker) {
    Best& best = partial[worker];
    for (std::size_t i = worker; i < monomials.size(); i += threads) {
      for_each_factorization(
          monomials[i],
          [&](std::span<const Monomial> parts) {
            ++best.examined;
            best.offer(wct(sequence_from_parts(parts, wa)).final_value, parts);
          },
          max_factors);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }

  Best merged;
  for (const Best& b : partial) {
    merged.examined += b.examined;
    if (b.value >= 0) merged.offer(b.value, b.parts);
  }
  if (merged.value < 0) {
    throw Error(ErrorCode::kEmptySearchSpace, "no factorization fits within max_factors");
  }
  // Report the witness smallest factor first.
  std::reverse(merged.parts.begin(), merged.parts.end());
  return SearchResult{merged.value, sequence_from_parts(merged.parts, wa), merged.examined};
}

}  // namespace ctbound
