// SPDX-License-Identifier: Apache-2.0

#include "ctbound/estimate.hpp"

#include <algorithm>
#include <cassert>

#include "ctbound/error.hpp"

namespace ctbound {

std::string_view bound_target_name(BoundTarget t) {
  return t == BoundTarget::kCt ? "CT" : "SCT";
}

std::string_view refinement_name(RefinementKind k) {
  return k == RefinementKind::kHdim ? "HDIM" : "INDEPENDENT_MIN_WEIGHT";
}

namespace {

struct Item {
  std::size_t factor;
  int weight;
  int dim;
};

std::vector<Item> expand(const WeightedSequence& s) {
  std::vector<Item> items;
  const auto& factors = s.factors();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (int c = 0; c < factors[i].copies; ++c) {
      items.push_back({i, factors[i].weight, factors[i].monomial.degree()});
    }
  }
  return items;
}

// Suffix knapsack: best[i][c] is the largest total dimension of a subset of
// items[i..] with weight <= c (0 for the empty subset; dimensions are >= 1).
class SuffixKnapsack {
 public:
  SuffixKnapsack(std::vector<Item> items, int capacity)
      : items_(std::move(items)),
        width_(static_cast<std::size_t>(capacity) + 1),
        best_((items_.size() + 1) * width_, 0) {
    for (std::size_t i = items_.size(); i-- > 0;) {
      const Item& it = items_[i];
      for (int c = 0; c <= capacity; ++c) {
        int v = at(i + 1, c);
        if (it.weight <= c) v = std::max(v, at(i + 1, c - it.weight) + it.dim);
        best_[i * width_ + static_cast<std::size_t>(c)] = v;
      }
    }
  }

  Subproduct solve(int k, std::size_t factor_count) const {
    Subproduct out;
    out.multiplicities.assign(factor_count, 0);
    int cap = std::min<int>(k, static_cast<int>(width_) - 1);
    const int total = at(0, cap);
    out.dimension = total == 0 ? -1 : total;
    for (std::size_t i = 0; i < items_.size(); ++i) {
      const Item& it = items_[i];
      // Taking the earliest item that still allows an optimum keeps the
      // chosen index list lexicographically smallest.
      if (it.weight <= cap && at(i + 1, cap - it.weight) + it.dim == at(i, cap)) {
        ++out.multiplicities[it.factor];
        cap -= it.weight;
      }
    }
    return out;
  }

 private:
  int at(std::size_t i, int c) const { return best_[i * width_ + static_cast<std::size_t>(c)]; }

  std::vector<Item> items_;
  std::size_t width_;
  std::vector<int> best_;
};

TableRow make_row(const WeightedSequence& s, int k, const Subproduct& sub) {
  TableRow row;
  row.k = k;
  row.dimension = sub.dimension;
  Monomial product = s.algebra().unit();
  const auto& factors = s.factors();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (sub.multiplicities[i] == 0) continue;
    row.witness.push_back({factors[i].monomial.to_string(), sub.multiplicities[i]});
    for (int c = 0; c < sub.multiplicities[i]; ++c) {
      // Sub-multisets of a nonzero product never vanish.
      product = *mono_mul(product, factors[i].monomial);
    }
  }
  row.subproduct = row.witness.empty() ? "-" : product.to_string();
  return row;
}

}  // namespace

Subproduct max_dim_subproduct(const WeightedSequence& s, int k) {
  if (k < 0) throw Error(ErrorCode::kBadParam, "k must be non-negative");
  const int capacity = std::min(k, sequence_weight(s));
  return SuffixKnapsack(expand(s), capacity).solve(k, s.factors().size());
}

WctReport wct(const WeightedSequence& s) {
  WctReport report;
  report.total_weight = sequence_weight(s);
  const SuffixKnapsack dp(expand(s), report.total_weight);
  long long sum = 0;
  for (int k = 1; k <= report.total_weight; ++k) {
    const Subproduct sub = dp.solve(k, s.factors().size());
    report.dmax_table.push_back(make_row(s, k, sub));
    sum += sub.dimension;
  }
  report.base_value = static_cast<int>(1 + report.total_weight + sum);
  report.final_value = report.base_value;
  report.bound_target = s.strict() ? BoundTarget::kCt : BoundTarget::kSct;
  report.delta_applies = true;
  assert(report.top_dimension() == (report.total_weight == 0 ? -1 : s.product().degree()));
  return report;
}

int nonweighted_ct(const WeightedSequence& s) {
  std::vector<int> dims;
  for (const auto& f : s.factors()) {
    for (int c = 0; c < f.copies; ++c) dims.push_back(f.monomial.degree());
  }
  std::sort(dims.begin(), dims.end());
  int total = static_cast<int>(dims.size()) + 1;
  for (std::size_t k = 0; k < dims.size(); ++k) total += static_cast<int>(k + 1) * dims[k];
  return total;
}

long long cat_lower_bound(int cat) {
  if (cat < 1) throw Error(ErrorCode::kBadParam, "category must be >= 1");
  return static_cast<long long>(cat) * (cat + 1) / 2;
}

WctReport apply_refinements(const WctReport& r, const WeightedSequence& s,
                            const RefinementRequest& request) {
  WctReport out = r;
  if (request.hdim) {
    const int top = r.top_dimension();
    if (*request.hdim < top) {
      throw Error(ErrorCode::kHdimBelowTopClass,
                  "hdim " + std::to_string(*request.hdim) + " is below the product dimension " +
                      std::to_string(top));
    }
    out.refinements_applied.push_back(
        {RefinementKind::kHdim, *request.hdim - top,
         "homotopy dimension " + std::to_string(*request.hdim) + " vs product dimension " +
             std::to_string(top)});
  }
  if (request.independent_min_weight) {
    const auto& factors = s.factors();
    if (factors.empty()) {
      throw Error(ErrorCode::kIndependenceNotWitnessed, "empty sequence");
    }
    int min_weight = factors.front().weight;
    for (const auto& f : factors) min_weight = std::min(min_weight, f.weight);
    std::vector<const Monomial*> distinct;
    for (const auto& f : factors) {
      if (f.weight != min_weight) continue;
      const bool seen = std::any_of(distinct.begin(), distinct.end(),
                                    [&](const Monomial* m) { return *m == f.monomial; });
      if (!seen) distinct.push_back(&f.monomial);
    }
    if (distinct.size() < 2) {
      throw Error(ErrorCode::kIndependenceNotWitnessed,
                  "no two distinct factors of minimal weight " + std::to_string(min_weight));
    }
    out.refinements_applied.push_back(
        {RefinementKind::kIndependentMinWeight, 1,
         "distinct basis monomials " + distinct[0]->to_string() + " and " +
             distinct[1]->to_string() + " share the minimal weight " +
             std::to_string(min_weight)});
  }
  out.final_value = out.base_value;
  for (const auto& ref : out.refinements_applied) out.final_value += ref.delta;
  return out;
}

}  // namespace ctbound
