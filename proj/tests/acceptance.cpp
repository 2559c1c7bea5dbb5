// SPDX-License-Identifier: Apache-2.0

// Runs every acceptance criterion and prints one PASS/FAIL line each. Exits
// nonzero when any criterion fails.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ctbound/catalog.hpp"
#include "ctbound/oracle.hpp"
#include "ctbound/search.hpp"
#include "support.hpp"

namespace {

using namespace ctbound;

// Collects the first few mismatches of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << what;
  }
  template <typename A, typename B>
  void equal(const A& got, const B& want, const std::string& what) {
    std::ostringstream msg;
    msg << what << ": got " << got << ", want " << want;
    expect(got == want, msg.str());
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream out;
    out << checks_ << " checks";
    if (failures_ > 0) out << ", " << failures_ << " failed: " << notes_.str();
    return out.str();
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::ostringstream notes_;
};

std::string key(const char* name, std::initializer_list<int> args) {
  std::ostringstream out;
  out << name << '(';
  bool first = true;
  for (int a : args) {
    out << (first ? "" : ",") << a;
    first = false;
  }
  out << ')';
  return out.str();
}

long long computed(const CatalogEntry& e) { return evaluate(e).computed; }

std::optional<long long> reference(const CatalogEntry& e, std::string_view prefix) {
  for (const ReferenceValue& r : e.references) {
    if (r.label.rfind(prefix, 0) == 0) return r.value;
  }
  return std::nullopt;
}

void abstract_product_table(Check& c) {
  const EntryResult r = evaluate(abstract_product());
  c.equal(r.computed, 70, "wct");
  std::vector<int> dims;
  for (const TableRow& row : r.report.dmax_table) dims.push_back(row.dimension);
  c.expect(dims == std::vector<int>{-1, 3, 5, 5, 8, 8, 10, 10, 12}, "dimension column");
}

void lens_spaces(Check& c) {
  for (int p : {3, 5, 7}) {
    for (int n = 1; n <= 10; ++n) c.equal(computed(lens(n, p)), (n + 1) * (2 * n + 3), key("lens", {n, p}));
  }
}

void lens_times_spheres(Check& c) {
  for (int n = 1; n <= 6; ++n) {
    for (int m = 1; m <= 9; ++m) {
      c.equal(computed(lens_times_sphere(n, m, 3)), (n + 1) * (2 * m + 2 * n + 3) + 2,
              key("lens_times_sphere", {n, m}));
    }
  }
  c.equal(computed(lens_times_sphere(1, 3, 3)), 24, "lens_times_sphere(1,3)");
  for (int n = 1; n <= 10; ++n) {
    c.equal(computed(lens_times_sphere(n, 2 * n + 1, 3)), 6 * n * n + 11 * n + 7, key("at (n,2n+1)", {n}));
    c.equal(computed(highly_connected(n)), 6 * n * n + 11 * n + 7, key("highly_connected", {n}));
  }
}

void sp2_variants(Check& c) {
  const EntryResult weighted = evaluate(sp2(true, false));
  c.equal(weighted.computed, 24, "weighted");
  c.expect(weighted.report.bound_target == BoundTarget::kSct, "weighted target SCT");
  const EntryResult plain = evaluate(sp2(false, false));
  c.equal(plain.report.base_value, 20, "non-weighted base");
  const EntryResult indep = evaluate(sp2(false, true));
  c.equal(indep.computed, 21, "non-weighted + independence");
  c.expect(indep.report.bound_target == BoundTarget::kCt, "refined target CT");
}

void exhaustive_search(Check& c) {
  for (int n = 1; n <= 6; ++n) {
    const MonomialAlgebra a = make_algebra(2, {{"x", 1, n + 1}});
    c.equal(swct_lower(a, make_weights(a)).value, (n + 1) * (n + 2) / 2, key("RP", {n}));
    c.equal(computed(bg_cyclic_skeleton(n, 2, 2)), (n + 1) * (n + 2) / 2, key("skeleton BZ_2", {n}));
  }
  for (int n = 1; n <= 16; ++n) {
    const MonomialAlgebra a = make_algebra(2, {{"u", n, 2}});
    c.equal(swct_lower(a, make_weights(a)).value, n + 2, key("S", {n}));
  }
}

void su_quotients(Check& c) {
  for (int n = 2; n <= 8; ++n) {
    for (int k : su_admissible_divisors(n)) {
      int p = 2;
      while (k % p != 0) ++p;
      int r = 0;
      for (int v = k; v > 1; v /= p) ++r;
      c.equal(computed(su_quotient(n, p, r)), su_closed_form(n, k), key("su_quotient", {n, p, r}));
    }
  }
  c.equal(computed(su_quotient(3, 3, 1)), 40, "su_quotient(3,3,1)");
  c.equal(computed(su_quotient(4, 2, 2)), 107, "su_quotient(4,2,2)");
  for (int n = 2; n <= 60; ++n) c.expect(su_monotonicity_check(n), key("monotonicity", {n}));
}

void stiefel_frames(Check& c) {
  c.equal(computed(stiefel(3, 7, 1, 3)), 310, "i=1");
  c.equal(computed(stiefel(3, 7, 3, 3)), 398, "i=3");
}

void lie_example(Check& c) { c.equal(computed(lie_quotient_min({3, 5, 3, 5, 7}, 3)), 130, "SU(3)xSU(4)/Z_12"); }

void product_of_spheres(Check& c) {
  for (int m1 = 3; m1 <= 15; m1 += 2) {
    for (int m2 = m1; m2 <= 15; m2 += 2) {
      for (int m3 = m2; m3 <= 15 && m3 < m1 + m2; m3 += 2) {
        const long long dim = m1 + m2 + m3;
        const long long formula = (m1 + 2LL * m2 + 3LL * m3 + 4) + (m1 - 1LL) * (2 * dim + 2 - m1) / 2;
        c.equal(computed(product_of_spheres_quotient({m1, m2, m3}, 1, 3)), formula,
                key("dims", {m1, m2, m3}));
      }
    }
  }
}

void discrepancy_flags(Check& c) {
  const CatalogEntry sp = symplectic_product(1, 1);
  const EntryResult spr = evaluate(sp);
  c.equal(spr.computed, 12, "symplectic_product(1,1) computed");
  c.equal(reference(sp, "printed").value_or(-1), 14, "symplectic_product(1,1) printed");
  c.expect(spr.status == EntryStatus::kFlagged, "symplectic_product FLAGGED");
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      c.equal(computed(symplectic_product(m, n)), 2 * m * (m + 2 * n + 1) + (n + 1) * (n + 1),
              key("symplectic_product", {m, n}));
    }
  }
  const CatalogEntry d = dold(1, 1);
  const EntryResult dr = evaluate(d);
  c.equal(dr.computed, 8, "dold(1,1) computed");
  c.equal(reference(d, "printed closed form").value_or(-1), 6, "dold(1,1) printed");
  c.expect(dr.status == EntryStatus::kFlagged, "dold FLAGGED");
  for (bool trivial : {true, false}) {
    const CatalogEntry t = two_spheres_quotient(3, 7, 3, trivial);
    c.expect(evaluate(t).status == EntryStatus::kFlagged, "two_spheres_quotient FLAGGED");
    c.equal(reference(t, "printed, transgression trivial").value_or(-1), 62, "trivial reading");
    c.equal(reference(t, "printed, transgression nontrivial").value_or(-1), 40, "nontrivial reading");
    c.equal(computed(t), trivial ? 40 : 62, "ring value");
  }
}

void oracle_equivalence(Check& c) {
  std::mt19937 rng(20240601);
  const testing::Limits limits{18, 5, 9};
  for (int trial = 0; trial < 1000; ++trial) {
    const WeightedSequence s = testing::random_sequence(rng, limits);
    const WctReport r = wct(s);
    const std::vector<int> want = oracle::brute_force_dmax(s);
    bool same = want.size() == r.dmax_table.size();
    for (std::size_t k = 0; same && k < want.size(); ++k) same = want[k] == r.dmax_table[k].dimension;
    c.expect(same, "trial " + std::to_string(trial));
  }
}

void property_suite(Check& c) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const WeightedSequence s = testing::random_sequence(rng);
    const WctReport r = wct(s);

    std::vector<Factor> shuffled = testing::expanded(s);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    c.expect(wct(testing::with_factors(s, shuffled)).base_value == r.base_value, "permutation");

    c.expect(wct(with_unit_weights(s)).base_value == nonweighted_ct(s), "all-ones reduction");

    bool monotone = true;
    for (std::size_t k = 1; k < r.dmax_table.size(); ++k) {
      monotone = monotone && r.dmax_table[k - 1].dimension <= r.dmax_table[k].dimension;
    }
    const int top = s.copy_count() == 0 ? -1 : s.product().degree();
    c.expect(monotone && r.top_dimension() == top, "dmax monotone, ends at |s|");

    if (s.copy_count() > 0) {
      const long long w = r.total_weight;
      c.expect(top + 2 <= r.base_value && r.base_value <= 1 + w + w * top, "bound sandwich");
    }

    const std::vector<Factor> items = testing::expanded(s);
    bool closed = true;
    if (items.size() <= 14) {
      for (std::uint32_t mask = 0; closed && mask < (1u << items.size()); ++mask) {
        std::optional<Monomial> p = s.algebra().unit();
        for (std::size_t i = 0; p && i < items.size(); ++i) {
          if (mask >> i & 1u) p = mono_mul(*p, items[i].monomial);
        }
        closed = p.has_value();
      }
    }
    c.expect(closed, "sub-multiset closure");
  }
}

struct Criterion {
  const char* name;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"abstract product x^2yz: wct 70 and dimension table", abstract_product_table},
      {"lens spaces (n+1)(2n+3), n<=10, p in {3,5,7}", lens_spaces},
      {"lens x sphere, specializations 24 and 6n^2+11n+7", lens_times_spheres},
      {"Sp(2): 24 SCT, base 20, refined 21 CT", sp2_variants},
      {"exhaustive search: RP^n and S^n", exhaustive_search},
      {"SU(n) quotients: closed form and monotonicity", su_quotients},
      {"Stiefel V_3(C^7): 310 and 398", stiefel_frames},
      {"Lie group SU(3)xSU(4)/Z_12: 130", lie_example},
      {"product of spheres general formula, odd triples <= 15", product_of_spheres},
      {"discrepancy flags: symplectic product, Dold, two spheres", discrepancy_flags},
      {"knapsack equals brute force on 1000 random sequences", oracle_equivalence},
      {"property suite on 200 random instances", property_suite},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    try {
      criteria[i].run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    if (!check.ok()) ++failed;
    std::printf("%s  %2zu  %s  (%s)\n", check.ok() ? "PASS" : "FAIL", i + 1, criteria[i].name,
                check.summary().c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
