// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctbound/algebra.hpp"

namespace ctbound {

/// Why a generator's weight is a valid lower bound for its category weight.
enum class Justification {
  kDefaultOne,
  kBockstein,        // image of a degree-1 class under a Bockstein: weight exactly 2
  kPullbackFromBG,   // pulled back from a classifying space: weight = degree
  kLiteratureCwgt,   // a published cwgt value; not a strict-weight bound
  kLiteratureSwgt,
  kManual,
};

std::string_view justification_name(Justification j);
/// Accepts the names produced by justification_name; throws BAD_JUSTIFICATION.
Justification parse_justification(std::string_view name);

struct WeightSpec {
  int weight = 1;
  Justification justification = Justification::kManual;
};

/// Per-generator weight estimator. Generators without a spec get weight 1
/// with DEFAULT_ONE.
class WeightAssignment {
 public:
  int weight(std::size_t generator) const { return weights_[generator]; }
  Justification justification(std::size_t generator) const { return tags_[generator]; }
  /// True iff every weight bounds the strict category weight, so that the
  /// resulting estimate bounds ct and not only sct.
  bool strict() const { return strict_; }
  const MonomialAlgebra& algebra() const { return algebra_; }

 private:
  friend WeightAssignment make_weights(const MonomialAlgebra&,
                                       const std::map<std::string, WeightSpec>&,
                                       std::optional<bool>);
  explicit WeightAssignment(MonomialAlgebra algebra) : algebra_(std::move(algebra)) {}

  MonomialAlgebra algebra_;
  std::vector<int> weights_;
  std::vector<Justification> tags_;
  bool strict_ = true;
};

/// Validates 1 <= weight <= degree and the BOCKSTEIN shape (weight 2 on a
/// degree-2 class). `strict` defaults to "no LITERATURE_CWGT tag"; requesting
/// strict with such a tag throws NOT_STRICT.
WeightAssignment make_weights(const MonomialAlgebra& algebra,
                              const std::map<std::string, WeightSpec>& specs = {},
                              std::optional<bool> strict = std::nullopt);

/// Weight of a nonzero monomial by superadditivity: sum of exponent * weight.
int default_factor_weight(const Monomial& m, const WeightAssignment& wa);

struct Factor {
  Monomial monomial;
  int weight = 1;
  int copies = 1;
};

/// A multiset of weighted monomial factors whose full product is nonzero.
class WeightedSequence {
 public:
  const MonomialAlgebra& algebra() const { return algebra_; }
  const std::vector<Factor>& factors() const { return factors_; }
  /// Product of all factor copies (the unit for an empty sequence).
  const Monomial& product() const { return product_; }
  bool strict() const { return strict_; }
  int copy_count() const;

 private:
  friend WeightedSequence make_sequence(const MonomialAlgebra&, std::vector<Factor>, bool);
  WeightedSequence(MonomialAlgebra algebra, std::vector<Factor> factors, Monomial product,
                   bool strict)
      : algebra_(std::move(algebra)),
        factors_(std::move(factors)),
        product_(std::move(product)),
        strict_(strict) {}

  MonomialAlgebra algebra_;
  std::vector<Factor> factors_;
  Monomial product_;
  bool strict_;
};

/// Errors: ZERO_PRODUCT, WEIGHT_EXCEEDS_DEGREE, BAD_WEIGHT, BAD_COPIES,
/// ALGEBRA_MISMATCH.
WeightedSequence make_sequence(const MonomialAlgebra& algebra, std::vector<Factor> factors,
                               bool strict);

int sequence_weight(const WeightedSequence& s);

struct SequenceEntry {
  std::string factor;
  int copies = 1;
  std::optional<int> weight;
};

/// Parses each entry; omitted weights default to default_factor_weight.
WeightedSequence build_sequence(const std::vector<SequenceEntry>& entries,
                                const MonomialAlgebra& algebra, const WeightAssignment& wa);

/// Same factors with every weight replaced by 1.
WeightedSequence with_unit_weights(const WeightedSequence& s);

}  // namespace ctbound
