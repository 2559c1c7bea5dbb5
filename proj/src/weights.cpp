// SPDX-License-Identifier: Apache-2.0

#include "ctbound/weights.hpp"

#include <array>
#include <utility>

#include "ctbound/error.hpp"

namespace ctbound {

namespace {

constexpr std::array<std::pair<Justification, std::string_view>, 6> kJustificationNames{{
    {Justification::kDefaultOne, "DEFAULT_ONE"},
    {Justification::kBockstein, "BOCKSTEIN"},
    {Justification::kPullbackFromBG, "PULLBACK_FROM_BG"},
    {Justification::kLiteratureCwgt, "LITERATURE_CWGT"},
    {Justification::kLiteratureSwgt, "LITERATURE_SWGT"},
    {Justification::kManual, "MANUAL"},
}};

}  // namespace

std::string_view justification_name(Justification j) {
  for (const auto& [tag, name] : kJustificationNames) {
    if (tag == j) return name;
  }
  return "MANUAL";
}

Justification parse_justification(std::string_view name) {
  for (const auto& [tag, n] : kJustificationNames) {
    if (n == name) return tag;
  }
  throw Error(ErrorCode::kBadJustification, "unknown justification '" + std::string(name) + "'");
}

WeightAssignment make_weights(const MonomialAlgebra& algebra,
                              const std::map<std::string, WeightSpec>& specs,
                              std::optional<bool> strict) {
  WeightAssignment wa(algebra);
  wa.weights_.assign(algebra.size(), 1);
  wa.tags_.assign(algebra.size(), Justification::kDefaultOne);
  bool has_cwgt = false;
  for (const auto& [name, spec] : specs) {
    const auto index = algebra.index_of(name);
    if (!index) throw Error(ErrorCode::kUnknownGenerator, "weight for unknown generator '" + name + "'");
    const Generator& g = algebra.generator(*index);
    if (spec.weight < 1) {
      throw Error(ErrorCode::kBadWeight, "weight of '" + name + "' must be positive");
    }
    if (spec.weight > g.degree) {
      throw Error(ErrorCode::kWeightExceedsDegree,
                  "weight " + std::to_string(spec.weight) + " of '" + name + "' exceeds degree " +
                      std::to_string(g.degree));
    }
    if (spec.justification == Justification::kBockstein && (spec.weight != 2 || g.degree != 2)) {
      throw Error(ErrorCode::kBadJustification,
                  "BOCKSTEIN requires a degree-2 generator of weight 2 ('" + name + "')");
    }
    has_cwgt = has_cwgt || spec.justification == Justification::kLiteratureCwgt;
    wa.weights_[*index] = spec.weight;
    wa.tags_[*index] = spec.justification;
  }
  if (strict.value_or(false) && has_cwgt) {
    throw Error(ErrorCode::kNotStrict, "a LITERATURE_CWGT weight cannot certify strict weight");
  }
  wa.strict_ = strict.value_or(!has_cwgt);
  return wa;
}

int default_factor_weight(const Monomial& m, const WeightAssignment& wa) {
  if (!m.algebra().same_as(wa.algebra())) {
    throw Error(ErrorCode::kAlgebraMismatch, "weights belong to a different algebra");
  }
  int w = 0;
  for (std::size_t i = 0; i < m.exponents().size(); ++i) w += m.exponent(i) * wa.weight(i);
  return w;
}

int WeightedSequence::copy_count() const {
  int n = 0;
  for (const auto& f : factors_) n += f.copies;
  return n;
}

WeightedSequence make_sequence(const MonomialAlgebra& algebra, std::vector<Factor> factors,
                               bool strict) {
  Monomial product = algebra.unit();
  for (const auto& f : factors) {
    if (!f.monomial.algebra().same_as(algebra)) {
      throw Error(ErrorCode::kAlgebraMismatch, "factor from a different algebra");
    }
    const std::string text = f.monomial.to_string();
    if (f.monomial.is_unit()) throw Error(ErrorCode::kBadDocument, "unit factor in sequence");
    if (f.copies < 1) throw Error(ErrorCode::kBadCopies, "copies of '" + text + "' must be >= 1");
    if (f.weight < 1) throw Error(ErrorCode::kBadWeight, "weight of '" + text + "' must be >= 1");
    if (f.weight > f.monomial.degree()) {
      throw Error(ErrorCode::kWeightExceedsDegree,
                  "weight " + std::to_string(f.weight) + " of '" + text + "' exceeds degree " +
                      std::to_string(f.monomial.degree()));
    }
    for (int c = 0; c < f.copies; ++c) {
      auto next = mono_mul(product, f.monomial);
      if (!next) {
        throw Error(ErrorCode::kZeroProduct,
                    "product vanishes at factor '" + text + "' (running product " +
                        product.to_string() + ")");
      }
      product = std::move(*next);
    }
  }
  return WeightedSequence(algebra, std::move(factors), std::move(product), strict);
}

int sequence_weight(const WeightedSequence& s) {
  int w = 0;
  for (const auto& f : s.factors()) w += f.copies * f.weight;
  return w;
}

WeightedSequence build_sequence(const std::vector<SequenceEntry>& entries,
                                const MonomialAlgebra& algebra, const WeightAssignment& wa) {
  if (!wa.algebra().same_as(algebra)) {
    throw Error(ErrorCode::kAlgebraMismatch, "weights belong to a different algebra");
  }
  std::vector<Factor> factors;
  factors.reserve(entries.size());
  for (const auto& e : entries) {
    Monomial m = parse_monomial(e.factor, algebra);
    const int w = e.weight ? *e.weight : default_factor_weight(m, wa);
    factors.push_back(Factor{std::move(m), w, e.copies});
  }
  return make_sequence(algebra, std::move(factors), wa.strict());
}

WeightedSequence with_unit_weights(const WeightedSequence& s) {
  std::vector<Factor> factors = s.factors();
  for (auto& f : factors) f.weight = 1;
  return make_sequence(s.algebra(), std::move(factors), true);
}

}  // namespace ctbound
