// SPDX-License-Identifier: Apache-2.0

// Monomial presentations of graded-commutative algebras over a prime field:
// tensor products of exterior and truncated polynomial algebras, optionally
// truncated above a degree cap. Only non-vanishing of monomials is tracked;
// over a field a nonzero product of basis monomials has a unit coefficient.

#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ctbound {

struct Generator {
  std::string name;
  int degree = 1;
  /// Least e with g^e = 0; nullopt means no power vanishes.
  std::optional<int> nilpotency;
};

class Monomial;

/// Immutable, cheap to copy. Copies share identity; algebras built by separate
/// make_algebra calls are distinct even when their presentations agree.
class MonomialAlgebra {
 public:
  int prime() const;
  std::span<const Generator> generators() const;
  std::size_t size() const { return generators().size(); }
  const Generator& generator(std::size_t i) const { return generators()[i]; }
  std::optional<int> degree_cap() const;
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Largest degree of a nonzero monomial; nullopt when it is unbounded.
  std::optional<int> top_degree() const;

  bool is_nonzero(std::span<const int> exponents) const;
  bool same_as(const MonomialAlgebra& other) const { return impl_ == other.impl_; }

  Monomial unit() const;
  /// The monomial g_i^power; throws ZERO_MONOMIAL if it vanishes.
  Monomial power(std::size_t i, int exponent) const;
  Monomial monomial(std::vector<int> exponents) const;

 private:
  struct Impl;
  explicit MonomialAlgebra(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  friend MonomialAlgebra make_algebra(int, std::vector<Generator>, std::optional<int>);

  std::shared_ptr<const Impl> impl_;
};

/// Validates the presentation. Errors: NON_PRIME, DUPLICATE_GENERATOR,
/// ODD_DEGREE_NOT_SQUARE_ZERO, BAD_NILPOTENCY, BAD_DEGREE, BAD_DEGREE_CAP.
MonomialAlgebra make_algebra(int prime, std::vector<Generator> generators,
                             std::optional<int> degree_cap = std::nullopt);

/// A nonzero monomial class. Zero is represented by an empty optional at the
/// call sites that can produce it (mono_mul).
class Monomial {
 public:
  const MonomialAlgebra& algebra() const { return algebra_; }
  std::span<const int> exponents() const { return exponents_; }
  int exponent(std::size_t i) const { return exponents_[i]; }
  int degree() const;
  bool is_unit() const;
  /// "x*y^2"; the unit renders as "1".
  std::string to_string() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.algebra_.same_as(b.algebra_) && a.exponents_ == b.exponents_;
  }
  /// Graded order: total degree first, then exponent vector lexicographically.
  friend std::strong_ordering graded_compare(const Monomial& a, const Monomial& b);

 private:
  friend class MonomialAlgebra;
  Monomial(MonomialAlgebra algebra, std::vector<int> exponents)
      : algebra_(std::move(algebra)), exponents_(std::move(exponents)) {}

  MonomialAlgebra algebra_;
  std::vector<int> exponents_;
};

/// Product of two monomials, or nullopt when it vanishes. Throws
/// ALGEBRA_MISMATCH for monomials from different algebras.
std::optional<Monomial> mono_mul(const Monomial& a, const Monomial& b);

int mono_degree(const Monomial& m);

/// Grammar: name ("^" int)? ("*" name ("^" int)?)*; whitespace is ignored.
/// Errors: PARSE_ERROR, UNKNOWN_GENERATOR, ZERO_MONOMIAL.
Monomial parse_monomial(std::string_view text, const MonomialAlgebra& algebra);

bool is_prime(int n);

}  // namespace ctbound
