// SPDX-License-Identifier: Apache-2.0

#include "ctbound/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "ctbound/error.hpp"

namespace ctbound {

struct MonomialAlgebra::Impl {
  int prime = 2;
  std::vector<Generator> generators;
  std::optional<int> degree_cap;
  std::optional<int> top_degree;
};

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

// Largest reachable degree of a nonzero monomial, by a bounded knapsack over
// degrees up to the cap. Without a cap every generator must be bounded.
std::optional<int> compute_top_degree(const std::vector<Generator>& gens,
                                      std::optional<int> cap) {
  if (!cap) {
    int total = 0;
    for (const auto& g : gens) {
      if (!g.nilpotency) return std::nullopt;
      total += (*g.nilpotency - 1) * g.degree;
    }
    return total;
  }
  std::vector<bool> reachable(static_cast<std::size_t>(*cap) + 1, false);
  reachable[0] = true;
  for (const auto& g : gens) {
    const int max_exp = g.nilpotency ? *g.nilpotency - 1 : *cap / g.degree;
    for (int e = 0; e < max_exp; ++e) {
      bool changed = false;
      for (int d = *cap; d >= g.degree; --d) {
        // One more copy of g on top of states from the previous round.
        if (!reachable[d] && reachable[d - g.degree]) {
          reachable[d] = true;
          changed = true;
        }
      }
      if (!changed) break;
    }
  }
  int top = 0;
  for (int d = 0; d <= *cap; ++d) {
    if (reachable[d]) top = d;
  }
  return top;
}

}  // namespace

MonomialAlgebra make_algebra(int prime, std::vector<Generator> generators,
                             std::optional<int> degree_cap) {
  if (!is_prime(prime)) {
    throw Error(ErrorCode::kNonPrime, std::to_string(prime) + " is not prime");
  }
  std::set<std::string> names;
  int max_degree = 0;
  for (const auto& g : generators) {
    if (g.name.empty()) throw Error(ErrorCode::kParseError, "empty generator name");
    if (!names.insert(g.name).second) {
      throw Error(ErrorCode::kDuplicateGenerator, "generator '" + g.name + "' declared twice");
    }
    if (g.degree < 1) {
      throw Error(ErrorCode::kBadDegree,
                  "generator '" + g.name + "' has degree " + std::to_string(g.degree));
    }
    if (g.nilpotency && *g.nilpotency < 2) {
      throw Error(ErrorCode::kBadNilpotency, "generator '" + g.name + "' has nilpotency " +
                                                 std::to_string(*g.nilpotency));
    }
    if (prime % 2 == 1 && g.degree % 2 == 1 && g.nilpotency != 2) {
      throw Error(ErrorCode::kOddDegreeNotSquareZero,
                  "odd-degree generator '" + g.name + "' must square to zero over Z_" +
                      std::to_string(prime));
    }
    max_degree = std::max(max_degree, g.degree);
  }
  if (degree_cap && *degree_cap < std::max(max_degree, 1)) {
    throw Error(ErrorCode::kBadDegreeCap, "degree cap " + std::to_string(*degree_cap) +
                                              " is below a generator degree");
  }
  auto impl = std::make_shared<MonomialAlgebra::Impl>();
  impl->prime = prime;
  impl->degree_cap = degree_cap;
  impl->top_degree = compute_top_degree(generators, degree_cap);
  impl->generators = std::move(generators);
  return MonomialAlgebra(std::move(impl));
}

int MonomialAlgebra::prime() const { return impl_->prime; }

std::span<const Generator> MonomialAlgebra::generators() const { return impl_->generators; }

std::optional<int> MonomialAlgebra::degree_cap() const { return impl_->degree_cap; }

std::optional<int> MonomialAlgebra::top_degree() const { return impl_->top_degree; }

std::optional<std::size_t> MonomialAlgebra::index_of(std::string_view name) const {
  const auto& gens = impl_->generators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].name == name) return i;
  }
  return std::nullopt;
}

bool MonomialAlgebra::is_nonzero(std::span<const int> exponents) const {
  const auto& gens = impl_->generators;
  if (exponents.size() != gens.size()) return false;
  int degree = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (exponents[i] < 0) return false;
    if (gens[i].nilpotency && exponents[i] >= *gens[i].nilpotency) return false;
    degree += exponents[i] * gens[i].degree;
  }
  return !impl_->degree_cap || degree <= *impl_->degree_cap;
}

Monomial MonomialAlgebra::unit() const {
  return Monomial(*this, std::vector<int>(size(), 0));
}

Monomial MonomialAlgebra::power(std::size_t i, int exponent) const {
  std::vector<int> exps(size(), 0);
  exps.at(i) = exponent;
  return monomial(std::move(exps));
}

Monomial MonomialAlgebra::monomial(std::vector<int> exponents) const {
  if (exponents.size() != size()) {
    throw Error(ErrorCode::kAlgebraMismatch, "exponent vector has wrong length");
  }
  if (!is_nonzero(exponents)) {
    Monomial probe(*this, exponents);
    throw Error(ErrorCode::kZeroMonomial, probe.to_string() + " vanishes");
  }
  return Monomial(*this, std::move(exponents));
}

int Monomial::degree() const {
  int d = 0;
  const auto gens = algebra_.generators();
  for (std::size_t i = 0; i < exponents_.size(); ++i) d += exponents_[i] * gens[i].degree;
  return d;
}

bool Monomial::is_unit() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e == 0; });
}

std::string Monomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  const auto gens = algebra_.generators();
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!first) out << '*';
    first = false;
    out << gens[i].name;
    if (exponents_[i] > 1) out << '^' << exponents_[i];
  }
  if (first) return "1";
  return out.str();
}

std::strong_ordering graded_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.exponents_ <=> b.exponents_;
}

std::optional<Monomial> mono_mul(const Monomial& a, const Monomial& b) {
  if (!a.algebra().same_as(b.algebra())) {
    throw Error(ErrorCode::kAlgebraMismatch, "monomials belong to different algebras");
  }
  std::vector<int> exps(a.exponents().begin(), a.exponents().end());
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] += b.exponent(i);
  if (!a.algebra().is_nonzero(exps)) return std::nullopt;
  return a.algebra().monomial(std::move(exps));
}

int mono_degree(const Monomial& m) { return m.degree(); }

namespace {

class MonomialParser {
 public:
  MonomialParser(std::string_view text, const MonomialAlgebra& algebra)
      : text_(text), algebra_(algebra), exps_(algebra.size(), 0) {}

  Monomial parse() {
    skip_space();
    factor();
    skip_space();
    while (pos_ < text_.size()) {
      expect('*');
      factor();
      skip_space();
    }
    return algebra_.monomial(std::move(exps_));
  }

 private:
  void factor() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(uc(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() && (std::isalnum(uc(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    }
    if (start == pos_) fail("expected generator name");
    const std::string_view name = text_.substr(start, pos_ - start);
    const auto index = algebra_.index_of(name);
    if (!index) {
      throw Error(ErrorCode::kUnknownGenerator, "unknown generator '" + std::string(name) + "'");
    }
    int exponent = 1;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      const char* first = text_.data() + pos_;
      const char* last = text_.data() + text_.size();
      auto [ptr, ec] = std::from_chars(first, last, exponent);
      if (ec != std::errc() || ptr == first || exponent < 1) fail("expected positive exponent");
      pos_ += static_cast<std::size_t>(ptr - first);
    }
    exps_[*index] += exponent;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(uc(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kParseError,
                what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  static unsigned char uc(char c) { return static_cast<unsigned char>(c); }

  std::string_view text_;
  const MonomialAlgebra& algebra_;
  std::vector<int> exps_;
  std::size_t pos_ = 0;
};

}  // namespace

Monomial parse_monomial(std::string_view text, const MonomialAlgebra& algebra) {
  return MonomialParser(text, algebra).parse();
}

}  // namespace ctbound
