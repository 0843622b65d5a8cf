#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "flagcurv/rational.hpp"
#include "flagcurv/symbols.hpp"

namespace flagcurv {

// Exponent map, sorted by SymbolId, no zero exponents stored.
class Monomial {
 public:
  Monomial() = default;
  static Monomial one() { return {}; }
  static Monomial variable(SymbolId v, std::uint32_t e = 1);

  bool is_one() const { return exps_.empty(); }
  std::uint32_t total_degree() const;
  std::uint32_t exponent(SymbolId v) const;
  const std::vector<std::pair<SymbolId, std::uint32_t>>& exponents() const { return exps_; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& m) const;
  Monomial quotient_of(const Monomial& m) const;  // m / *this, assuming divides(m)
  static Monomial gcd(const Monomial& a, const Monomial& b);

  // Graded lexicographic order: total degree first, then lexicographic on the
  // exponent vector with earlier-registered symbols more significant.
  static int cmp(const Monomial& a, const Monomial& b);
  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator<(const Monomial& o) const { return cmp(*this, o) < 0; }

 private:
  std::vector<std::pair<SymbolId, std::uint32_t>> exps_;
};

struct Term {
  Monomial mono;
  GaussianRational coeff;
};

// Terms kept sorted in descending graded-lex order, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial zero() { return {}; }
  static Polynomial constant(GaussianRational c);
  static Polynomial one() { return constant(GaussianRational(1)); }
  static Polynomial variable(SymbolId v);
  static Polynomial from_terms(std::vector<Term> terms);  // normalizes

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  GaussianRational constant_value() const;  // requires is_constant()
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const GaussianRational& c) const;
  Polynomial mul_monomial(const Monomial& m, const GaussianRational& c) const;

  Polynomial derivative(SymbolId v) const;
  Polynomial conjugate_coefficients() const;  // i -> -i
  void collect_symbols(std::vector<SymbolId>& out) const;

  Monomial monomial_content() const;              // gcd of all monomials
  Polynomial divide_by_monomial(const Monomial& m) const;  // requires m | every term

  bool operator==(const Polynomial& o) const;

 private:
  std::vector<Term> terms_;
};

// Rewrite rules (leading monomial -> replacement polynomial), each strictly
// decreasing in graded-lex so reduction terminates.
class RelationSet {
 public:
  RelationSet() = default;

  // Turns "p == 0" into the rule LM(p) -> -(p - LT(p))/LC(p). Throws
  // BadRelation when p is zero or constant.
  void add_vanishing(const Polynomial& p);
  void add_rule(Monomial lhs, Polynomial rhs);  // validates strict decrease

  bool empty() const { return rules_.empty(); }
  std::size_t size() const { return rules_.size(); }
  const std::vector<std::pair<Monomial, Polynomial>>& rules() const { return rules_; }

  static constexpr std::int64_t kDefaultBudget = 1000000;
  // Normal form under the rules; throws NonTerminatingReduction past budget.
  Polynomial reduce(Polynomial p, std::int64_t budget = kDefaultBudget) const;

 private:
  std::vector<std::pair<Monomial, Polynomial>> rules_;
};

}  // namespace flagcurv
