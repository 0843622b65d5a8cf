#pragma once

#include <map>

#include "flagcurv/polynomial.hpp"

namespace flagcurv {

// Rational function over Q(i) in the interned symbols. Equality is decided by
// cross-multiplication plus relation reduction of the resulting numerator,
// never by canonical forms; a light content/monic pass keeps representations
// small and printing stable.
class Scalar {
 public:
  Scalar() : num_(Polynomial::zero()), den_(Polynomial::one()) {}
  Scalar(long n) : num_(Polynomial::constant(GaussianRational(n))), den_(Polynomial::one()) {}
  Scalar(Polynomial num, Polynomial den);

  static Scalar zero() { return Scalar(0); }
  static Scalar one() { return Scalar(1); }
  static Scalar integer(long n) { return Scalar(n); }
  static Scalar fraction(long num, long den);
  static Scalar coefficient(GaussianRational c);
  static Scalar i() { return coefficient(GaussianRational::i()); }
  static Scalar variable(SymbolId v);
  static Scalar named(const std::string& name) { return variable(sym(name)); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_syntactic_zero() const { return num_.is_zero(); }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // DivisionByZero on syntactically-zero divisor
  Scalar inverse() const;
  Scalar pow(long e) const;  // negative exponents allowed

  Scalar derivative(SymbolId v) const;  // exact quotient rule
  Scalar substitute(const std::map<SymbolId, Scalar>& bindings) const;
  Scalar conjugate_coefficients() const;  // i -> -i, symbols untouched
  void collect_symbols(std::vector<SymbolId>& out) const;
  bool uses_symbol(SymbolId v) const;

  // Semantic zero test in the quotient ring. Throws DivisionByZero when the
  // denominator itself vanishes under the relations.
  bool is_zero(const RelationSet& rel = {}) const;
  bool equals(const Scalar& o, const RelationSet& rel = {}) const;

 private:
  void normalize_light();
  Polynomial num_, den_;
};

inline Scalar operator*(long n, const Scalar& s) { return Scalar::integer(n) * s; }

}  // namespace flagcurv
