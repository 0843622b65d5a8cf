#include "flagcurv/scalar.hpp"

#include <algorithm>

#include "flagcurv/errors.hpp"

namespace flagcurv {

Scalar::Scalar(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorKind::DivisionByZero, "scalar with zero denominator");
  normalize_light();
}

Scalar Scalar::fraction(long num, long den) {
  return coefficient(GaussianRational::from_fraction(num, den));
}

Scalar Scalar::coefficient(GaussianRational c) {
  Scalar s;
  s.num_ = Polynomial::constant(std::move(c));
  return s;
}

Scalar Scalar::variable(SymbolId v) {
  Scalar s;
  s.num_ = Polynomial::variable(v);
  return s;
}

void Scalar::normalize_light() {
  if (num_.is_zero()) {
    den_ = Polynomial::one();
    return;
  }
  Monomial g = Monomial::gcd(num_.monomial_content(), den_.monomial_content());
  if (!g.is_one()) {
    num_ = num_.divide_by_monomial(g);
    den_ = den_.divide_by_monomial(g);
  }
  const GaussianRational& lc = den_.leading().coeff;
  if (!lc.is_one()) {
    GaussianRational inv = lc.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

Scalar Scalar::operator-() const {
  Scalar s;
  s.num_ = -num_;
  s.den_ = den_;
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (num_.is_zero()) return o;
  if (o.num_.is_zero()) return *this;
  if (den_ == o.den_) return Scalar(num_ + o.num_, den_);
  return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (num_.is_zero() || o.num_.is_zero()) return zero();
  return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.num_.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero scalar");
  if (num_.is_zero()) return zero();
  return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::inverse() const { return one() / *this; }

Scalar Scalar::pow(long e) const {
  if (e == 0) return one();
  Scalar base = e > 0 ? *this : inverse();
  long n = e > 0 ? e : -e;
  Scalar acc = one();
  for (long k = 0; k < n; ++k) acc = acc * base;
  return acc;
}

Scalar Scalar::derivative(SymbolId v) const {
  // (n/d)' = (n'd - nd')/d^2
  Polynomial np = num_.derivative(v);
  Polynomial dp = den_.derivative(v);
  if (dp.is_zero()) {
    if (np.is_zero()) return zero();
    return Scalar(std::move(np), den_);
  }
  return Scalar(np * den_ - num_ * dp, den_ * den_);
}

namespace {
Polynomial substitute_poly(const Polynomial& p, const std::map<SymbolId, Scalar>& bindings,
                           Polynomial* den_acc) {
  // Evaluates p with substitutions as a Scalar num/den pair accumulated by hand.
  Scalar acc = Scalar::zero();
  for (const auto& t : p.terms()) {
    Scalar term = Scalar::coefficient(t.coeff);
    for (const auto& [v, e] : t.mono.exponents()) {
      auto it = bindings.find(v);
      Scalar base = (it != bindings.end()) ? it->second : Scalar::variable(v);
      term = term * base.pow(static_cast<long>(e));
    }
    acc = acc + term;
  }
  *den_acc = acc.den();
  return acc.num();
}
}  // namespace

Scalar Scalar::substitute(const std::map<SymbolId, Scalar>& bindings) const {
  if (bindings.empty()) return *this;
  Polynomial nd, dd;
  Polynomial nn = substitute_poly(num_, bindings, &nd);
  Polynomial dn = substitute_poly(den_, bindings, &dd);
  if (dn.is_zero())
    fail(ErrorKind::DivisionByZero, "substitution makes a denominator vanish");
  return Scalar(nn * dd, nd * dn);
}

Scalar Scalar::conjugate_coefficients() const {
  Scalar s;
  s.num_ = num_.conjugate_coefficients();
  s.den_ = den_.conjugate_coefficients();
  s.normalize_light();
  return s;
}

void Scalar::collect_symbols(std::vector<SymbolId>& out) const {
  num_.collect_symbols(out);
  den_.collect_symbols(out);
}

bool Scalar::uses_symbol(SymbolId v) const {
  std::vector<SymbolId> all;
  collect_symbols(all);
  return std::find(all.begin(), all.end(), v) != all.end();
}

bool Scalar::is_zero(const RelationSet& rel) const {
  if (rel.empty()) return num_.is_zero();
  if (rel.reduce(den_).is_zero())
    fail(ErrorKind::DivisionByZero, "denominator vanishes under the declared relations");
  return rel.reduce(num_).is_zero();
}

bool Scalar::equals(const Scalar& o, const RelationSet& rel) const {
  return (*this - o).is_zero(rel);
}

}  // namespace flagcurv
