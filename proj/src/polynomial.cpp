#include "flagcurv/polynomial.hpp"

#include <algorithm>
#include <map>

#include "flagcurv/errors.hpp"

namespace flagcurv {

Monomial Monomial::variable(SymbolId v, std::uint32_t e) {
  Monomial m;
  if (e > 0) m.exps_.emplace_back(v, e);
  return m;
}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [v, e] : exps_) d += e;
  return d;
}

std::uint32_t Monomial::exponent(SymbolId v) const {
  for (const auto& [s, e] : exps_)
    if (s == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  auto a = exps_.begin(), b = o.exps_.begin();
  while (a != exps_.end() || b != o.exps_.end()) {
    if (b == o.exps_.end() || (a != exps_.end() && a->first < b->first)) {
      r.exps_.push_back(*a++);
    } else if (a == exps_.end() || b->first < a->first) {
      r.exps_.push_back(*b++);
    } else {
      r.exps_.emplace_back(a->first, a->second + b->second);
      ++a; ++b;
    }
  }
  return r;
}

bool Monomial::divides(const Monomial& m) const {
  for (const auto& [v, e] : exps_)
    if (m.exponent(v) < e) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& m) const {
  Monomial r;
  for (const auto& [v, e] : m.exps_) {
    std::uint32_t mine = exponent(v);
    if (e > mine) r.exps_.emplace_back(v, e - mine);
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (const auto& [v, e] : a.exps_) {
    std::uint32_t eb = b.exponent(v);
    std::uint32_t g = std::min(e, eb);
    if (g > 0) r.exps_.emplace_back(v, g);
  }
  return r;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
  std::uint32_t da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  auto ia = a.exps_.begin(), ib = b.exps_.begin();
  while (ia != a.exps_.end() && ib != b.exps_.end()) {
    if (ia->first != ib->first) {
      // the one holding the earlier symbol has a positive exponent there
      return ia->first < ib->first ? 1 : -1;
    }
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    ++ia; ++ib;
  }
  if (ia != a.exps_.end()) return 1;
  if (ib != b.exps_.end()) return -1;
  return 0;
}

namespace {
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::cmp(a, b) > 0; }
};
}  // namespace

Polynomial Polynomial::constant(GaussianRational c) {
  Polynomial p;
  if (!c.is_zero()) p.terms_.push_back({Monomial::one(), std::move(c)});
  return p;
}

Polynomial Polynomial::variable(SymbolId v) {
  Polynomial p;
  p.terms_.push_back({Monomial::variable(v), GaussianRational(1)});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::map<Monomial, GaussianRational, GrlexGreater> acc;
  for (auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    auto [it, inserted] = acc.emplace(t.mono, t.coeff);
    if (!inserted) it->second = it->second + t.coeff;
  }
  Polynomial p;
  for (auto& [m, c] : acc)
    if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

GaussianRational Polynomial::constant_value() const {
  if (terms_.empty()) return GaussianRational(0);
  return terms_[0].coeff;
}

Polynomial Polynomial::operator-() const {
  Polynomial p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono, -t.coeff});
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial p;
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end()) { p.terms_.push_back(*a++); continue; }
    if (a == terms_.end()) { p.terms_.push_back(*b++); continue; }
    int c = Monomial::cmp(a->mono, b->mono);
    if (c > 0) p.terms_.push_back(*a++);
    else if (c < 0) p.terms_.push_back(*b++);
    else {
      GaussianRational s = a->coeff + b->coeff;
      if (!s.is_zero()) p.terms_.push_back({a->mono, s});
      ++a; ++b;
    }
  }
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  std::map<Monomial, GaussianRational, GrlexGreater> acc;
  for (const auto& ta : terms_) {
    for (const auto& tb : o.terms_) {
      Monomial m = ta.mono * tb.mono;
      GaussianRational c = ta.coeff * tb.coeff;
      auto [it, inserted] = acc.emplace(std::move(m), c);
      if (!inserted) it->second = it->second + c;
    }
  }
  Polynomial p;
  for (auto& [m, c] : acc)
    if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::operator*(const GaussianRational& c) const {
  if (c.is_zero()) return {};
  Polynomial p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono, t.coeff * c});
  return p;
}

Polynomial Polynomial::mul_monomial(const Monomial& m, const GaussianRational& c) const {
  if (c.is_zero()) return {};
  Polynomial p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
  // multiplying by a fixed monomial preserves the grlex order of terms
  return p;
}

Polynomial Polynomial::derivative(SymbolId v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    std::uint32_t e = t.mono.exponent(v);
    if (e == 0) continue;
    Monomial m;
    for (const auto& [s, se] : t.mono.exponents()) {
      std::uint32_t ne = (s == v) ? se - 1 : se;
      if (ne > 0) m = m * Monomial::variable(s, ne);
    }
    out.push_back({m, t.coeff * GaussianRational(static_cast<long>(e))});
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::conjugate_coefficients() const {
  Polynomial p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono, t.coeff.conjugate()});
  return p;
}

void Polynomial::collect_symbols(std::vector<SymbolId>& out) const {
  for (const auto& t : terms_)
    for (const auto& [v, e] : t.mono.exponents()) out.push_back(v);
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return Monomial::one();
  Monomial g = terms_[0].mono;
  for (std::size_t i = 1; i < terms_.size() && !g.is_one(); ++i)
    g = Monomial::gcd(g, terms_[i].mono);
  return g;
}

Polynomial Polynomial::divide_by_monomial(const Monomial& m) const {
  if (m.is_one()) return *this;
  Polynomial p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({m.quotient_of(t.mono), t.coeff});
  return p;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].coeff == o.terms_[i].coeff) || !(terms_[i].mono == o.terms_[i].mono))
      return false;
  return true;
}

void RelationSet::add_vanishing(const Polynomial& p) {
  if (p.is_zero()) fail(ErrorKind::BadRelation, "relation is identically zero");
  if (p.is_constant()) fail(ErrorKind::BadRelation, "relation forces a nonzero constant to vanish");
  const Term& lead = p.leading();
  Polynomial rest = p - Polynomial::from_terms({lead});
  add_rule(lead.mono, (-rest) * lead.coeff.inverse());
}

void RelationSet::add_rule(Monomial lhs, Polynomial rhs) {
  for (const auto& t : rhs.terms()) {
    if (Monomial::cmp(t.mono, lhs) >= 0)
      fail(ErrorKind::BadRelation,
           "rewrite rule is not strictly decreasing in the graded-lex order");
  }
  rules_.emplace_back(std::move(lhs), std::move(rhs));
}

Polynomial RelationSet::reduce(Polynomial p, std::int64_t budget) const {
  if (rules_.empty()) return p;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& t : p.terms()) {
      for (const auto& [lhs, rhs] : rules_) {
        if (!lhs.divides(t.mono)) continue;
        if (--budget < 0)
          fail(ErrorKind::NonTerminatingReduction, "relation reduction budget exhausted");
        Monomial q = lhs.quotient_of(t.mono);
        // p := p - c*q*lhs + c*q*rhs
        p = p - Polynomial::from_terms({{t.mono, t.coeff}}) + rhs.mul_monomial(q, t.coeff);
        changed = true;
        break;
      }
      if (changed) break;
    }
  }
  return p;
}

}  // namespace flagcurv
