#include "flagcurv/printer.hpp"

#include <sstream>

namespace flagcurv {

namespace {

std::string rational_str(const mpq_class& q) { return q.get_str(); }

// coefficient rendered for use in front of '*monomial'; pure_one/minus_one let
// the caller elide it
std::string coeff_str(const GaussianRational& c, bool* pure_one, bool* pure_minus_one) {
  *pure_one = false;
  *pure_minus_one = false;
  if (c.im() == 0) {
    if (c.re() == 1) { *pure_one = true; return "1"; }
    if (c.re() == -1) { *pure_minus_one = true; return "-1"; }
    return rational_str(c.re());
  }
  if (c.re() == 0) {
    if (c.im() == 1) return "i";
    if (c.im() == -1) return "-i";
    return rational_str(c.im()) + "*i";
  }
  std::string im_part;
  if (c.im() == 1) im_part = "+i";
  else if (c.im() == -1) im_part = "-i";
  else if (c.im() > 0) im_part = "+" + rational_str(c.im()) + "*i";
  else im_part = rational_str(c.im()) + "*i";
  return "(" + rational_str(c.re()) + im_part + ")";
}

std::string monomial_str(const Monomial& m) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [v, e] : m.exponents()) {
    if (!first) out << "*";
    first = false;
    out << sym_name(v);
    if (e > 1) out << "^" << e;
  }
  return out.str();
}

std::string term_str(const Term& t, bool leading) {
  bool one = false, minus_one = false;
  std::string c = coeff_str(t.coeff, &one, &minus_one);
  std::string m = t.mono.is_one() ? "" : monomial_str(t.mono);
  std::string body;
  if (m.empty()) body = c;
  else if (one) body = m;
  else if (minus_one) body = "-" + m;
  else body = c + "*" + m;
  if (!leading && body[0] != '-') return "+" + body;
  return body;
}

bool needs_parens_as_factor(const Polynomial& p) { return p.terms().size() > 1; }

// denominator rendered after '/': single symbol powers pass bare, everything
// else in parentheses so the string reparses with the usual precedence
std::string den_str(const Polynomial& d) {
  if (d.terms().size() == 1) {
    const Term& t = d.terms()[0];
    if (t.coeff.is_one() && t.mono.exponents().size() == 1) return monomial_str(t.mono);
  }
  return "(" + to_string(d) + ")";
}

}  // namespace

std::string to_string(const GaussianRational& c) {
  bool one = false, minus_one = false;
  std::string s = coeff_str(c, &one, &minus_one);
  return s;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool leading = true;
  for (const auto& t : p.terms()) {
    out << term_str(t, leading);
    leading = false;
  }
  return out.str();
}

std::string to_string(const Scalar& s, const RelationSet& rel) {
  Polynomial num = rel.empty() ? s.num() : rel.reduce(s.num());
  Polynomial den = rel.empty() ? s.den() : rel.reduce(s.den());
  Scalar reduced(num, den);  // re-normalizes content and the denominator lead
  if (reduced.num().is_zero()) return "0";
  if (reduced.den() == Polynomial::one()) return to_string(reduced.num());
  std::string num_part = reduced.num().terms().size() == 1
                             ? to_string(reduced.num())
                             : "(" + to_string(reduced.num()) + ")";
  return num_part + "/" + den_str(reduced.den());
}

std::string to_string(const Form& f) {
  if (f.empty()) return "0";
  const RelationSet& rel = f.frame()->relations();
  std::ostringstream out;
  bool leading = true;
  for (const auto& [mask, coeff] : f.coefficients()) {
    std::string c = to_string(coeff, rel);
    if (c == "0") continue;
    std::string body;
    if (f.degree() == 0) {
      body = c;
    } else {
      std::string wedge_part;
      std::uint32_t rest = mask;
      while (rest) {
        std::uint32_t low = rest & (~rest + 1);
        int bit = std::countr_zero(low);
        if (!wedge_part.empty()) wedge_part += " ^ ";
        wedge_part += f.frame()->basis_name(bit);
        rest ^= low;
      }
      if (c == "1") body = wedge_part;
      else if (c == "-1") body = "-" + wedge_part;
      else {
        Scalar red(rel.empty() ? coeff.num() : rel.reduce(coeff.num()),
                   rel.empty() ? coeff.den() : rel.reduce(coeff.den()));
        bool parens = needs_parens_as_factor(red.num()) && c[0] != '(';
        if (parens) body = "(" + c + ")*" + wedge_part;
        else body = c + "*" + wedge_part;
      }
    }
    if (!leading && body[0] != '-') out << "+";
    out << body;
    leading = false;
  }
  std::string s = out.str();
  return s.empty() ? "0" : s;
}

}  // namespace flagcurv
