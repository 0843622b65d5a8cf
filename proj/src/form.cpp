#include "flagcurv/form.hpp"

#include <algorithm>
#include <bit>

#include "flagcurv/errors.hpp"

namespace flagcurv {

namespace {
void require_same_frame(const Form& a, const Form& b) {
  if (a.frame().get() != b.frame().get())
    fail(ErrorKind::FrameMismatch, "forms live on different frames");
}
}  // namespace

Form Form::scalar(FramePtr frame, Scalar s) {
  Form f(std::move(frame), 0);
  f.set_coefficient(0u, std::move(s));
  return f;
}

Form Form::basis(const FramePtr& frame, const std::string& name) {
  int idx = frame->basis_index(name);
  if (idx < 0) fail(ErrorKind::UndeclaredName, "unknown basis form '" + name + "'");
  Form f(frame, 1);
  f.set_coefficient(1u << idx, Scalar::one());
  return f;
}

void Form::set_coefficient(std::uint32_t mask, Scalar s) {
  if (std::popcount(mask) != degree_)
    fail(ErrorKind::DegreeMismatch, "multi-index length does not match form degree");
  if (s.is_syntactic_zero())
    coeffs_.erase(mask);
  else
    coeffs_[mask] = std::move(s);
}

Scalar Form::coefficient_mask(std::uint32_t mask) const {
  auto it = coeffs_.find(mask);
  return it == coeffs_.end() ? Scalar::zero() : it->second;
}

Scalar Form::coefficient(const std::vector<std::string>& names) const {
  if (static_cast<int>(names.size()) != degree_)
    fail(ErrorKind::DegreeMismatch, "multi-index length does not match form degree");
  std::uint32_t mask = 0;
  int last = -1;
  for (const auto& n : names) {
    int idx = frame_->basis_index(n);
    if (idx < 0) fail(ErrorKind::UndeclaredName, "unknown basis form '" + n + "'");
    if (idx <= last)
      fail(ErrorKind::DegreeMismatch, "multi-index must be strictly increasing");
    last = idx;
    mask |= 1u << idx;
  }
  return coefficient_mask(mask);
}

Form Form::operator+(const Form& o) const {
  if (empty()) return o;
  if (o.empty()) return *this;
  require_same_frame(*this, o);
  if (degree_ != o.degree_)
    fail(ErrorKind::DegreeMismatch, "adding forms of different degree");
  Form r = *this;
  for (const auto& [mask, s] : o.coeffs_) {
    auto it = r.coeffs_.find(mask);
    if (it == r.coeffs_.end()) {
      r.coeffs_.emplace(mask, s);
    } else {
      Scalar sum = it->second + s;
      if (sum.is_syntactic_zero())
        r.coeffs_.erase(it);
      else
        it->second = std::move(sum);
    }
  }
  return r;
}

Form Form::operator-() const {
  Form r = *this;
  for (auto& [mask, s] : r.coeffs_) s = -s;
  return r;
}

Form Form::operator-(const Form& o) const { return *this + (-o); }

Form Form::operator*(const Scalar& s) const {
  if (s.is_syntactic_zero()) return Form(frame_, degree_);
  Form r(frame_, degree_);
  for (const auto& [mask, c] : coeffs_) {
    Scalar p = c * s;
    if (!p.is_syntactic_zero()) r.coeffs_.emplace(mask, std::move(p));
  }
  return r;
}

bool Form::is_zero(const RelationSet& rel) const {
  for (const auto& [mask, s] : coeffs_)
    if (!s.is_zero(rel)) return false;
  return true;
}

bool Form::is_zero() const {
  if (coeffs_.empty()) return true;
  return is_zero(frame_->relations());
}

std::vector<SymbolId> Form::symbols() const {
  std::vector<SymbolId> out;
  for (const auto& [mask, s] : coeffs_) s.collect_symbols(out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int wedge_sign(std::uint32_t left, std::uint32_t right) {
  int inversions = 0;
  std::uint32_t r = right;
  while (r) {
    std::uint32_t low = r & (~r + 1);
    int bit = std::countr_zero(low);
    inversions += std::popcount(left >> (bit + 1));
    r ^= low;
  }
  return (inversions & 1) ? -1 : 1;
}

Form wedge(const Form& a, const Form& b) {
  if (a.empty() || b.empty()) {
    FramePtr fr = a.frame() ? a.frame() : b.frame();
    return Form(fr, a.degree() + b.degree());
  }
  require_same_frame(a, b);
  Form r(a.frame(), a.degree() + b.degree());
  if (a.frame() && r.degree() > a.frame()->dimension()) return r;
  for (const auto& [ma, ca] : a.coefficients()) {
    for (const auto& [mb, cb] : b.coefficients()) {
      if (ma & mb) continue;
      Scalar c = ca * cb;
      if (c.is_syntactic_zero()) continue;
      if (wedge_sign(ma, mb) < 0) c = -c;
      std::uint32_t m = ma | mb;
      Scalar prev = r.coefficient_mask(m);
      r.set_coefficient(m, prev + c);
    }
  }
  return r;
}

Form wedge(const Form& a, const Form& b, const Form& c) { return wedge(wedge(a, b), c); }

Form d_scalar(const FramePtr& frame, const Scalar& s) {
  Form out(frame, 1);
  std::vector<SymbolId> vars;
  s.collect_symbols(vars);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  for (SymbolId v : vars) {
    const Form* dv = frame->coordinate_differential(v);
    if (dv == nullptr || dv->empty()) continue;
    Scalar partial = s.derivative(v);
    if (partial.is_syntactic_zero()) continue;
    out = out + (*dv) * partial;
  }
  return out;
}

Form exterior_derivative(const Form& a) {
  if (a.empty()) return Form(a.frame(), a.degree() + 1);
  const FramePtr& frame = a.frame();
  Form out(frame, a.degree() + 1);
  for (const auto& [mask, coeff] : a.coefficients()) {
    Form base(frame, a.degree());
    base.set_coefficient(mask, Scalar::one());
    out = out + wedge(d_scalar(frame, coeff), base);
    // graded Leibniz across the wedge factors of the multi-index
    std::uint32_t rest = mask;
    int position = 0;
    while (rest) {
      std::uint32_t low = rest & (~rest + 1);
      int bit = std::countr_zero(low);
      const Form& rule = frame->d_rule(bit);
      if (!rule.empty()) {
        std::uint32_t before = mask & (low - 1);
        std::uint32_t after = mask & ~(low | (low - 1));
        Form pre(frame, std::popcount(before));
        pre.set_coefficient(before, (position % 2 == 0) ? coeff : -coeff);
        Form post(frame, std::popcount(after));
        post.set_coefficient(after, Scalar::one());
        out = out + wedge(wedge(pre, rule), post);
      }
      rest ^= low;
      ++position;
    }
  }
  return out;
}

Form pullback_section(const Form& a, const std::set<std::string>& killed,
                      const std::map<SymbolId, Scalar>& fixed) {
  const FramePtr& frame = a.frame();
  std::uint32_t killed_mask = 0;
  for (const auto& name : killed) {
    int idx = frame->basis_index(name);
    if (idx < 0) fail(ErrorKind::UndeclaredName, "unknown basis form '" + name + "'");
    killed_mask |= 1u << idx;
  }
  Form r(frame, a.degree());
  for (const auto& [mask, coeff] : a.coefficients()) {
    if (mask & killed_mask) continue;
    Scalar c = fixed.empty() ? coeff : coeff.substitute(fixed);
    if (!c.is_syntactic_zero()) r.set_coefficient(mask, std::move(c));
  }
  return r;
}

Scalar proportional_coefficient(const Form& target, const Form& reference,
                                const RelationSet& rel, const std::string& context) {
  for (const auto& [mask, c] : reference.coefficients()) {
    if (c.is_zero(rel)) continue;
    Scalar q = target.coefficient_mask(mask) / c;
    Form residual = target - reference * q;
    if (!residual.is_zero(rel))
      fail(ErrorKind::ShapeViolation,
           context + ": form is not a scalar multiple of the expected monomial");
    return q;
  }
  if (!target.is_zero(rel))
    fail(ErrorKind::ShapeViolation, context + ": nonzero form against a vanishing reference");
  return Scalar::zero();
}

}  // namespace flagcurv
