#include "flagcurv/reduction.hpp"

#include "flagcurv/errors.hpp"

namespace flagcurv {

namespace {

// The wedge of single-monomial 1-forms; returns its unique (mask, coeff).
std::pair<std::uint32_t, Scalar> single_term(const Form& f, const std::string& context) {
  if (f.coefficients().size() != 1)
    fail(ErrorKind::ShapeViolation, context + ": expected a single-monomial form");
  const auto& [mask, c] = *f.coefficients().begin();
  return {mask, c};
}

// Decomposes f over the given wedge monomials (each a single-monomial form).
// Returns the coefficients; the residual must vanish or ShapeViolation.
std::vector<Scalar> decompose(const Form& f, const std::vector<Form>& monomials,
                              const RelationSet& rel, const std::string& context) {
  std::vector<Scalar> out;
  Form residual = f;
  for (const auto& m : monomials) {
    auto [mask, c] = single_term(m, context);
    Scalar q = f.coefficient_mask(mask) / c;
    out.push_back(q);
    residual = residual - m * q;
  }
  if (!residual.is_zero(rel))
    fail(ErrorKind::ShapeViolation, context + ": residual outside the declared monomials");
  return out;
}

}  // namespace

PseudoFlagStructure::PseudoFlagStructure(FramePtr frame, std::string theta_name,
                                         std::string z1_name, std::string z2_name,
                                         SymbolId scale_sym, std::string lambda_name)
    : frame_(std::move(frame)), theta_(std::move(theta_name)), z1_(std::move(z1_name)),
      z2_(std::move(z2_name)), lambda_(std::move(lambda_name)), scale_(scale_sym) {
  for (const std::string* n : {&theta_, &z1_, &z2_, &lambda_})
    if (frame_->basis_index(*n) < 0)
      fail(ErrorKind::UndeclaredName, "pseudo-flag designates unknown basis form '" + *n + "'");
  std::set<std::string> distinct{theta_, z1_, z2_, lambda_};
  if (distinct.size() != 4)
    fail(ErrorKind::NotAPseudoFlag, "theta, Z1, Z2 and the fiber direction must be distinct");
  ConsistencyReport cons = check_frame_consistency(frame_);
  if (!cons.usable) {
    std::string bad;
    for (const auto& e : cons.entries)
      if (!e.zero) bad += (bad.empty() ? "" : ", ") + e.name;
    fail(ErrorKind::NotAPseudoFlag, "frame fails d^2 = 0 on: " + bad);
  }
  const Form* da = frame_->coordinate_differential(scale_);
  if (da == nullptr)
    fail(ErrorKind::NotAPseudoFlag, "scale symbol '" + sym_name(scale_) + "' is not a fiber coordinate");
  Form expected = lambda_form() * scale();
  if (!(*da - expected).is_zero(frame_->relations()))
    fail(ErrorKind::NotAPseudoFlag, "scale coordinate must satisfy da = a * " + lambda_);
  Form dtheta = frame_->d_rule(frame_->basis_index(theta_));
  if (!(dtheta - wedge(z1(), z2())).is_zero(frame_->relations()))
    fail(ErrorKind::NotAPseudoFlag, "d(theta) != Z1 ^ Z2");
  if (wedge(dtheta, theta()).is_zero(frame_->relations()))
    fail(ErrorKind::DegenerateContact, "d(theta) ^ theta vanishes: theta is not a contact form");
}

Form PseudoFlagStructure::theta() const { return Form::basis(frame_, theta_); }
Form PseudoFlagStructure::z1() const { return Form::basis(frame_, z1_); }
Form PseudoFlagStructure::z2() const { return Form::basis(frame_, z2_); }
Form PseudoFlagStructure::lambda_form() const { return Form::basis(frame_, lambda_); }
Form PseudoFlagStructure::theta1() const { return z1() * scale(); }
Form PseudoFlagStructure::theta2() const { return z2() * scale().inverse(); }

Scalar PseudoFlagStructure::component(const Form& f, const std::vector<Form>& basis_wedge) const {
  Form w = basis_wedge.front();
  for (std::size_t i = 1; i < basis_wedge.size(); ++i) w = wedge(w, basis_wedge[i]);
  auto [mask, c] = single_term(w, "component");
  return f.coefficient_mask(mask) / c;
}

ReductionOutput reduce_pseudo_flag(const PseudoFlagStructure& p) {
  const FramePtr& frame = p.frame();
  const RelationSet& rel = frame->relations();
  ReductionOutput r;

  Form th = p.theta(), Z1 = p.z1(), Z2 = p.z2(), lam = p.lambda_form();
  Form th1 = p.theta1(), th2 = p.theta2();
  Scalar a = p.scale();

  // dZ^i = z_12 Z1^Z2 + z_10 Z1^theta + z_20 Z2^theta, nothing else
  std::vector<Form> z_monomials = {wedge(Z1, Z2), wedge(Z1, th), wedge(Z2, th)};
  auto expand_dz = [&](const Form& one_form, const char* name) {
    auto [mask, c] = single_term(one_form, "dZ expansion");
    (void)c;
    int idx = std::countr_zero(mask);
    Form rule = frame->d_rule(idx);
    try {
      return decompose(rule, z_monomials, rel, std::string("d") + name);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ShapeViolation)
        fail(ErrorKind::NotAPseudoFlag,
             std::string("d") + name + " has terms outside Z1^Z2, Z1^theta, Z2^theta");
      throw;
    }
  };
  auto zc1 = expand_dz(Z1, "Z1");
  auto zc2 = expand_dz(Z2, "Z2");
  r.z112 = zc1[0]; r.z110 = zc1[1]; r.z120 = zc1[2];
  r.z212 = zc2[0]; r.z210 = zc2[1]; r.z220 = zc2[2];

  // candidate, then the unique shift killing the theta1 component of tau1
  r.theta11 = -lam + Z1 * r.z212 + Z2 * r.z112;
  r.tau1 = th1 * (-r.z110) + th2 * (-(r.z120 * a * a));
  r.tau2 = th1 * (-(r.z210 / (a * a))) + th2 * (-r.z220);

  Scalar tau11 = p.component(r.tau1, {th1});
  Scalar shift = -tau11;
  r.theta11 = r.theta11 + th * shift;
  r.tau1 = r.tau1 + th1 * shift;
  r.tau2 = r.tau2 - th2 * shift;

  Scalar tau22 = p.component(r.tau2, {th2});
  if (!tau22.is_zero(rel))
    fail(ErrorKind::NotAPseudoFlag,
         "normalization failed: tau1 and tau2 trace does not cancel (z110 + z220 != 0)");

  Form e14 = exterior_derivative(th1) - wedge(th1, r.theta11) - wedge(th, r.tau1);
  Form e15 = exterior_derivative(th2) + wedge(th2, r.theta11) - wedge(th, r.tau2);
  if (!e14.is_zero(rel) || !e15.is_zero(rel))
    fail(ErrorKind::CrossCheckMismatch, "reduction postcondition failed on the tau equations");

  r.tau21 = p.component(r.tau1, {th2});
  r.tau12 = p.component(r.tau2, {th1});
  return r;
}

CurvatureReport curvature_coefficients(const PseudoFlagStructure& p, const ReductionOutput& r) {
  const RelationSet& rel = p.frame()->relations();
  Form th = p.theta(), th1 = p.theta1(), th2 = p.theta2();
  CurvatureReport rep;
  rep.tau21 = r.tau21;
  rep.tau12 = r.tau12;

  std::vector<Form> two_basis = {wedge(th1, th2), wedge(th1, th), wedge(th2, th)};
  auto dth11 = decompose(exterior_derivative(r.theta11), two_basis, rel, "d(theta11)");
  rep.R = dth11[0]; rep.W1 = dth11[1]; rep.W2 = dth11[2];

  std::vector<Form> tau_basis = {wedge(th1, th2), wedge(th, th1), wedge(th, th2)};
  Form lhs1 = exterior_derivative(r.tau1) - wedge(r.tau1, r.theta11);
  auto c1 = decompose(lhs1, tau_basis, rel, "d(tau1) equation");
  rep.S11 = c1[1]; rep.S21 = c1[2];
  if (!(c1[0] + rep.W2).is_zero(rel))
    fail(ErrorKind::CrossCheckMismatch, "theta1^theta2 slot of the tau1 equation is not -W2");

  Form lhs2 = exterior_derivative(r.tau2) + wedge(r.tau2, r.theta11);
  auto c2 = decompose(lhs2, tau_basis, rel, "d(tau2) equation");
  rep.S12 = c2[1]; rep.S22 = c2[2];
  if (!(c2[0] + rep.W1).is_zero(rel))
    fail(ErrorKind::CrossCheckMismatch, "theta1^theta2 slot of the tau2 equation is not -W1");

  if (!rep.S11.equals(rep.S22, rel) || !rep.S11.equals(r.tau21 * r.tau12, rel))
    fail(ErrorKind::CrossCheckMismatch, "S11 = S22 = tau21*tau12 violated");

  const FramePtr& frame = p.frame();
  std::vector<Form> one_basis = {th, th1, th2};
  auto dR = decompose(d_scalar(frame, rep.R), one_basis, rel, "dR");
  rep.R0 = dR[0]; rep.R1 = dR[1]; rep.R2 = dR[2];

  auto dW1 = decompose(d_scalar(frame, rep.W1) - r.theta11 * rep.W1, one_basis, rel, "dW1 expansion");
  rep.W01 = dW1[0]; rep.W11 = dW1[1]; rep.W21 = dW1[2];
  auto dW2 = decompose(d_scalar(frame, rep.W2) + r.theta11 * rep.W2, one_basis, rel, "dW2 expansion");
  rep.W02 = dW2[0]; rep.W12 = dW2[1]; rep.W22 = dW2[2];

  if (!rep.R0.equals(rep.W21 - rep.W12, rel))
    fail(ErrorKind::CrossCheckMismatch, "R0 = W21 - W12 violated");

  auto dR0 = decompose(d_scalar(frame, rep.R0), one_basis, rel, "dR0");
  rep.R00 = dR0[0];
  auto dR1 = decompose(d_scalar(frame, rep.R1) - r.theta11 * rep.R1 + th * (rep.R2 * r.tau12) -
                           th2 * (rep.R0 * Scalar::fraction(1, 2)),
                       one_basis, rel, "dR1 expansion");
  rep.R01 = dR1[0]; rep.R11 = dR1[1]; rep.R12 = dR1[2];
  auto dR2 = decompose(d_scalar(frame, rep.R2) + r.theta11 * rep.R2 + th * (rep.R1 * r.tau21) +
                           th1 * (rep.R0 * Scalar::fraction(1, 2)),
                       one_basis, rel, "dR2 expansion");
  rep.R02 = dR2[0]; rep.R21 = dR2[1]; rep.R22 = dR2[2];
  if (!rep.R01.equals(dR0[1], rel) || !rep.R02.equals(dR0[2], rel))
    fail(ErrorKind::CrossCheckMismatch, "dR0 expansion disagrees with the dR1/dR2 slots");
  return rep;
}

ConnectionForms embed_to_connection(const PseudoFlagStructure& p, const ReductionOutput& r,
                                    CurvatureReport& rep) {
  const RelationSet& rel = p.frame()->relations();
  Form th = p.theta(), th1 = p.theta1(), th2 = p.theta2();
  Scalar quarter = Scalar::fraction(1, 4);
  Scalar two_thirds = Scalar::fraction(2, 3);

  rep.c = -(rep.R * quarter);
  rep.E2 = two_thirds * (rep.W1 - rep.R1 * quarter);
  rep.E1 = two_thirds * (rep.W2 - rep.R2 * quarter);

  Scalar third = Scalar::fraction(1, 3);
  Scalar sixteenth = Scalar::fraction(1, 16);
  Scalar sixth = Scalar::fraction(1, 6);
  Scalar g1 = Scalar::integer(-2) *
              (rep.S11 - rep.R0 * third + rep.R * rep.R * sixteenth - two_thirds * rep.W12 +
               rep.R21 * sixth);
  Scalar g2 = Scalar::integer(-2) *
              (rep.S22 + rep.R0 * third + rep.R * rep.R * sixteenth - two_thirds * rep.W21 +
               rep.R12 * sixth);
  if (!g1.equals(g2, rel))
    fail(ErrorKind::CrossCheckMismatch, "the two closed-form expressions for G disagree");
  rep.G = g1;

  ConnectionForms c;
  c.omega = th;
  c.omega1 = th1;
  c.omega2 = th2;
  c.phi = Form(p.frame(), 1);
  c.omega11 = r.theta11 + th * rep.c;
  c.phi1 = th1 * rep.c + th * rep.E1 + r.tau1;
  c.phi2 = th2 * (-rep.c) + th * rep.E2 + r.tau2;
  c.psi = th1 * rep.E2 - th2 * rep.E1 + th * rep.G;
  return c;
}

ResidualReport verify_structure_equations(const PseudoFlagStructure& p, const ReductionOutput& r,
                                          const ConnectionForms& c) {
  (void)r;
  const RelationSet& rel = p.frame()->relations();
  Form th = c.omega, th1 = c.omega1, th2 = c.omega2;
  ResidualReport rep;
  auto push_zero = [&](const std::string& name, Form res) {
    bool ok = res.is_zero(rel);
    rep.entries.push_back({name, std::move(res), ok});
    rep.all_pass = rep.all_pass && ok;
  };
  auto push_shape = [&](const std::string& name, Form res, const std::vector<Form>& allowed) {
    Form probe = res;
    bool ok = true;
    for (const auto& m : allowed) {
      auto [mask, cm] = *m.coefficients().begin();
      probe = probe - m * (res.coefficient_mask(mask) / cm);
    }
    ok = probe.is_zero(rel);
    rep.entries.push_back({name, std::move(res), ok});
    rep.all_pass = rep.all_pass && ok;
  };

  Scalar half = Scalar::fraction(1, 2);
  Scalar threehalf = Scalar::fraction(3, 2);
  push_zero("Eq. 22", exterior_derivative(th) - wedge(th1, th2));
  push_zero("Eq. 23", exterior_derivative(th1) - wedge(th1, c.omega11) - wedge(th, c.phi1));
  push_zero("Eq. 24", exterior_derivative(th2) + wedge(th2, c.omega11) - wedge(th, c.phi2));
  push_zero("Eq. 25", wedge(th1, c.phi2) - wedge(th2, c.phi1) + wedge(th, c.psi));
  push_zero("Eq. 26", exterior_derivative(c.omega11) - wedge(th1, c.phi2) * threehalf -
                          wedge(th2, c.phi1) * threehalf);
  push_shape("Eq. 27",
             exterior_derivative(c.phi1) - wedge(c.phi1, c.omega11) - wedge(th1, c.psi) * half,
             {wedge(th, th2)});
  push_shape("Eq. 28",
             exterior_derivative(c.phi2) + wedge(c.phi2, c.omega11) - wedge(th2, c.psi) * half,
             {wedge(th, th1)});
  push_shape("Eq. 29", exterior_derivative(c.psi) - wedge(c.phi1, c.phi2) * Scalar::integer(2),
             {wedge(th1, th), wedge(th2, th)});
  return rep;
}

void curvature_invariants(const PseudoFlagStructure& p, const ReductionOutput& r,
                          const ConnectionForms& c, CurvatureReport& rep) {
  const RelationSet& rel = p.frame()->relations();
  Form th = c.omega, th1 = c.omega1, th2 = c.omega2;
  Scalar half = Scalar::fraction(1, 2);

  // route (i): structure-equation extraction
  Form L27 = exterior_derivative(c.phi1) - wedge(c.phi1, c.omega11) - wedge(th1, c.psi) * half;
  Scalar q1_i = decompose(L27, {wedge(th, th2)}, rel, "Eq. 27 extraction")[0];
  Form L28 = exterior_derivative(c.phi2) + wedge(c.phi2, c.omega11) - wedge(th2, c.psi) * half;
  Scalar q2_i = decompose(L28, {wedge(th, th1)}, rel, "Eq. 28 extraction")[0];
  Form L29 = exterior_derivative(c.psi) - wedge(c.phi1, c.phi2) * Scalar::integer(2);
  auto u_i = decompose(L29, {wedge(th1, th), wedge(th2, th)}, rel, "Eq. 29 extraction");

  // route (ii): matrix curvature
  CurvatureComponents mat = extract_components(curvature(assemble_pi(c)), c);

  // route (iii): closed forms
  Scalar sixth = Scalar::fraction(1, 6);
  Scalar q1_cf = rep.S21 - rep.R * r.tau21 * half - Scalar::fraction(2, 3) * rep.W22 +
                 rep.R22 * sixth;
  Scalar q2_cf = rep.S12 + rep.R * r.tau12 * half - Scalar::fraction(2, 3) * rep.W11 +
                 rep.R11 * sixth;

  auto agree = [&](const Scalar& x, const Scalar& y, const char* what) {
    if (!x.equals(y, rel))
      fail(ErrorKind::CrossCheckMismatch, std::string("curvature invariant routes disagree: ") + what);
  };
  agree(q1_i, mat.Q1, "Q1 (equations vs matrix)");
  agree(q1_i, q1_cf, "Q1 (equations vs closed form)");
  agree(q2_i, mat.Q2, "Q2 (equations vs matrix)");
  agree(q2_i, q2_cf, "Q2 (equations vs closed form)");
  agree(u_i[0], mat.U1, "U1 (equations vs matrix)");
  agree(u_i[1], mat.U2, "U2 (equations vs matrix)");

  rep.Q1 = q1_i;
  rep.Q2 = q2_i;
  rep.U1 = u_i[0];
  rep.U2 = u_i[1];
  rep.flat = rep.Q1.is_zero(rel) && rep.Q2.is_zero(rel) && rep.U1.is_zero(rel) &&
             rep.U2.is_zero(rel);
}

void bianchi_checks(const PseudoFlagStructure& p, const ConnectionForms& c, CurvatureReport& rep) {
  const FramePtr& frame = p.frame();
  const RelationSet& rel = frame->relations();
  Form th = c.omega, th1 = c.omega1, th2 = c.omega2;
  std::vector<Form> one_basis = {th, th1, th2};
  Scalar two = Scalar::integer(2);
  Scalar fivehalf = Scalar::fraction(5, 2);

  Form bl1 = d_scalar(frame, rep.Q1) + c.omega11 * (two * rep.Q1) - c.phi * (two * rep.Q1);
  auto v1 = decompose(bl1, one_basis, rel, "dQ1 identity");
  rep.S1 = v1[0];
  if (!v1[1].equals(rep.U2 * Scalar::fraction(-1, 2), rel))
    fail(ErrorKind::CrossCheckMismatch, "U2 slot of the dQ1 identity disagrees with Eq. 29");
  rep.T1 = v1[2];

  Form bl2 = d_scalar(frame, rep.Q2) - c.omega11 * (two * rep.Q2) - c.phi * (two * rep.Q2);
  auto v2 = decompose(bl2, one_basis, rel, "dQ2 identity");
  rep.S2 = v2[0];
  rep.T2 = v2[1];
  if (!v2[2].equals(rep.U1 * Scalar::fraction(-1, 2), rel))
    fail(ErrorKind::CrossCheckMismatch, "U1 slot of the dQ2 identity disagrees with Eq. 29");

  Form bl3 = d_scalar(frame, rep.U1) - c.phi * (fivehalf * rep.U1) - c.omega11 * rep.U1 +
             c.phi1 * (two * rep.Q2);
  auto v3 = decompose(bl3, one_basis, rel, "dU1 identity");
  rep.A = v3[0]; rep.B = v3[1]; rep.C = v3[2];

  Form bl4 = d_scalar(frame, rep.U2) - c.phi * (fivehalf * rep.U2) + c.omega11 * rep.U2 -
             c.phi2 * (two * rep.Q1);
  auto v4 = decompose(bl4, one_basis, rel, "dU2 identity");
  rep.D = v4[0]; rep.E = v4[2];
  if (!v4[1].equals(rep.C, rel))
    fail(ErrorKind::CrossCheckMismatch, "shared C coefficient differs between the dU1 and dU2 identities");
  rep.has_bianchi = true;
}

Form invariant_integrand(const PseudoFlagStructure& p, const ReductionOutput& r,
                         const ConnectionForms& c, CurvatureReport& rep) {
  const RelationSet& rel = p.frame()->relations();
  Form th = c.omega, th1 = c.omega1, th2 = c.omega2;
  Scalar half = Scalar::fraction(1, 2);
  Scalar coeff = rep.G * half + rep.R * rep.R * Scalar::fraction(1, 16) - r.tau21 * r.tau12;
  Form i72 = wedge(th, th1, th2) * coeff +
             wedge(r.theta11, wedge(th, th1) * rep.E2 + wedge(th, th2) * rep.E1 -
                                  wedge(th1, th2) * (rep.R * half));

  Tc2Result t = tc2(assemble_pi(c));
  if (!t.tr_curvature_zero)
    fail(ErrorKind::CrossCheckMismatch, "tr(Pi ^ pi) does not vanish");
  if (!t.closed)
    fail(ErrorKind::CrossCheckMismatch, "tr(pi ^ pi ^ pi) is not closed");
  Form i_tc2 = t.t * Scalar::integer(8);
  if (!(i72 - i_tc2).is_zero(rel))
    fail(ErrorKind::CrossCheckMismatch,
         "section formula and transgression route disagree on the integrand");
  rep.integrand = i72;
  return i72;
}

Scalar ConjugationSpec::apply(const Scalar& s) const {
  return s.conjugate_coefficients().substitute(symbol_images);
}

Form ConjugationSpec::apply(const Form& f) const {
  if (f.empty()) return f;
  const FramePtr& frame = f.frame();
  Form out(frame, f.degree());
  for (const auto& [mask, coeff] : f.coefficients()) {
    Form term = Form::scalar(frame, apply(coeff));
    std::uint32_t rest = mask;
    while (rest) {
      std::uint32_t low = rest & (~rest + 1);
      int bit = std::countr_zero(low);
      auto it = basis_images.find(frame->basis_name(bit));
      if (it == basis_images.end())
        fail(ErrorKind::IllFormedInvolution,
             "no conjugation image for basis form '" + frame->basis_name(bit) + "'");
      term = wedge(term, it->second);
      rest ^= low;
    }
    out = out + term;
  }
  return out;
}

void ConjugationSpec::validate(const FramePtr& frame) const {
  const RelationSet& rel = frame->relations();
  // involution up to sign on the frame; on plain constants it must be exact
  for (int i = 0; i < frame->dimension(); ++i) {
    Form b = Form::basis(frame, frame->basis_name(i));
    Form twice = apply(apply(b));
    if (!(twice - b).is_zero(rel) && !(twice + b).is_zero(rel))
      fail(ErrorKind::IllFormedInvolution,
           "conjugation applied twice does not fix basis form '" + frame->basis_name(i) + "'");
  }
  for (const auto& [v, image] : symbol_images) {
    Scalar twice = apply(apply(Scalar::variable(v)));
    bool plus = twice.equals(Scalar::variable(v), rel);
    bool minus = frame->is_fiber_coordinate(v) &&
                 twice.equals(-Scalar::variable(v), rel);
    if (!plus && !minus)
      fail(ErrorKind::IllFormedInvolution,
           "conjugation applied twice does not fix symbol '" + sym_name(v) + "'");
  }
  // compatibility with the structural differentials
  for (int i = 0; i < frame->dimension(); ++i) {
    Form b = Form::basis(frame, frame->basis_name(i));
    Form lhs = exterior_derivative(apply(b));
    Form rhs = apply(frame->d_rule(i));
    if (!(lhs - rhs).is_zero(rel))
      fail(ErrorKind::IllFormedInvolution,
           "conjugation does not commute with d on basis form '" + frame->basis_name(i) + "'");
  }
  for (const auto& [v, rule] : frame->coordinate_differentials()) {
    auto it = symbol_images.find(v);
    if (it == symbol_images.end()) continue;
    Form lhs = d_scalar(frame, it->second);
    Form rhs = apply(rule);
    if (!(lhs - rhs).is_zero(rel))
      fail(ErrorKind::IllFormedInvolution,
           "conjugation does not commute with d on coordinate '" + sym_name(v) + "'");
  }
}

CrReport check_cr_reality(const ConnectionForms& c, const CurvatureReport& rep,
                          const ConjugationSpec& conj) {
  const FramePtr frame = c.frame();
  const RelationSet& rel = frame->relations();
  conj.validate(frame);
  CrReport out;
  Scalar iu = Scalar::i();
  Form premise = c.omega2 - conj.apply(c.omega1) * iu;
  out.premise_holds = premise.is_zero(rel);
  if (!out.premise_holds) {
    out.conditions.push_back({"premise omega2 = i conj(omega1)", premise, false});
    return out;
  }
  auto push = [&](const std::string& name, Form res) {
    bool ok = res.is_zero(rel);
    out.conditions.push_back({name, std::move(res), ok});
  };
  push("omega11 + conj(omega11)", c.omega11 + conj.apply(c.omega11));
  push("phi2 - i conj(phi1)", c.phi2 - conj.apply(c.phi1) * iu);
  push("psi - conj(psi)", c.psi - conj.apply(c.psi));
  push("Q1 - conj(Q2)", Form::scalar(frame, rep.Q1 - conj.apply(rep.Q2)));
  push("U1 + i conj(U2)", Form::scalar(frame, rep.U1 + conj.apply(rep.U2) * iu));
  out.all_pass = true;
  for (const auto& e : out.conditions) out.all_pass = out.all_pass && e.zero;
  return out;
}

}  // namespace flagcurv
