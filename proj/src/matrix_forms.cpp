#include "flagcurv/matrix_forms.hpp"

#include "flagcurv/errors.hpp"

namespace flagcurv {

MatrixForm MatrixForm::zero(FramePtr frame, int degree) {
  MatrixForm m;
  for (auto& f : m.e_) f = Form(frame, degree);
  return m;
}

MatrixForm MatrixForm::from_scalars(const FramePtr& frame, const std::array<Scalar, 9>& entries) {
  MatrixForm m;
  for (int k = 0; k < 9; ++k) m.e_[k] = Form::scalar(frame, entries[k]);
  return m;
}

MatrixForm MatrixForm::operator+(const MatrixForm& o) const {
  MatrixForm m;
  for (int k = 0; k < 9; ++k) m.e_[k] = e_[k] + o.e_[k];
  return m;
}

MatrixForm MatrixForm::operator-(const MatrixForm& o) const {
  MatrixForm m;
  for (int k = 0; k < 9; ++k) m.e_[k] = e_[k] - o.e_[k];
  return m;
}

MatrixForm MatrixForm::operator*(const Scalar& s) const {
  MatrixForm m;
  for (int k = 0; k < 9; ++k) m.e_[k] = e_[k] * s;
  return m;
}

Form MatrixForm::trace() const { return e_[0] + e_[4] + e_[8]; }

FramePtr MatrixForm::frame() const {
  for (const auto& f : e_)
    if (f.frame()) return f.frame();
  return nullptr;
}

MatrixForm mat_wedge(const MatrixForm& a, const MatrixForm& b) {
  MatrixForm m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Form acc = wedge(a.at(i, 0), b.at(0, j));
      acc = acc + wedge(a.at(i, 1), b.at(1, j));
      acc = acc + wedge(a.at(i, 2), b.at(2, j));
      m.at(i, j) = std::move(acc);
    }
  return m;
}

MatrixForm mat_d(const MatrixForm& a) {
  MatrixForm m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = exterior_derivative(a.at(i, j));
  return m;
}

Form trace_wedge(const MatrixForm& a, const MatrixForm& b) {
  Form acc;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) acc = acc + wedge(a.at(i, j), b.at(j, i));
  return acc;
}

MatrixForm assemble_pi(const ConnectionForms& c) {
  const FramePtr frame = c.frame();
  Scalar half = Scalar::fraction(1, 2);
  Scalar third = Scalar::fraction(1, 3);
  MatrixForm pi = MatrixForm::zero(frame, 1);
  pi.at(0, 0) = c.phi * (-half) + c.omega11 * (-third);
  pi.at(0, 1) = -c.phi2;
  pi.at(0, 2) = c.psi * Scalar::fraction(-1, 4);
  pi.at(1, 0) = c.omega1;
  pi.at(1, 1) = c.omega11 * Scalar::fraction(2, 3);
  pi.at(1, 2) = c.phi1 * half;
  pi.at(2, 0) = c.omega * Scalar::integer(2);
  pi.at(2, 1) = c.omega2 * Scalar::integer(2);
  pi.at(2, 2) = c.phi * half + c.omega11 * (-third);
  return pi;
}

MatrixForm curvature(const MatrixForm& pi) { return mat_d(pi) + mat_wedge(pi, pi); }

ConnectionForms connection_from_matrix(const MatrixForm& pi) {
  ConnectionForms c;
  c.omega = pi.at(2, 0) * Scalar::fraction(1, 2);
  c.omega1 = pi.at(1, 0);
  c.omega2 = pi.at(2, 1) * Scalar::fraction(1, 2);
  c.omega11 = pi.at(1, 1) * Scalar::fraction(3, 2);
  c.phi = pi.at(2, 2) - pi.at(0, 0);
  c.phi1 = pi.at(1, 2) * Scalar::integer(2);
  c.phi2 = -pi.at(0, 1);
  c.psi = pi.at(0, 2) * Scalar::integer(-4);
  // the disposition is redundant in the (1,1) entry; check it closes
  Form check = pi.at(0, 0) + c.phi * Scalar::fraction(1, 2) + c.omega11 * Scalar::fraction(1, 3);
  FramePtr fr = pi.frame();
  if (fr && !check.is_zero(fr->relations()))
    fail(ErrorKind::ShapeViolation, "matrix is not in the connection disposition");
  return c;
}

CurvatureComponents extract_components(const MatrixForm& Pi, const ConnectionForms& c) {
  const FramePtr frame = c.frame();
  const RelationSet& rel = frame->relations();
  static const char* names[] = {"(1,1)", "(1,2)", "(1,3)", "(2,1)", "(2,2)",
                                "(2,3)", "(3,1)", "(3,2)", "(3,3)"};
  const int must_vanish[] = {0, 3, 4, 6, 7, 8};
  for (int k : must_vanish) {
    if (!Pi.at(k / 3, k % 3).is_zero(rel))
      fail(ErrorKind::ShapeViolation,
           std::string("curvature entry ") + names[k] + " does not vanish");
  }
  CurvatureComponents out;
  out.Phi1 = Pi.at(1, 2) * Scalar::integer(2);
  out.Phi2 = -Pi.at(0, 1);
  out.Psi = Pi.at(0, 2) * Scalar::integer(-4);
  out.Q1 = proportional_coefficient(out.Phi1, wedge(c.omega, c.omega2), rel, "Phi1 = Q1 omega^omega2");
  out.Q2 = proportional_coefficient(out.Phi2, wedge(c.omega, c.omega1), rel, "Phi2 = Q2 omega^omega1");
  // Psi = (U1 omega1 + U2 omega2) ^ omega: isolate with wedges, then check the residual
  Form vol = wedge(c.omega, c.omega1, c.omega2);
  out.U2 = proportional_coefficient(wedge(out.Psi, c.omega1), vol, rel, "Psi ^ omega1") /
           proportional_coefficient(wedge(wedge(c.omega2, c.omega), c.omega1), vol, rel, "omega2^omega^omega1");
  out.U1 = proportional_coefficient(wedge(out.Psi, c.omega2), vol, rel, "Psi ^ omega2") /
           proportional_coefficient(wedge(wedge(c.omega1, c.omega), c.omega2), vol, rel, "omega1^omega^omega2");
  Form residual = out.Psi - wedge(c.omega1 * out.U1 + c.omega2 * out.U2, c.omega);
  if (!residual.is_zero(rel))
    fail(ErrorKind::ShapeViolation, "Psi is not of the form (U1 omega1 + U2 omega2) ^ omega");
  return out;
}

BorelElement BorelElement::identity() {
  return {Scalar::one(), Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::zero()};
}

BorelElement BorelElement::diagonal(Scalar alpha, Scalar beta) {
  return {std::move(alpha), std::move(beta), Scalar::zero(), Scalar::zero(), Scalar::zero()};
}

std::array<Scalar, 9> BorelElement::matrix() const {
  Scalar mid = Scalar::one() / (alpha * beta);
  return {alpha, gamma,          eps,
          Scalar::zero(), mid,   delta,
          Scalar::zero(), Scalar::zero(), beta};
}

std::array<Scalar, 9> BorelElement::inverse_matrix() const {
  if (alpha.is_syntactic_zero() || beta.is_syntactic_zero())
    fail(ErrorKind::NonInvertible, "group element with vanishing diagonal entry");
  // closed-form upper-triangular inverse
  Scalar ia = Scalar::one() / alpha;
  Scalar ib = Scalar::one() / beta;
  Scalar ab = alpha * beta;
  return {ia, -(beta * gamma), gamma * delta - eps / ab,
          Scalar::zero(), ab, -(alpha * delta),
          Scalar::zero(), Scalar::zero(), ib};
}

BorelElement BorelElement::multiply(const BorelElement& o) const {
  BorelElement r;
  r.alpha = alpha * o.alpha;
  r.beta = beta * o.beta;
  r.gamma = alpha * o.gamma + gamma / (o.alpha * o.beta);
  r.delta = delta * o.beta + o.delta / (alpha * beta);
  r.eps = alpha * o.eps + gamma * o.delta + eps * o.beta;
  return r;
}

bool BorelElement::is_constant(const FramePtr& frame) const {
  for (const Scalar* s : {&alpha, &beta, &gamma, &delta, &eps}) {
    std::vector<SymbolId> vars;
    s->collect_symbols(vars);
    for (SymbolId v : vars)
      if (frame->is_fiber_coordinate(v)) return false;
  }
  return true;
}

MatrixForm gauge_transform(const MatrixForm& pi, const BorelElement& h, const FramePtr& frame) {
  MatrixForm hm = MatrixForm::from_scalars(frame, h.matrix());
  MatrixForm hinv = MatrixForm::from_scalars(frame, h.inverse_matrix());
  MatrixForm ad = mat_wedge(mat_wedge(hinv, pi), hm);
  if (h.is_constant(frame)) return ad;
  return mat_wedge(hinv, mat_d(hm)) + ad;
}

GaugeReport verify_gauge_covariance(const ConnectionForms& c, const BorelElement& h,
                                    const Scalar& Q1, const Scalar& Q2) {
  const FramePtr frame = c.frame();
  const RelationSet& rel = frame->relations();
  if (!h.is_constant(frame))
    fail(ErrorKind::NotSupported,
         "component transformation lines are checked for constant group elements");
  MatrixForm pi = assemble_pi(c);
  MatrixForm pit = gauge_transform(pi, h, frame);
  ConnectionForms t = connection_from_matrix(pit);

  const Scalar &al = h.alpha, &be = h.beta, &ga = h.gamma, &de = h.delta, &ep = h.eps;
  Scalar half = Scalar::fraction(1, 2);
  GaugeReport rep;
  auto push = [&](const std::string& name, const Form& expected, const Form& got) {
    Form res = got - expected;
    bool zero = res.is_zero(rel);
    rep.residuals.push_back({name, res, zero});
    rep.all_zero = rep.all_zero && zero;
  };

  push("omega", c.omega * (al / be), t.omega);
  push("omega1", c.omega1 * (al * al * be) - c.omega * (2 * de * al * al), t.omega1);
  push("omega2", c.omega2 * ((al * be * be).inverse()) + c.omega * (ga / be), t.omega2);
  push("phi",
       c.phi + c.omega1 * (al * be * ga) + c.omega2 * (2 * de / be) +
           c.omega * (Scalar::integer(4) * ep / be - 2 * de * al * ga),
       t.phi);
  push("omega11",
       c.omega11 + c.omega1 * (Scalar::fraction(3, 2) * al * be * ga) -
           c.omega2 * (Scalar::integer(3) * de / be) - c.omega * (Scalar::integer(3) * de * al * ga),
       t.omega11);
  push("phi1",
       c.phi1 * (al * be * be) + c.omega11 * (2 * de * al * be) - c.phi * (al * be * de) +
           c.omega1 * (2 * al * be * ep) - c.omega2 * (Scalar::integer(4) * de * de * al) -
           c.omega * (Scalar::integer(4) * de * al * ep),
       t.phi1);
  push("phi2",
       c.phi2 * ((al * al * be).inverse()) + c.omega11 * (ga / al) + c.phi * (half * ga / al) +
           c.omega1 * (be * ga * ga) +
           c.omega2 * (2 * ep / (al * al * be * be) - 2 * ga * de / (al * be)) +
           c.omega * (2 * ga * ep / (al * be) - 2 * de * ga * ga),
       t.phi2);
  push("psi",
       c.psi * (be / al) + c.phi * (Scalar::integer(4) * ep / al - 2 * be * ga * de) +
           c.omega1 * (Scalar::integer(4) * be * ga * ep) +
           c.omega2 * (Scalar::integer(8) * de * ep / (al * be) - Scalar::integer(8) * ga * de * de) +
           c.phi1 * (2 * ga * be * be) + c.phi2 * (Scalar::integer(4) * de / al) +
           c.omega11 * (Scalar::integer(4) * de * be * ga) +
           c.omega * (Scalar::integer(8) * ep * ep / (al * be) - Scalar::integer(8) * de * ga * ep),
       t.psi);

  // curvature scaling of the two Q tensors
  MatrixForm Pit = curvature(pit);
  Form Phi1t = Pit.at(1, 2) * Scalar::integer(2);
  Form Phi2t = -Pit.at(0, 1);
  Scalar scale1 = al * be.pow(5);
  Scalar scale2 = (al.pow(5) * be).inverse();
  push("Q1 scaling", wedge(t.omega, t.omega2) * (scale1 * Q1), Phi1t);
  push("Q2 scaling", wedge(t.omega, t.omega1) * (scale2 * Q2), Phi2t);
  rep.Q1_transformed = scale1 * Q1;
  rep.Q2_transformed = scale2 * Q2;
  return rep;
}

Tc2Result tc2(const MatrixForm& pi) {
  Tc2Result out;
  const FramePtr frame = pi.frame();
  const RelationSet& rel = frame->relations();
  MatrixForm pi2 = mat_wedge(pi, pi);
  Form t3 = trace_wedge(pi2, pi);
  out.t = t3 * Scalar::fraction(1, 24);
  MatrixForm Pi = mat_d(pi) + pi2;
  out.tr_curvature_wedge_pi = trace_wedge(Pi, pi);
  out.tr_curvature_zero = out.tr_curvature_wedge_pi.is_zero(rel);
  out.d_trace_cubed = exterior_derivative(t3);
  out.closed = out.d_trace_cubed.is_zero(rel);
  return out;
}

SectionDependenceReport section_dependence_check(const MatrixForm& pi, const BorelElement& h,
                                                 const FramePtr& frame) {
  SectionDependenceReport rep;
  const RelationSet& rel = frame->relations();
  MatrixForm hm = MatrixForm::from_scalars(frame, h.matrix());
  MatrixForm hinv = MatrixForm::from_scalars(frame, h.inverse_matrix());
  MatrixForm dh = mat_d(hm);
  MatrixForm dhinv = mat_d(hinv);

  auto push = [&](const std::string& name, Form res) {
    bool zero = res.is_zero(rel);
    rep.residuals.push_back({name, std::move(res), zero});
    rep.all_zero = rep.all_zero && zero;
  };

  // tr(h^-1 dh ^ dh^-1 ^ dh) = 0
  push("tr(h^-1 dh ^ dh^-1 ^ dh)",
       trace_wedge(mat_wedge(mat_wedge(hinv, dh), dhinv), dh));

  // d tr(h^-1 pi ^ dh) = tr(dh^-1 ^ pi ^ dh) - tr(h^-1 pi ^ pi ^ dh)
  Form cs = trace_wedge(mat_wedge(hinv, pi), dh);
  Form lhs = exterior_derivative(cs);
  Form rhs = trace_wedge(mat_wedge(dhinv, pi), dh) -
             trace_wedge(mat_wedge(mat_wedge(hinv, pi), pi), dh);
  push("d tr(h^-1 pi ^ dh) identity", lhs - rhs);

  // tr((R*_h pi)^3) - tr(pi^3) + 3 d tr(h^-1 pi ^ dh) = 0
  MatrixForm rh = mat_wedge(hinv, dh) + mat_wedge(mat_wedge(hinv, pi), hm);
  Form t3h = trace_wedge(mat_wedge(rh, rh), rh);
  Form t3 = trace_wedge(mat_wedge(pi, pi), pi);
  push("section-change identity", t3h - t3 + lhs * Scalar::integer(3));
  return rep;
}

Matrix4S matrix4_identity() {
  Matrix4S m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = (i == j) ? Scalar::one() : Scalar::zero();
  return m;
}

Matrix4S matrix4_multiply(const Matrix4S& a, const Matrix4S& b) {
  Matrix4S m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Scalar acc = Scalar::zero();
      for (int k = 0; k < 4; ++k) acc = acc + a[i][k] * b[k][j];
      m[i][j] = acc;
    }
  return m;
}

Matrix4S j_homomorphism(const BorelElement& b) {
  if (b.alpha.is_syntactic_zero() || b.beta.is_syntactic_zero())
    fail(ErrorKind::NonInvertible, "group element with vanishing diagonal entry");
  const Scalar &a = b.alpha, &bb = b.beta, &c = b.gamma, &d = b.delta, &e = b.eps;
  Scalar z = Scalar::zero();
  Matrix4S m;
  m[0] = {a / bb, Scalar::integer(-2) * a * a * d, c / bb,
          Scalar::integer(4) * e / bb - 2 * a * c * d};
  m[1] = {z, a * a * bb, z, a * bb * c};
  m[2] = {z, z, (a * bb * bb).inverse(), 2 * d / bb};
  m[3] = {z, z, z, Scalar::one()};
  return m;
}

}  // namespace flagcurv
