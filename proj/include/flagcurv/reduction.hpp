#pragma once

#include "flagcurv/matrix_forms.hpp"

namespace flagcurv {

// A contact coframe (theta, Z1, Z2) with d(theta) = Z1 ^ Z2, a fiber scale
// coordinate a with da = a*lambda, and lambda a designated basis form. The
// scaled coframe is theta1 = a Z1, theta2 = Z2 / a.
class PseudoFlagStructure {
 public:
  PseudoFlagStructure(FramePtr frame, std::string theta, std::string z1, std::string z2,
                      SymbolId scale, std::string lambda);

  const FramePtr& frame() const { return frame_; }
  SymbolId scale_symbol() const { return scale_; }
  const std::string& lambda_name() const { return lambda_; }

  Form theta() const;
  Form z1() const;
  Form z2() const;
  Form lambda_form() const;
  Form theta1() const;  // a Z1
  Form theta2() const;  // Z2 / a
  Scalar scale() const { return Scalar::variable(scale_); }

  // Coefficient of the wedge of the given 1-forms inside f; every listed form
  // must reduce to a single basis monomial.
  Scalar component(const Form& f, const std::vector<Form>& basis_wedge) const;

 private:
  FramePtr frame_;
  std::string theta_, z1_, z2_, lambda_;
  SymbolId scale_;
};

struct ReductionOutput {
  Form theta11, tau1, tau2;                     // 1-forms
  Scalar z112, z110, z120, z212, z210, z220;    // dZ expansion coefficients
  Scalar tau21, tau12;                          // tau1 = tau21 theta2, tau2 = tau12 theta1
};

struct CurvatureReport {
  // connection coefficients of the reduced structure
  Scalar R, W1, W2;
  Scalar S11, S21, S12, S22;
  Scalar tau21, tau12;
  // covariant derivative expansions
  Scalar R0, R1, R2;
  Scalar R00, R01, R02;
  Scalar R11, R12, R22, R21;     // R21 = theta1-coefficient of the dR2 expansion
  Scalar W01, W11, W21;          // from the dW1 expansion (theta, theta1, theta2)
  Scalar W02, W12, W22;          // from the dW2 expansion
  // embedding data
  Scalar c, E1, E2, G;
  // curvature invariants (cross-checked over three routes)
  Scalar Q1, Q2, U1, U2;
  bool flat = false;
  // invariant integrand, full value = integrand / (8 pi^2)
  Form integrand;
  std::string transcendental_factor = "1/(8*pi^2)";
  // differential-identity coefficients
  bool has_bianchi = false;
  Scalar S1, T1, S2, T2, A, B, C, D, E;
};

struct ResidualReport {
  std::vector<NamedResidual> entries;
  bool all_pass = true;
};

// Unique (theta11, tau1, tau2) with d(theta1) = theta1^theta11 + theta^tau1,
// d(theta2) = -theta2^theta11 + theta^tau2, normalized so tau1 has no theta1
// component (and then tau2 has no theta2 component).
ReductionOutput reduce_pseudo_flag(const PseudoFlagStructure& p);

// R, W, S coefficients from d(theta11) and the two tau equations, plus all
// covariant derivative expansions and their internal identities.
CurvatureReport curvature_coefficients(const PseudoFlagStructure& p, const ReductionOutput& r);

// Section with phi = 0: omega = theta, omega1 = theta1, omega2 = theta2,
// omega11 = theta11 + c theta, phi1 = c theta1 + E1 theta + tau1,
// phi2 = -c theta2 + E2 theta + tau2, psi = E2 theta1 - E1 theta2 + G theta.
ConnectionForms embed_to_connection(const PseudoFlagStructure& p, const ReductionOutput& r,
                                    CurvatureReport& rep);

// Residuals of the eight pulled-back structure equations (Eq. 22 - Eq. 29);
// Eqs. 27-29 pass iff their residual has the declared curvature shape.
ResidualReport verify_structure_equations(const PseudoFlagStructure& p, const ReductionOutput& r,
                                          const ConnectionForms& c);

// Q1, Q2, U1, U2 by (i) structure-equation extraction, (ii) the matrix
// curvature route, and for the Qs (iii) the closed-form identities; all
// routes must agree exactly. Sets the flat predicate.
void curvature_invariants(const PseudoFlagStructure& p, const ReductionOutput& r,
                          const ConnectionForms& c, CurvatureReport& rep);

// Expands the three differential identities for dQ1, dQ2, dU1/dU2, extracts
// their coefficients and verifies the shared slots (the U-slots against
// Eq. 29 values, the C coefficient across the two dU lines).
void bianchi_checks(const PseudoFlagStructure& p, const ConnectionForms& c, CurvatureReport& rep);

// The section integrand: theta^theta1^theta2 (G/2 + R^2/16 - tau21 tau12)
// + theta11 ^ (E2 theta^theta1 + E1 theta^theta2 - (R/2) theta1^theta2),
// cross-checked against 8 * tc2(assemble_pi(c)).
Form invariant_integrand(const PseudoFlagStructure& p, const ReductionOutput& r,
                         const ConnectionForms& c, CurvatureReport& rep);

struct CrReport {
  bool premise_holds = false;      // omega2 == i * conj(omega1)
  std::vector<NamedResidual> conditions;
  bool all_pass = false;
};

// Antilinear involution data: i -> -i on coefficients, symbol images, basis
// form images. Checked for involutivity on the frame and compatibility with d.
struct ConjugationSpec {
  std::map<SymbolId, Scalar> symbol_images;
  std::map<std::string, Form> basis_images;

  Scalar apply(const Scalar& s) const;
  Form apply(const Form& f) const;
  void validate(const FramePtr& frame) const;  // IllFormedInvolution on failure
};

// Reality conditions of the conjugation-compatible case: omega11 + conj = 0,
// phi2 = i conj(phi1), psi real, Q1 = conj(Q2), U1 = -i conj(U2).
CrReport check_cr_reality(const ConnectionForms& c, const CurvatureReport& rep,
                          const ConjugationSpec& conj);

}  // namespace flagcurv
