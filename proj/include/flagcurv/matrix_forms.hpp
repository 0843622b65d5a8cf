#pragma once

#include <array>
#include <string>
#include <vector>

#include "flagcurv/form.hpp"

namespace flagcurv {

// 3x3 matrix of degree-homogeneous forms on a shared frame.
class MatrixForm {
 public:
  MatrixForm() = default;
  static MatrixForm zero(FramePtr frame, int degree);
  static MatrixForm from_scalars(const FramePtr& frame, const std::array<Scalar, 9>& entries);

  const Form& at(int row, int col) const { return e_[row * 3 + col]; }
  Form& at(int row, int col) { return e_[row * 3 + col]; }

  MatrixForm operator+(const MatrixForm& o) const;
  MatrixForm operator-(const MatrixForm& o) const;
  MatrixForm operator*(const Scalar& s) const;

  Form trace() const;
  FramePtr frame() const;

 private:
  std::array<Form, 9> e_;
};

// (A ^ B)_ij = sum_k A_ik ^ B_kj
MatrixForm mat_wedge(const MatrixForm& a, const MatrixForm& b);
MatrixForm mat_d(const MatrixForm& a);
Form trace_wedge(const MatrixForm& a, const MatrixForm& b);  // tr(A ^ B)

// The eight connection 1-forms on a shared frame. On a section with
// s*phi = 0 the phi slot is the zero form.
struct ConnectionForms {
  Form omega, omega1, omega2, phi, omega11, phi1, phi2, psi;
  FramePtr frame() const { return omega.frame(); }
};

// sl(3,C) disposition of the connection. The (1,2) entry carries -phi2; that
// is the sign for which d(pi) + pi^pi is strictly upper triangular.
MatrixForm assemble_pi(const ConnectionForms& c);

// Pi = d(pi) + pi ^ pi
MatrixForm curvature(const MatrixForm& pi);

// Reads the eight slots back out of a 1-form matrix in the assemble_pi
// disposition, checking internal consistency of the diagonal.
ConnectionForms connection_from_matrix(const MatrixForm& pi);

struct CurvatureComponents {
  Form Phi1, Phi2, Psi;          // 2-forms
  Scalar Q1, Q2, U1, U2;
};

// Requires the flag-connection curvature shape: zero below the diagonal and
// on it, Phi1 = 2 Pi_23, Phi2 = -Pi_12, Psi = -4 Pi_13, and the component
// decomposition against the connection's coframe. ShapeViolation otherwise.
CurvatureComponents extract_components(const MatrixForm& Pi, const ConnectionForms& c);

// Symbolic upper-triangular group element with diagonal (alpha, 1/(alpha
// beta), beta) and strict upper entries gamma, delta, eps.
struct BorelElement {
  Scalar alpha, beta, gamma, delta, eps;
  static BorelElement identity();
  static BorelElement diagonal(Scalar alpha, Scalar beta);
  std::array<Scalar, 9> matrix() const;
  std::array<Scalar, 9> inverse_matrix() const;  // NonInvertible on zero alpha/beta
  BorelElement multiply(const BorelElement& o) const;
  bool is_constant(const FramePtr& frame) const;  // no fiber coordinates among entries
};

// R*_h pi = h^-1 dh + h^-1 pi h (the dh term vanishes for constant h).
MatrixForm gauge_transform(const MatrixForm& pi, const BorelElement& h, const FramePtr& frame);

struct NamedResidual {
  std::string name;
  Form residual;
  bool zero;
};

struct GaugeReport {
  std::vector<NamedResidual> residuals;
  Scalar Q1_transformed, Q2_transformed;
  bool all_zero = true;
};

// For constant h: checks the eight component transformation lines of the
// gauge law and the scaling Q~1 = alpha beta^5 Q1, Q~2 = alpha^-5 beta^-1 Q2
// (the latter through a full curvature recomputation).
GaugeReport verify_gauge_covariance(const ConnectionForms& c, const BorelElement& h,
                                    const Scalar& Q1, const Scalar& Q2);

struct Tc2Result {
  Form t;                        // (1/24) tr(pi^pi^pi); full value is t / pi^2
  std::string transcendental_factor = "1/pi^2";
  Form tr_curvature_wedge_pi;    // tr(Pi ^ pi), must vanish
  Form d_trace_cubed;            // d tr(pi^pi^pi), must vanish
  bool closed = false;
  bool tr_curvature_zero = false;
};

Tc2Result tc2(const MatrixForm& pi);

struct SectionDependenceReport {
  std::vector<NamedResidual> residuals;  // the two lemma identities + the section-change identity
  bool all_zero = true;
};

// Verifies tr(h^-1 dh ^ dh^-1 ^ dh) = 0, the derivative identity
// d tr(h^-1 pi ^ dh) = tr(dh^-1 ^ pi ^ dh - h^-1 pi ^ pi ^ dh), and
// tr((R*_h pi)^3) - tr(pi^3) + 3 d tr(h^-1 pi ^ dh) = 0.
SectionDependenceReport section_dependence_check(const MatrixForm& pi, const BorelElement& h,
                                                 const FramePtr& frame);

using Matrix4S = std::array<std::array<Scalar, 4>, 4>;

Matrix4S matrix4_multiply(const Matrix4S& a, const Matrix4S& b);
Matrix4S matrix4_identity();

// The explicit 4x4 image of an upper-triangular unimodular element in the
// coframe-change group; a surjective homomorphism with kernel the diagonal
// cube roots of unity.
Matrix4S j_homomorphism(const BorelElement& b);

}  // namespace flagcurv
