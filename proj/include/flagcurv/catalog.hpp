#pragma once

#include "flagcurv/reduction.hpp"

namespace flagcurv {

// Antisymmetric structure constants c^i_{jk} for an invariant coframe with
// d(sigma^i) = -(1/2) sum c^i_{jk} sigma^j ^ sigma^k.
class StructureConstants {
 public:
  StructureConstants(int dimension, std::vector<std::string> names);
  void set(int i, int j, int k, Scalar value);  // also records c^i_{kj} = -c^i_{jk}
  Scalar get(int i, int j, int k) const;
  int dimension() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }

 private:
  int n_;
  std::vector<std::string> names_;
  std::vector<Scalar> c_;  // dense i*n*n + j*n + k
};

// Builds the invariant frame and verifies d^2 = 0 (the Jacobi identity);
// throws JacobiViolation listing the failing forms.
FramePtr frame_from_structure_constants(const StructureConstants& sc, RelationSet relations = {});

struct Su2FamilyParams {
  // either the contact-coframe coefficients directly...
  bool use_xyz = false;
  Scalar x, y, z;
  // ...or the frame-mixing parameters with r1*s2 - r2*s1 = 1
  bool use_rs = false;
  Scalar r1, r2, s1, s2;
  // when true, register the defining relation of the parametrization
  bool register_relation = true;

  static Su2FamilyParams symbolic_xyz();
  static Su2FamilyParams from_xyz(Scalar x, Scalar y, Scalar z, bool register_relation = true);
  static Su2FamilyParams from_rs(Scalar r1, Scalar r2, Scalar s1, Scalar s2,
                                 bool register_relation = true);
  // derives s2 = (1 + r2 s1)/r1; DivisionByZero when r1 vanishes
  static Su2FamilyParams from_rs_deriving_s2(Scalar r1, Scalar r2, Scalar s1);
};

struct Su2Family {
  PseudoFlagStructure structure;
  Scalar x, y, z;  // the effective coefficients (derived from r,s when given)
};

// Homogeneous family over the invariant coframe: theta with d(theta) = Z1^Z2,
// dZ1 = theta ^ (x Z1 + y Z2), dZ2 = theta ^ (z Z1 - x Z2), extended by the
// fiber coordinate a with da = a*lambda. Parameters must be constant
// expressions (NotSupported otherwise); with (r,s) parameters the
// coefficients are derived and d(theta) = Z1 ^ Z2 verified under the
// relation r1 s2 - r2 s1 = 1.
Su2Family su2_family(const Su2FamilyParams& params);

struct FullReport {
  ReductionOutput reduction;
  ConnectionForms connection;
  ResidualReport structure_equations;
  CurvatureReport curvature;
  std::string failed_stage;  // empty on success
};

// reduce -> coefficients -> embed -> verify -> invariants -> bianchi ->
// integrand; aborts with the failing stage recorded.
FullReport full_report(const PseudoFlagStructure& p);

}  // namespace flagcurv
