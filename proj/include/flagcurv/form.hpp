#pragma once

#include <cstdint>
#include <map>
#include <set>

#include "flagcurv/frame.hpp"

namespace flagcurv {

// Homogeneous exterior-algebra element over a frame. Multi-indices are
// bitmasks over the basis; antisymmetry is normalized away at construction.
// A syntactically-zero Form is degree-agnostic in arithmetic so that the zero
// 1-form can flow through mixed-degree formulas.
class Form {
 public:
  Form() : degree_(0) {}
  Form(FramePtr frame, int degree) : frame_(std::move(frame)), degree_(degree) {}

  static Form scalar(FramePtr frame, Scalar s);
  static Form basis(const FramePtr& frame, const std::string& name);
  static Form zero(FramePtr frame, int degree) { return Form(std::move(frame), degree); }

  const FramePtr& frame() const { return frame_; }
  int degree() const { return degree_; }
  bool empty() const { return coeffs_.empty(); }
  const std::map<std::uint32_t, Scalar>& coefficients() const { return coeffs_; }

  void set_coefficient(std::uint32_t mask, Scalar s);         // popcount(mask) == degree
  Scalar coefficient_mask(std::uint32_t mask) const;
  // Named multi-index access; indices must be strictly increasing.
  Scalar coefficient(const std::vector<std::string>& names) const;

  Form operator+(const Form& o) const;
  Form operator-(const Form& o) const;
  Form operator-() const;
  Form operator*(const Scalar& s) const;

  bool is_zero(const RelationSet& rel) const;
  bool is_zero() const;  // under the frame's relations

  std::vector<SymbolId> symbols() const;

 private:
  FramePtr frame_;
  int degree_;
  std::map<std::uint32_t, Scalar> coeffs_;
};

// Sign of merging two disjoint index sets, by inversion count.
int wedge_sign(std::uint32_t left, std::uint32_t right);

Form wedge(const Form& a, const Form& b);
Form wedge(const Form& a, const Form& b, const Form& c);

// Structural exterior derivative: d(f sigma_I) = df ^ sigma_I + f d(sigma_I),
// df driven by the frame's coordinate differentials, d(sigma_I) by the
// declared d-rules and the graded Leibniz rule.
Form exterior_derivative(const Form& a);
// Differential of a scalar as a 1-form on the frame.
Form d_scalar(const FramePtr& frame, const Scalar& s);

// Section pullback: drop every term containing a killed basis form, then
// substitute the fixed coordinates.
Form pullback_section(const Form& a, const std::set<std::string>& killed,
                      const std::map<SymbolId, Scalar>& fixed);

// q with target == q * reference, when the target is a scalar multiple of the
// reference; throws ShapeViolation otherwise (context names the check).
Scalar proportional_coefficient(const Form& target, const Form& reference,
                                const RelationSet& rel, const std::string& context);

struct ConsistencyEntry {
  std::string name;   // basis form or coordinate name
  Form residual;      // d(d(.))
  bool zero;
};

struct ConsistencyReport {
  std::vector<ConsistencyEntry> entries;
  bool usable = true;
};

// Applies d twice to every basis form and fiber coordinate; the frame is
// usable iff every residual vanishes under the frame relations.
ConsistencyReport check_frame_consistency(const FramePtr& frame);

}  // namespace flagcurv
