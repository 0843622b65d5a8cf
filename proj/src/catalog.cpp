#include "flagcurv/catalog.hpp"

#include "flagcurv/errors.hpp"

namespace flagcurv {

StructureConstants::StructureConstants(int dimension, std::vector<std::string> names)
    : n_(dimension), names_(std::move(names)), c_(dimension * dimension * dimension) {
  if (static_cast<int>(names_.size()) != n_)
    fail(ErrorKind::NotSupported, "structure constants need one name per basis form");
}

void StructureConstants::set(int i, int j, int k, Scalar value) {
  if (j == k && !value.is_syntactic_zero())
    fail(ErrorKind::NotSupported, "c^i_{jj} must vanish by antisymmetry");
  c_[i * n_ * n_ + j * n_ + k] = value;
  c_[i * n_ * n_ + k * n_ + j] = -value;
}

Scalar StructureConstants::get(int i, int j, int k) const {
  return c_[i * n_ * n_ + j * n_ + k];
}

FramePtr frame_from_structure_constants(const StructureConstants& sc, RelationSet relations) {
  FrameBuilder builder(sc.names(), std::move(relations));
  int n = sc.dimension();
  for (int i = 0; i < n; ++i) {
    Form rule(builder.frame(), 2);
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Scalar cjk = sc.get(i, j, k);
        if (cjk.is_syntactic_zero()) continue;
        rule = rule + wedge(builder.basis(sc.names()[j]), builder.basis(sc.names()[k])) * (-cjk);
      }
    builder.set_d_rule(sc.names()[i], rule);
  }
  FramePtr frame = builder.finalize();
  ConsistencyReport report = check_frame_consistency(frame);
  if (!report.usable) {
    std::string bad;
    for (const auto& e : report.entries)
      if (!e.zero) bad += (bad.empty() ? "" : ", ") + e.name;
    fail(ErrorKind::JacobiViolation, "structure constants violate the Jacobi identity on: " + bad);
  }
  return frame;
}

Su2FamilyParams Su2FamilyParams::symbolic_xyz() {
  SymbolId xs = sym("x");
  SymbolId ys = sym("y");
  SymbolId zs = sym("z");
  return from_xyz(Scalar::variable(xs), Scalar::variable(ys), Scalar::variable(zs));
}

Su2FamilyParams Su2FamilyParams::from_xyz(Scalar x, Scalar y, Scalar z, bool register_relation) {
  Su2FamilyParams p;
  p.use_xyz = true;
  p.x = std::move(x);
  p.y = std::move(y);
  p.z = std::move(z);
  p.register_relation = register_relation;
  return p;
}

Su2FamilyParams Su2FamilyParams::from_rs(Scalar r1, Scalar r2, Scalar s1, Scalar s2,
                                         bool register_relation) {
  Su2FamilyParams p;
  p.use_rs = true;
  p.r1 = std::move(r1);
  p.r2 = std::move(r2);
  p.s1 = std::move(s1);
  p.s2 = std::move(s2);
  p.register_relation = register_relation;
  return p;
}

Su2FamilyParams Su2FamilyParams::from_rs_deriving_s2(Scalar r1, Scalar r2, Scalar s1) {
  if (r1.is_syntactic_zero())
    fail(ErrorKind::DivisionByZero,
         "cannot derive s2 = (1 + r2 s1)/r1 with r1 = 0; pass all four parameters or use the "
         "x,y,z parametrization");
  Scalar s2 = (Scalar::one() + r2 * s1) / r1;
  return from_rs(std::move(r1), std::move(r2), std::move(s1), std::move(s2));
}

namespace {

void require_constant_parameters(const std::vector<const Scalar*>& params) {
  // constancy on the target frame: no parameter may involve the fiber scale
  // or any symbol later declared as a coordinate; the family frame only
  // declares `a`, so it suffices to reject that symbol by name
  SymbolId a = sym("a");
  for (const Scalar* s : params)
    if (s->uses_symbol(a))
      fail(ErrorKind::NotSupported,
           "family parameters must be constant (coordinate-dependent maps are not supported)");
}

}  // namespace

Su2Family su2_family(const Su2FamilyParams& params) {
  Scalar x, y, z;
  RelationSet relations;
  if (params.use_xyz == params.use_rs)
    fail(ErrorKind::NotSupported, "exactly one parametrization must be chosen");
  if (params.use_xyz) {
    x = params.x;
    y = params.y;
    z = params.z;
    require_constant_parameters({&x, &y, &z});
    if (params.register_relation) {
      // register x^2 + yz + 1 = 0 unless the given values already satisfy it
      Scalar defect = x * x + y * z + Scalar::one();
      if (!defect.is_syntactic_zero()) {
        if (defect.num().is_constant())
          fail(ErrorKind::NotAPseudoFlag, "parameters violate x^2 + yz = -1");
        relations.add_vanishing(defect.num());
      }
    }
  } else {
    const Scalar &r1 = params.r1, &r2 = params.r2, &s1 = params.s1, &s2 = params.s2;
    require_constant_parameters({&r1, &r2, &s1, &s2});
    Scalar det = r1 * s2 - r2 * s1 - Scalar::one();
    if (!det.is_syntactic_zero()) {
      if (params.register_relation && !det.num().is_constant()) {
        relations.add_vanishing(det.num());
      } else if (!det.is_zero(relations)) {
        fail(ErrorKind::NotAPseudoFlag, "parameters violate r1 s2 - r2 s1 = 1");
      }
    }
    x = r1 * s1 + r2 * s2;
    y = -(r1 * r1 + r2 * r2);
    z = s1 * s1 + s2 * s2;
    // d(theta) = Z1 ^ Z2 on the invariant coframe reduces to the determinant
    // condition, which the relation set now encodes; x^2 + yz = -1 follows
    Scalar defect = x * x + y * z + Scalar::one();
    if (!defect.is_zero(relations))
      fail(ErrorKind::CrossCheckMismatch, "x^2 + yz = -1 does not follow from the parameters");
  }

  FrameBuilder builder({"theta", "Z1", "Z2", "lam"}, std::move(relations));
  Form th = builder.basis("theta"), Z1 = builder.basis("Z1"), Z2 = builder.basis("Z2");
  Form lam = builder.basis("lam");
  builder.set_d_rule("theta", wedge(Z1, Z2));
  builder.set_d_rule("Z1", wedge(th, Z1 * x + Z2 * y));
  builder.set_d_rule("Z2", wedge(th, Z1 * z + Z2 * (-x)));
  builder.set_d_rule("lam", Form(builder.frame(), 2));
  SymbolId a = sym("a");
  builder.set_coordinate_differential(a, lam * Scalar::variable(a));
  FramePtr frame = builder.finalize();

  PseudoFlagStructure structure(frame, "theta", "Z1", "Z2", a, "lam");
  return {std::move(structure), std::move(x), std::move(y), std::move(z)};
}

FullReport full_report(const PseudoFlagStructure& p) {
  FullReport out;
  std::string stage;
  try {
    stage = "reduce_pseudo_flag";
    out.reduction = reduce_pseudo_flag(p);
    stage = "curvature_coefficients";
    out.curvature = curvature_coefficients(p, out.reduction);
    stage = "embed_to_connection";
    out.connection = embed_to_connection(p, out.reduction, out.curvature);
    stage = "verify_structure_equations";
    out.structure_equations = verify_structure_equations(p, out.reduction, out.connection);
    if (!out.structure_equations.all_pass)
      fail(ErrorKind::ShapeViolation, "structure equations do not close");
    stage = "curvature_invariants";
    curvature_invariants(p, out.reduction, out.connection, out.curvature);
    stage = "bianchi_checks";
    bianchi_checks(p, out.connection, out.curvature);
    stage = "invariant_integrand";
    invariant_integrand(p, out.reduction, out.connection, out.curvature);
  } catch (Error&) {
    out.failed_stage = stage;
    throw;
  }
  return out;
}

}  // namespace flagcurv
