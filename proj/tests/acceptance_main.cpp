// Acceptance gate: one line per criterion, exact checks only. Exits nonzero
// if any line fails. Criteria also enforce the wall-clock budget: every
// individual check under 10 seconds, the whole run under 60.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "flagcurv/catalog.hpp"
#include "flagcurv/errors.hpp"
#include "flagcurv/printer.hpp"
#include "support/suites.hpp"

using namespace flagcurv;
using testsupport::suite_d_square;
using testsupport::suite_field_axioms;
using testsupport::suite_graded_commutativity;
using testsupport::suite_graded_leibniz;
using testsupport::suite_reduction_properties;

namespace {

struct Gate {
  int failed = 0;
  double total_seconds = 0;

  void run(const std::string& name, const std::function<bool()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
      ok = body();
    } catch (const Error& e) {
      note = std::string(" [") + error_kind_name(e.kind()) + ": " + e.what() + "]";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    total_seconds += secs;
    if (secs >= 10.0) {
      ok = false;
      note += " [exceeded the 10 s per-check budget]";
    }
    std::printf("%s %s (%.2fs)%s\n", ok ? "PASS" : "FAIL", name.c_str(), secs, note.c_str());
    if (!ok) ++failed;
  }
};

struct FamilyData {
  Su2Family family;
  ReductionOutput reduction;
  CurvatureReport report;
  ConnectionForms connection;
};

FamilyData family_pipeline() {
  FamilyData d{su2_family(Su2FamilyParams::symbolic_xyz()), {}, {}, {}};
  d.reduction = reduce_pseudo_flag(d.family.structure);
  d.report = curvature_coefficients(d.family.structure, d.reduction);
  d.connection = embed_to_connection(d.family.structure, d.reduction, d.report);
  return d;
}

}  // namespace

int main() {
  Gate gate;

  gate.run("criterion 1: family reduction is exact", [] {
    FamilyData d = family_pipeline();
    const PseudoFlagStructure& p = d.family.structure;
    Scalar x = d.family.x, y = d.family.y, z = d.family.z, a = p.scale();
    bool ok = (d.reduction.theta11 - (-p.lambda_form() - p.theta() * x)).is_zero();
    ok = ok && (d.reduction.tau1 - p.theta2() * (y * a * a)).is_zero();
    ok = ok && (d.reduction.tau2 - p.theta1() * (z / (a * a))).is_zero();
    return ok;
  });

  gate.run("criterion 2: family curvature coefficients are exact", [] {
    FamilyData d = family_pipeline();
    Scalar x = d.family.x, y = d.family.y, z = d.family.z;
    Scalar a = d.family.structure.scale();
    bool ok = d.report.R.equals(-x);
    ok = ok && d.report.W1.is_zero() && d.report.W2.is_zero();
    ok = ok && d.report.S11.equals(y * z) && d.report.S22.equals(y * z);
    ok = ok && d.report.S21.equals(Scalar::integer(-2) * a * a * x * y);
    ok = ok && d.report.S12.equals(Scalar::integer(2) * x * z / (a * a));
    return ok;
  });

  gate.run("criterion 3: invariants agree across all three routes", [] {
    FamilyData d = family_pipeline();
    const PseudoFlagStructure& p = d.family.structure;
    Scalar x = d.family.x, y = d.family.y, z = d.family.z, a = p.scale();
    Scalar expected_q1 = Scalar::fraction(-3, 2) * x * y * a * a;
    Scalar expected_q2 = Scalar::fraction(3, 2) * x * z / (a * a);

    // route (i): coefficient extraction from the pulled-back equations
    Scalar half = Scalar::fraction(1, 2);
    Form L27 = exterior_derivative(d.connection.phi1) -
               wedge(d.connection.phi1, d.connection.omega11) -
               wedge(d.connection.omega1, d.connection.psi) * half;
    Scalar q1_equations = p.component(L27, {p.theta(), p.theta2()});
    Form L28 = exterior_derivative(d.connection.phi2) +
               wedge(d.connection.phi2, d.connection.omega11) -
               wedge(d.connection.omega2, d.connection.psi) * half;
    Scalar q2_equations = p.component(L28, {p.theta(), p.theta1()});

    // route (ii): matrix curvature
    CurvatureComponents mat =
        extract_components(curvature(assemble_pi(d.connection)), d.connection);

    // route (iii): closed forms from the reduction data
    Scalar q1_closed = d.report.S21 - d.report.R * d.reduction.tau21 * half -
                       Scalar::fraction(2, 3) * d.report.W22 + d.report.R22 / Scalar::integer(6);
    Scalar q2_closed = d.report.S12 + d.report.R * d.reduction.tau12 * half -
                       Scalar::fraction(2, 3) * d.report.W11 + d.report.R11 / Scalar::integer(6);

    bool ok = q1_equations.equals(expected_q1) && q2_equations.equals(expected_q2);
    ok = ok && mat.Q1.equals(expected_q1) && mat.Q2.equals(expected_q2);
    ok = ok && q1_closed.equals(expected_q1) && q2_closed.equals(expected_q2);
    ok = ok && mat.U1.is_zero() && mat.U2.is_zero();
    // and the pipeline's own triple cross-check runs without complaint
    curvature_invariants(p, d.reduction, d.connection, d.report);
    ok = ok && d.report.Q1.equals(expected_q1) && d.report.Q2.equals(expected_q2);
    ok = ok && d.report.U1.is_zero() && d.report.U2.is_zero();
    return ok;
  });

  gate.run("criterion 4: global-invariant integrand, both routes", [] {
    FamilyData d = family_pipeline();
    const PseudoFlagStructure& p = d.family.structure;
    curvature_invariants(p, d.reduction, d.connection, d.report);
    Form integrand = invariant_integrand(p, d.reduction, d.connection, d.report);
    Scalar x = d.family.x, y = d.family.y, z = d.family.z;
    Form killed = pullback_section(integrand, {p.lambda_name()}, {});
    Form expected = wedge(p.theta(), p.theta1(), p.theta2()) *
                    (Scalar::integer(-2) * y * z - x * x * Scalar::fraction(1, 2));
    bool ok = (killed - expected).is_zero();
    ok = ok && d.report.transcendental_factor == "1/(8*pi^2)";
    // independent transgression route, pulled back the same way
    Tc2Result t = tc2(assemble_pi(d.connection));
    Form via_trace =
        pullback_section(t.t * Scalar::integer(8), {p.lambda_name()}, {});
    ok = ok && (killed - via_trace).is_zero();
    return ok;
  });

  gate.run("criterion 5: flat exactly on the x = 0 and y = z = 0 loci", [] {
    FullReport generic = full_report(su2_family(Su2FamilyParams::symbolic_xyz()).structure);
    bool ok = !generic.curvature.flat;
    FullReport x0 = full_report(
        su2_family(Su2FamilyParams::from_xyz(Scalar::zero(), Scalar::named("y"),
                                             Scalar::named("z")))
            .structure);
    ok = ok && x0.curvature.flat;
    FullReport yz0 = full_report(
        su2_family(Su2FamilyParams::from_xyz(Scalar::named("x"), Scalar::zero(), Scalar::zero()))
            .structure);
    ok = ok && yz0.curvature.flat;
    return ok;
  });

  gate.run("criterion 6: gauge law and Q-scaling for a symbolic element", [] {
    FamilyData d = family_pipeline();
    curvature_invariants(d.family.structure, d.reduction, d.connection, d.report);
    BorelElement h{Scalar::named("acc_al"), Scalar::named("acc_be"), Scalar::named("acc_ga"),
                   Scalar::named("acc_de"), Scalar::named("acc_ep")};
    GaugeReport rep = verify_gauge_covariance(d.connection, h, d.report.Q1, d.report.Q2);
    bool ok = rep.all_zero;
    ok = ok && rep.Q1_transformed.equals(h.alpha * h.beta.pow(5) * d.report.Q1);
    ok = ok && rep.Q2_transformed.equals(d.report.Q2 / (h.alpha.pow(5) * h.beta));
    return ok;
  });

  gate.run("criterion 7: transgression algebra", [] {
    FamilyData d = family_pipeline();
    Tc2Result t = tc2(assemble_pi(d.connection));
    bool ok = t.tr_curvature_zero && t.closed;

    // the trace expansion with the eight forms as abstract generators
    FrameBuilder b({"om", "om1", "om2", "ph", "om11", "ph1", "ph2", "psi"});
    FramePtr frame = b.finalize();
    ConnectionForms c;
    c.omega = Form::basis(frame, "om");
    c.omega1 = Form::basis(frame, "om1");
    c.omega2 = Form::basis(frame, "om2");
    c.phi = Form::basis(frame, "ph");
    c.omega11 = Form::basis(frame, "om11");
    c.phi1 = Form::basis(frame, "ph1");
    c.phi2 = Form::basis(frame, "ph2");
    c.psi = Form::basis(frame, "psi");
    MatrixForm pi = assemble_pi(c);
    Form t3 = trace_wedge(mat_wedge(pi, pi), pi);
    Scalar half = Scalar::fraction(1, 2);
    Form rhs = wedge(wedge(c.omega, c.phi) + wedge(c.omega1, c.omega2), c.psi) *
                   Scalar::fraction(3, 2) +
               wedge(c.omega, c.phi1, c.phi2) * Scalar::integer(3) +
               wedge(c.omega1, c.phi * half + c.omega11, c.phi2) * Scalar::integer(3) -
               wedge(c.omega2, c.phi * half - c.omega11, c.phi1) * Scalar::integer(3);
    ok = ok && (t3 - rhs).is_zero();

    // tr(h^-1 dh ^ dh^-1 ^ dh) = 0 for a symbolic upper-triangular element
    FrameBuilder mb({"m1", "m2", "m3", "m4", "m5"});
    SymbolId al = sym("acc_l62_al"), be = sym("acc_l62_be"), ga = sym("acc_l62_ga"),
             de = sym("acc_l62_de"), ep = sym("acc_l62_ep");
    mb.set_coordinate_differential(al, mb.basis("m1") * Scalar::variable(al));
    mb.set_coordinate_differential(be, mb.basis("m2") * Scalar::variable(be));
    mb.set_coordinate_differential(ga, mb.basis("m3"));
    mb.set_coordinate_differential(de, mb.basis("m4"));
    mb.set_coordinate_differential(ep, mb.basis("m5"));
    FramePtr mframe = mb.finalize();
    BorelElement h{Scalar::variable(al), Scalar::variable(be), Scalar::variable(ga),
                   Scalar::variable(de), Scalar::variable(ep)};
    MatrixForm hm = MatrixForm::from_scalars(mframe, h.matrix());
    MatrixForm hinv = MatrixForm::from_scalars(mframe, h.inverse_matrix());
    Form l62 = trace_wedge(mat_wedge(mat_wedge(hinv, mat_d(hm)), mat_d(hinv)), mat_d(hm));
    ok = ok && l62.is_zero(mframe->relations());
    return ok;
  });

  gate.run("criterion 8: randomized exact property suites (>= 100 instances each)", [] {
    bool ok = suite_d_square(110, 0xacc1) == 0;
    ok = ok && suite_graded_leibniz(110, 0xacc2) == 0;
    ok = ok && suite_graded_commutativity(110, 0xacc3) == 0;
    ok = ok && suite_field_axioms(110, 0xacc4) == 0;
    ok = ok && suite_reduction_properties(105, 0xacc5) == 0;
    return ok;
  });

  gate.run("criterion 9: rigidity statements covered by the verification suites", [] {
    // The existence/rigidity theorems and the first-variation formula are not
    // desk-scale computations; their computable shadows are the
    // structure-equation residuals, the gauge law, and the flatness
    // predicate, which the suites above run. This line asserts those suites
    // are wired in and green on the family input.
    FullReport fr = full_report(su2_family(Su2FamilyParams::symbolic_xyz()).structure);
    bool ok = fr.structure_equations.all_pass && !fr.curvature.flat;
    BorelElement h{Scalar::named("acc_al"), Scalar::named("acc_be"), Scalar::named("acc_ga"),
                   Scalar::named("acc_de"), Scalar::named("acc_ep")};
    GaugeReport rep = verify_gauge_covariance(fr.connection, h, fr.curvature.Q1,
                                              fr.curvature.Q2);
    return ok && rep.all_zero;
  });

  std::printf("total time: %.2fs\n", gate.total_seconds);
  if (gate.total_seconds >= 60.0) {
    std::printf("FAIL total-time budget (60 s) exceeded\n");
    ++gate.failed;
  }
  if (gate.failed > 0) {
    std::printf("%d criterion(s) failed\n", gate.failed);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
