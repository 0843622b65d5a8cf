#include <doctest.h>

#include "flagcurv/catalog.hpp"
#include "flagcurv/errors.hpp"
#include "flagcurv/printer.hpp"

using namespace flagcurv;

namespace {

// d(theta) = Z1^Z2, dZ1 = dZ2 = 0, da = a lam
PseudoFlagStructure abelian_structure() {
  FrameBuilder b({"theta", "Z1", "Z2", "lam"});
  b.set_d_rule("theta", wedge(b.basis("Z1"), b.basis("Z2")));
  b.set_d_rule("Z1", Form(b.frame(), 2));
  b.set_d_rule("Z2", Form(b.frame(), 2));
  b.set_d_rule("lam", Form(b.frame(), 2));
  SymbolId a = sym("a");
  b.set_coordinate_differential(a, b.basis("lam") * Scalar::variable(a));
  return PseudoFlagStructure(b.finalize(), "theta", "Z1", "Z2", a, "lam");
}

}  // namespace

TEST_CASE("reduction of the symbolic family") {
  Su2Family fam = su2_family(Su2FamilyParams::symbolic_xyz());
  const PseudoFlagStructure& p = fam.structure;
  ReductionOutput r = reduce_pseudo_flag(p);
  Scalar x = fam.x, y = fam.y, z = fam.z, a = p.scale();

  SUBCASE("theta11 = -lam - x theta") {
    CHECK((r.theta11 - (-p.lambda_form() - p.theta() * x)).is_zero());
  }
  SUBCASE("tau1 = y a^2 theta2 and tau2 = z a^-2 theta1") {
    CHECK((r.tau1 - p.theta2() * (y * a * a)).is_zero());
    CHECK((r.tau2 - p.theta1() * (z / (a * a))).is_zero());
    CHECK(r.tau21.equals(y * a * a));
    CHECK(r.tau12.equals(z / (a * a)));
  }
  SUBCASE("the dZ expansion coefficients") {
    CHECK(r.z110.equals(-x));
    CHECK(r.z120.equals(-y));
    CHECK(r.z210.equals(-z));
    CHECK(r.z220.equals(x));
    CHECK(r.z112.is_zero());
    CHECK(r.z212.is_zero());
  }
  SUBCASE("d(tau1) against the recorded expansion") {
    // d(tau1) = y a^2 theta2 ^ theta11 + yz theta ^ theta1 - 2 a^2 xy theta ^ theta2
    Form expected = wedge(p.theta2(), r.theta11) * (y * a * a) +
                    wedge(p.theta(), p.theta1()) * (y * z) +
                    wedge(p.theta(), p.theta2()) * (Scalar::integer(-2) * a * a * x * y);
    CHECK((exterior_derivative(r.tau1) - expected).is_zero());
  }
}

TEST_CASE("reduction corner cases") {
  SUBCASE("abelian structure: theta11 = -lam, no torsion") {
    PseudoFlagStructure p = abelian_structure();
    ReductionOutput r = reduce_pseudo_flag(p);
    CHECK((r.theta11 + p.lambda_form()).is_zero());
    CHECK(r.tau1.empty());
    CHECK(r.tau2.empty());
  }
  SUBCASE("x = 0 member: theta11 = -lam") {
    Su2Family fam = su2_family(
        Su2FamilyParams::from_xyz(Scalar::zero(), Scalar::named("y"), Scalar::named("z")));
    ReductionOutput r = reduce_pseudo_flag(fam.structure);
    CHECK((r.theta11 + fam.structure.lambda_form()).is_zero());
  }
  SUBCASE("a Z1^Z2 term in dZ2 lands in theta11 with the sign that closes the equations") {
    FrameBuilder b({"theta", "Z1", "Z2", "lam"});
    b.set_d_rule("theta", wedge(b.basis("Z1"), b.basis("Z2")));
    b.set_d_rule("Z1", Form(b.frame(), 2));
    b.set_d_rule("Z2", wedge(b.basis("Z1"), b.basis("Z2")));
    b.set_d_rule("lam", Form(b.frame(), 2));
    SymbolId a = sym("a");
    b.set_coordinate_differential(a, b.basis("lam") * Scalar::variable(a));
    PseudoFlagStructure p(b.finalize(), "theta", "Z1", "Z2", a, "lam");
    ReductionOutput r = reduce_pseudo_flag(p);
    CHECK((r.theta11 - (-p.lambda_form() + p.z1())).is_zero());
    // the defining equations hold (checked inside reduce, asserted here again)
    Form e14 = exterior_derivative(p.theta1()) - wedge(p.theta1(), r.theta11) -
               wedge(p.theta(), r.tau1);
    Form e15 = exterior_derivative(p.theta2()) + wedge(p.theta2(), r.theta11) -
               wedge(p.theta(), r.tau2);
    CHECK(e14.is_zero());
    CHECK(e15.is_zero());
  }
  SUBCASE("d(theta) != Z1 ^ Z2 is rejected") {
    FrameBuilder b({"theta", "Z1", "Z2", "lam"});
    b.set_d_rule("theta", Form(b.frame(), 2));
    b.set_d_rule("Z1", Form(b.frame(), 2));
    b.set_d_rule("Z2", Form(b.frame(), 2));
    b.set_d_rule("lam", Form(b.frame(), 2));
    SymbolId a = sym("a");
    b.set_coordinate_differential(a, b.basis("lam") * Scalar::variable(a));
    CHECK_THROWS_AS(PseudoFlagStructure(b.finalize(), "theta", "Z1", "Z2", a, "lam"), Error);
  }
  SUBCASE("a fiber term in dZ1 is rejected") {
    // dZ1 = Z1 ^ lam, dZ2 = -Z2 ^ lam keeps d^2 = 0 but is not of pseudo-flag shape
    FrameBuilder b({"theta", "Z1", "Z2", "lam"});
    b.set_d_rule("theta", wedge(b.basis("Z1"), b.basis("Z2")));
    b.set_d_rule("Z1", wedge(b.basis("Z1"), b.basis("lam")));
    b.set_d_rule("Z2", -wedge(b.basis("Z2"), b.basis("lam")));
    b.set_d_rule("lam", Form(b.frame(), 2));
    SymbolId a = sym("a");
    b.set_coordinate_differential(a, b.basis("lam") * Scalar::variable(a));
    PseudoFlagStructure p(b.finalize(), "theta", "Z1", "Z2", a, "lam");
    CHECK_THROWS_AS(reduce_pseudo_flag(p), Error);
  }
}

TEST_CASE("curvature coefficients of the family") {
  Su2Family fam = su2_family(Su2FamilyParams::symbolic_xyz());
  const PseudoFlagStructure& p = fam.structure;
  ReductionOutput r = reduce_pseudo_flag(p);
  CurvatureReport rep = curvature_coefficients(p, r);
  Scalar x = fam.x, y = fam.y, z = fam.z, a = p.scale();

  SUBCASE("R = -x, W1 = W2 = 0") {
    CHECK(rep.R.equals(-x));
    CHECK(rep.W1.is_zero());
    CHECK(rep.W2.is_zero());
  }
  SUBCASE("coefficient lookup on d(theta11)") {
    Form dth11 = exterior_derivative(r.theta11);
    CHECK(p.component(dth11, {p.theta1(), p.theta2()}).equals(-x));
    CHECK(p.component(dth11, {p.theta1(), p.theta()}).is_zero());
  }
  SUBCASE("torsion derivatives") {
    CHECK(rep.S11.equals(y * z));
    CHECK(rep.S21.equals(Scalar::integer(-2) * a * a * x * y));
    CHECK(rep.S12.equals(Scalar::integer(2) * x * z / (a * a)));
    CHECK(rep.S22.equals(y * z));
  }
  SUBCASE("all derivative expansions vanish for the homogeneous family") {
    for (const Scalar* s : {&rep.R0, &rep.R1, &rep.R2, &rep.W01, &rep.W11, &rep.W21,
                            &rep.W02, &rep.W12, &rep.W22, &rep.R11, &rep.R12, &rep.R21, &rep.R22})
      CHECK(s->is_zero());
  }
}

TEST_CASE("embedding into the full connection") {
  Su2Family fam = su2_family(Su2FamilyParams::symbolic_xyz());
  const PseudoFlagStructure& p = fam.structure;
  ReductionOutput r = reduce_pseudo_flag(p);
  CurvatureReport rep = curvature_coefficients(p, r);
  ConnectionForms c = embed_to_connection(p, r, rep);
  Scalar x = fam.x, y = fam.y, z = fam.z;

  SUBCASE("c = x/4, E1 = E2 = 0, G = -2yz - x^2/8") {
    CHECK(rep.c.equals(x * Scalar::fraction(1, 4)));
    CHECK(rep.E1.is_zero());
    CHECK(rep.E2.is_zero());
    CHECK(rep.G.equals(Scalar::integer(-2) * y * z - x * x * Scalar::fraction(1, 8)));
  }
  SUBCASE("omega11 = -lam - (3x/4) theta") {
    CHECK((c.omega11 - (-p.lambda_form() - p.theta() * (Scalar::fraction(3, 4) * x))).is_zero());
  }
  SUBCASE("abelian: the upper forms vanish and omega11 = -lam") {
    PseudoFlagStructure ab = abelian_structure();
    ReductionOutput ra = reduce_pseudo_flag(ab);
    CurvatureReport repa = curvature_coefficients(ab, ra);
    ConnectionForms ca = embed_to_connection(ab, ra, repa);
    CHECK(ca.phi1.empty());
    CHECK(ca.phi2.empty());
    CHECK(ca.psi.empty());
    CHECK((ca.omega11 + ab.lambda_form()).is_zero());
  }
}

TEST_CASE("structure equations on the embedded connection") {
  Su2Family fam = su2_family(Su2FamilyParams::symbolic_xyz());
  const PseudoFlagStructure& p = fam.structure;
  ReductionOutput r = reduce_pseudo_flag(p);
  CurvatureReport rep = curvature_coefficients(p, r);
  ConnectionForms c = embed_to_connection(p, r, rep);
  ResidualReport res = verify_structure_equations(p, r, c);
  REQUIRE(res.entries.size() == 8);
  CHECK(res.all_pass);

  SUBCASE("the five exact equations vanish identically, fiber directions included") {
    for (int k = 0; k < 5; ++k) {
      INFO(res.entries[k].name);
      CHECK(res.entries[k].residual.is_zero());
    }
  }
  SUBCASE("the first curvature residual is -(3/2) x y a^2 theta ^ theta2") {
    Scalar x = fam.x, y = fam.y, a = p.scale();
    Form expected =
        wedge(p.theta(), p.theta2()) * (Scalar::fraction(-3, 2) * x * y * a * a);
    CHECK(res.entries[5].name == "Eq. 27");
    CHECK((res.entries[5].residual - expected).is_zero());
  }
  SUBCASE("everything vanishes for the flat abelian structure") {
    PseudoFlagStructure ab = abelian_structure();
    ReductionOutput ra = reduce_pseudo_flag(ab);
    CurvatureReport repa = curvature_coefficients(ab, ra);
    ConnectionForms ca = embed_to_connection(ab, ra, repa);
    ResidualReport resa = verify_structure_equations(ab, ra, ca);
    for (const auto& e : resa.entries) {
      INFO(e.name);
      CHECK(e.residual.is_zero());
    }
  }
}

TEST_CASE("curvature invariants, three routes") {
  Su2Family fam = su2_family(Su2FamilyParams::symbolic_xyz());
  const PseudoFlagStructure& p = fam.structure;
  ReductionOutput r = reduce_pseudo_flag(p);
  CurvatureReport rep = curvature_coefficients(p, r);
  ConnectionForms c = embed_to_connection(p, r, rep);
  curvature_invariants(p, r, c, rep);
  Scalar x = fam.x, y = fam.y, z = fam.z, a = p.scale();

  SUBCASE("the family invariants") {
    CHECK(rep.Q1.equals(Scalar::fraction(-3, 2) * x * y * a * a));
    CHECK(rep.Q2.equals(Scalar::fraction(3, 2) * x * z / (a * a)));
    CHECK(rep.U1.is_zero());
    CHECK(rep.U2.is_zero());
    CHECK(!rep.flat);
  }
  SUBCASE("x = 0 member is flat") {
    Su2Family flat_fam = su2_family(
        Su2FamilyParams::from_xyz(Scalar::zero(), Scalar::named("y"), Scalar::named("z")));
    FullReport fr = full_report(flat_fam.structure);
    CHECK(fr.curvature.flat);
  }
  SUBCASE("y = z = 0 member (with x^2 = -1) is flat") {
    Su2Family flat_fam = su2_family(
        Su2FamilyParams::from_xyz(Scalar::named("x"), Scalar::zero(), Scalar::zero()));
    FullReport fr = full_report(flat_fam.structure);
    CHECK(fr.curvature.flat);
  }
  SUBCASE("abelian structure is flat") {
    FullReport fr = full_report(abelian_structure());
    CHECK(fr.curvature.flat);
    CHECK(fr.curvature.Q1.is_zero());
  }
}

TEST_CASE("differential identities for the invariants") {
  Su2Family fam = su2_family(Su2FamilyParams::symbolic_xyz());
  FullReport fr = full_report(fam.structure);
  const CurvatureReport& rep = fr.curvature;
  Scalar x = fam.x, y = fam.y, z = fam.z, a = fam.structure.scale();

  // dQ1 + 2 Q1 omega11 = (9/4) x^2 y a^2 theta  (hand expansion:
  // dQ1 = -3 x y a^2 lam and omega11 = -lam - (3x/4) theta)
  CHECK(rep.S1.equals(Scalar::fraction(9, 4) * x * x * y * a * a));
  CHECK(rep.T1.is_zero());
  CHECK(rep.S2.equals(Scalar::fraction(9, 4) * x * x * z / (a * a)));
  CHECK(rep.T2.is_zero());
  // the dU1 line reduces to 2 Q2 phi1 = (3/4) x^2 z a^-2 theta1 + 3xyz theta2
  CHECK(rep.A.is_zero());
  CHECK(rep.B.equals(Scalar::fraction(3, 4) * x * x * z / (a * a)));
  CHECK(rep.C.equals(Scalar::integer(3) * x * y * z));
  // and the dU2 line to -2 Q1 phi2 = 3xyz theta1 - (3/4) x^2 y a^2 theta2
  CHECK(rep.D.is_zero());
  CHECK(rep.E.equals(Scalar::fraction(-3, 4) * x * x * y * a * a));
}

TEST_CASE("global invariant integrand") {
  Su2Family fam = su2_family(Su2FamilyParams::symbolic_xyz());
  const PseudoFlagStructure& p = fam.structure;
  FullReport fr = full_report(p);
  Scalar x = fam.x, y = fam.y, z = fam.z;

  SUBCASE("full integrand, fiber term included") {
    Form expected =
        wedge(p.theta(), p.theta1(), p.theta2()) *
            (Scalar::integer(-2) * y * z - x * x * Scalar::fraction(1, 2)) +
        wedge(p.lambda_form(), p.theta1(), p.theta2()) * (-(x * Scalar::fraction(1, 2)));
    CHECK((fr.curvature.integrand - expected).is_zero());
    CHECK(fr.curvature.transcendental_factor == "1/(8*pi^2)");
  }
  SUBCASE("killing the fiber leaves the horizontal coefficient") {
    Form killed = pullback_section(fr.curvature.integrand, {"lam"}, {});
    Form expected = wedge(p.theta(), p.theta1(), p.theta2()) *
                    (Scalar::integer(-2) * y * z - x * x * Scalar::fraction(1, 2));
    CHECK((killed - expected).is_zero());
  }
  SUBCASE("flat abelian integrand vanishes") {
    FullReport ab = full_report(abelian_structure());
    CHECK(ab.curvature.integrand.is_zero());
  }
}

TEST_CASE("reality conditions under the antilinear involution") {
  Su2Family fam = su2_family(Su2FamilyParams::symbolic_xyz());
  const PseudoFlagStructure& p = fam.structure;
  FullReport fr = full_report(p);
  SymbolId xs = sym("x"), ys = sym("y"), zs = sym("z"), as = sym("a");
  FramePtr frame = p.frame();

  auto family_conjugation = [&]() {
    ConjugationSpec conj;
    conj.symbol_images[xs] = -Scalar::variable(xs);
    conj.symbol_images[ys] = -Scalar::variable(zs);
    conj.symbol_images[zs] = -Scalar::variable(ys);
    conj.symbol_images[as] = Scalar::i() / Scalar::variable(as);
    conj.basis_images["theta"] = p.theta();
    conj.basis_images["Z1"] = -p.z2();
    conj.basis_images["Z2"] = p.z1();
    conj.basis_images["lam"] = -p.lambda_form();
    return conj;
  };

  SUBCASE("the family satisfies all reality conditions") {
    CrReport cr = check_cr_reality(fr.connection, fr.curvature, family_conjugation());
    CHECK(cr.premise_holds);
    for (const auto& e : cr.conditions) {
      INFO(e.name);
      CHECK(e.zero);
    }
    CHECK(cr.all_pass);
  }
  SUBCASE("conjugating Q2 by hand reproduces Q1") {
    ConjugationSpec conj = family_conjugation();
    // conj((3/2) x z a^-2) = (3/2)(-x)(-y)(-a^2) = -(3/2) x y a^2
    CHECK(conj.apply(fr.curvature.Q2).equals(fr.curvature.Q1));
  }
  SUBCASE("an all-real image map violates the premise and is flagged") {
    ConjugationSpec conj;
    conj.symbol_images[xs] = Scalar::variable(xs);
    conj.symbol_images[ys] = Scalar::variable(ys);
    conj.symbol_images[zs] = Scalar::variable(zs);
    conj.symbol_images[as] = Scalar::variable(as);
    for (const auto& name : {"theta", "Z1", "Z2", "lam"})
      conj.basis_images[name] = Form::basis(frame, name);
    CrReport cr = check_cr_reality(fr.connection, fr.curvature, conj);
    CHECK(!cr.premise_holds);
    CHECK(cr.conditions.size() == 1);  // only the premise entry
  }
  SUBCASE("a non-involutive frame map is rejected") {
    ConjugationSpec conj = family_conjugation();
    conj.basis_images["theta"] = p.z1();  // theta -> Z1 -> -Z2: not an involution
    CHECK_THROWS_AS(check_cr_reality(fr.connection, fr.curvature, conj), Error);
  }
  SUBCASE("the flat abelian structure passes trivially") {
    PseudoFlagStructure ab = abelian_structure();
    FullReport fab = full_report(ab);
    ConjugationSpec conj;
    conj.symbol_images[as] = Scalar::i() / Scalar::variable(as);
    conj.basis_images["theta"] = ab.theta();
    conj.basis_images["Z1"] = -ab.z2();
    conj.basis_images["Z2"] = ab.z1();
    conj.basis_images["lam"] = -ab.lambda_form();
    CrReport cr = check_cr_reality(fab.connection, fab.curvature, conj);
    CHECK(cr.premise_holds);
    CHECK(cr.all_pass);
  }
}

TEST_CASE("full report aggregation") {
  Su2Family fam = su2_family(Su2FamilyParams::symbolic_xyz());
  FullReport fr = full_report(fam.structure);
  Scalar x = fam.x, y = fam.y, z = fam.z, a = fam.structure.scale();
  CHECK(fr.failed_stage.empty());
  CHECK(fr.curvature.Q1.equals(Scalar::fraction(-3, 2) * x * y * a * a));
  CHECK(fr.curvature.Q2.equals(Scalar::fraction(3, 2) * x * z / (a * a)));
  CHECK(fr.structure_equations.all_pass);
  CHECK(fr.curvature.has_bianchi);
}
