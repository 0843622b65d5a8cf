#include "flagcurv/report.hpp"

#include <openssl/evp.h>

#include <sstream>

#include "flagcurv/catalog.hpp"
#include "flagcurv/errors.hpp"
#include "flagcurv/printer.hpp"

namespace flagcurv {

namespace {

using json = nlohmann::ordered_json;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ShapeViolation:
    case ErrorKind::CrossCheckMismatch:
    case ErrorKind::NonTerminatingReduction:
      return 1;
    default:
      return 2;
  }
}

json residual_entry(const NamedResidual& e) {
  return json{{"name", e.name}, {"residual", to_string(e.residual)}, {"zero", e.zero}};
}

json residual_list(const std::vector<NamedResidual>& entries) {
  json out = json::array();
  for (const auto& e : entries) out.push_back(residual_entry(e));
  return out;
}

std::string scal(const Scalar& s, const RelationSet& rel) { return to_string(s, rel); }

struct Emitter {
  json& doc;
  std::ostringstream human;
  const RelationSet& rel;

  void stage(const std::string& name, bool ok) {
    doc["stages"].push_back(json{{"name", name}, {"status", ok ? "ok" : "failed"}});
    human << (ok ? "stage " : "FAILED stage ") << name << (ok ? ": ok" : "") << "\n";
  }
  void value(json& into, const std::string& key, const Scalar& s) {
    into[key] = scal(s, rel);
  }
  void line(const std::string& key, const std::string& v) {
    human << "  " << key << " = " << v << "\n";
  }
  void residuals(const std::string& title, const std::vector<NamedResidual>& entries) {
    for (const auto& e : entries) {
      if (e.zero) {
        human << "  pass " << e.name << "\n";
      } else {
        human << "  FAIL " << e.name << "  residual: " << to_string(e.residual) << "\n";
      }
    }
    (void)title;
  }
};

json reduction_json(const ReductionOutput& r, const RelationSet& rel) {
  json j;
  j["theta11"] = to_string(r.theta11);
  j["tau1"] = to_string(r.tau1);
  j["tau2"] = to_string(r.tau2);
  j["z"] = json{{"z112", scal(r.z112, rel)}, {"z110", scal(r.z110, rel)},
                {"z120", scal(r.z120, rel)}, {"z212", scal(r.z212, rel)},
                {"z210", scal(r.z210, rel)}, {"z220", scal(r.z220, rel)}};
  j["tau21"] = scal(r.tau21, rel);
  j["tau12"] = scal(r.tau12, rel);
  return j;
}

json coefficients_json(const CurvatureReport& c, const RelationSet& rel) {
  json j;
  for (auto [name, value] : std::initializer_list<std::pair<const char*, const Scalar*>>{
           {"R", &c.R}, {"W1", &c.W1}, {"W2", &c.W2}, {"S11", &c.S11}, {"S21", &c.S21},
           {"S12", &c.S12}, {"S22", &c.S22}, {"tau21", &c.tau21}, {"tau12", &c.tau12},
           {"R0", &c.R0}, {"R1", &c.R1}, {"R2", &c.R2}, {"R00", &c.R00}, {"R01", &c.R01},
           {"R02", &c.R02}, {"R11", &c.R11}, {"R12", &c.R12}, {"R21", &c.R21}, {"R22", &c.R22},
           {"W01", &c.W01}, {"W11", &c.W11}, {"W21", &c.W21}, {"W02", &c.W02}, {"W12", &c.W12},
           {"W22", &c.W22}})
    j[name] = scal(*value, rel);
  return j;
}

json embedding_json(const CurvatureReport& c, const RelationSet& rel) {
  return json{{"c", scal(c.c, rel)}, {"E1", scal(c.E1, rel)}, {"E2", scal(c.E2, rel)},
              {"G", scal(c.G, rel)}};
}

json invariants_json(const CurvatureReport& c, const RelationSet& rel) {
  return json{{"Q1", scal(c.Q1, rel)}, {"Q2", scal(c.Q2, rel)}, {"U1", scal(c.U1, rel)},
              {"U2", scal(c.U2, rel)}, {"flat", c.flat}};
}

json bianchi_json(const CurvatureReport& c, const RelationSet& rel) {
  return json{{"S1", scal(c.S1, rel)}, {"T1", scal(c.T1, rel)}, {"S2", scal(c.S2, rel)},
              {"T2", scal(c.T2, rel)}, {"A", scal(c.A, rel)}, {"B", scal(c.B, rel)},
              {"C", scal(c.C, rel)}, {"D", scal(c.D, rel)}, {"E", scal(c.E, rel)}};
}

struct PipelineData {
  ReductionOutput reduction;
  CurvatureReport curvature;
  ConnectionForms connection;
  ResidualReport structure;
};

PipelineData run_pipeline(const PseudoFlagStructure& p, Emitter& em, json& doc, bool full) {
  PipelineData d;
  const RelationSet& rel = p.frame()->relations();
  d.reduction = reduce_pseudo_flag(p);
  em.stage("reduce", true);
  doc["reduction"] = reduction_json(d.reduction, rel);
  d.curvature = curvature_coefficients(p, d.reduction);
  em.stage("coefficients", true);
  doc["coefficients"] = coefficients_json(d.curvature, rel);
  d.connection = embed_to_connection(p, d.reduction, d.curvature);
  em.stage("embed", true);
  doc["embedding"] = embedding_json(d.curvature, rel);
  d.structure = verify_structure_equations(p, d.reduction, d.connection);
  em.stage("structure-equations", d.structure.all_pass);
  doc["structure_equations"] = residual_list(d.structure.entries);
  em.residuals("structure equations", d.structure.entries);
  if (!d.structure.all_pass) return d;
  if (full) {
    curvature_invariants(p, d.reduction, d.connection, d.curvature);
    em.stage("invariants", true);
    doc["invariants"] = invariants_json(d.curvature, rel);
    bianchi_checks(p, d.connection, d.curvature);
    em.stage("bianchi", true);
    doc["bianchi"] = bianchi_json(d.curvature, rel);
    invariant_integrand(p, d.reduction, d.connection, d.curvature);
    em.stage("integrand", true);
    doc["integrand"] = json{{"form", to_string(d.curvature.integrand)},
                            {"transcendental_factor", d.curvature.transcendental_factor}};
  }
  return d;
}

}  // namespace

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xf]);
  }
  return out;
}

CommandResult run_command(const std::string& command, const std::string& input_text,
                          const CommandOptions& options) {
  CommandResult result;
  json& doc = result.report;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["command"] = command;
  doc["input_digest"] = sha256_hex(input_text);
  doc["stages"] = json::array();

  bool verification_failed = false;

  try {
    BuiltDocument built = build_document_from_text(input_text);
    const RelationSet& rel = built.frame->relations();
    Emitter emitter{doc, {}, rel};

    ConsistencyReport cons = check_frame_consistency(built.frame);
    doc["frame"] = json{{"basis", built.input.frame_names}, {"consistent", cons.usable}};
    emitter.stage("frame-consistency", cons.usable);
    if (!cons.usable || command == "check") {
      json list = json::array();
      for (const auto& e : cons.entries)
        list.push_back(json{{"name", "d^2 " + e.name}, {"residual", to_string(e.residual)},
                            {"zero", e.zero}});
      doc["frame"]["residuals"] = list;
      for (const auto& e : cons.entries)
        if (!e.zero)
          emitter.human << "  FAIL d^2 " << e.name << "  residual: " << to_string(e.residual)
                        << "\n";
    }
    if (!cons.usable) {
      verification_failed = true;
    } else if (command == "check") {
      if (built.pseudoflag_names) {
        PseudoFlagStructure p = make_pseudoflag(built);
        PipelineData d = run_pipeline(p, emitter, doc, /*full=*/false);
        verification_failed = !d.structure.all_pass;
      }
    } else if (command == "reduce") {
      PseudoFlagStructure p = make_pseudoflag(built);
      const RelationSet& prel = p.frame()->relations();
      ReductionOutput r = reduce_pseudo_flag(p);
      emitter.stage("reduce", true);
      doc["reduction"] = reduction_json(r, prel);
      emitter.line("theta11", to_string(r.theta11));
      emitter.line("tau1", to_string(r.tau1));
      emitter.line("tau2", to_string(r.tau2));
    } else if (command == "curvature") {
      PseudoFlagStructure p = make_pseudoflag(built);
      PipelineData d = run_pipeline(p, emitter, doc, /*full=*/true);
      verification_failed = !d.structure.all_pass;
      if (!verification_failed) {
        const RelationSet& prel = p.frame()->relations();
        emitter.line("Q1", scal(d.curvature.Q1, prel));
        emitter.line("Q2", scal(d.curvature.Q2, prel));
        emitter.line("U1", scal(d.curvature.U1, prel));
        emitter.line("U2", scal(d.curvature.U2, prel));
        emitter.line("flat", d.curvature.flat ? "true" : "false");
      }
    } else if (command == "invariant") {
      PseudoFlagStructure p = make_pseudoflag(built);
      PipelineData d = run_pipeline(p, emitter, doc, /*full=*/true);
      verification_failed = !d.structure.all_pass;
      if (!verification_failed) {
        Form integrand = d.curvature.integrand;
        if (options.kill_fiber || options.volume_expression) {
          integrand = pullback_section(integrand, {p.lambda_name()}, {});
          doc["integrand_killed_fiber"] =
              json{{"form", to_string(integrand)},
                   {"transcendental_factor", d.curvature.transcendental_factor}};
        }
        emitter.line("integrand", to_string(integrand));
        emitter.line("transcendental_factor", d.curvature.transcendental_factor);
        if (options.volume_expression) {
          Scalar volume =
              evaluate_scalar(parse_expression(*options.volume_expression), built.scope);
          Scalar coefficient =
              p.component(integrand, {p.theta(), p.theta1(), p.theta2()});
          Scalar mu = volume * coefficient;
          doc["mu"] = json{{"value", scal(mu, p.frame()->relations())},
                           {"transcendental_factor", d.curvature.transcendental_factor}};
          emitter.line("mu", scal(mu, p.frame()->relations()));
        }
      }
    } else if (command == "gauge") {
      if (!built.gauge) fail(ErrorKind::ParseError, "the gauge command needs a [gauge] block");
      PseudoFlagStructure p = make_pseudoflag(built);
      PipelineData d = run_pipeline(p, emitter, doc, /*full=*/true);
      verification_failed = !d.structure.all_pass;
      if (!verification_failed) {
        GaugeReport gr = verify_gauge_covariance(d.connection, *built.gauge, d.curvature.Q1,
                                                 d.curvature.Q2);
        emitter.stage("gauge-covariance", gr.all_zero);
        doc["gauge"] = json{{"residuals", residual_list(gr.residuals)},
                            {"Q1_transformed", scal(gr.Q1_transformed, rel)},
                            {"Q2_transformed", scal(gr.Q2_transformed, rel)},
                            {"all_zero", gr.all_zero}};
        emitter.residuals("gauge", gr.residuals);
        verification_failed = !gr.all_zero;
      }
    } else if (command == "cr") {
      if (!built.conjugation)
        fail(ErrorKind::ParseError, "the cr command needs a [conjugation] block");
      PseudoFlagStructure p = make_pseudoflag(built);
      PipelineData d = run_pipeline(p, emitter, doc, /*full=*/true);
      verification_failed = !d.structure.all_pass;
      if (!verification_failed) {
        CrReport cr = check_cr_reality(d.connection, d.curvature, *built.conjugation);
        emitter.stage("cr-reality", cr.all_pass);
        doc["cr"] = json{{"premise_holds", cr.premise_holds},
                         {"conditions", residual_list(cr.conditions)},
                         {"all_pass", cr.all_pass}};
        emitter.residuals("cr", cr.conditions);
        verification_failed = !cr.all_pass;
      }
    } else {
      fail(ErrorKind::ParseError, "unknown command '" + command + "'");
    }

    doc["status"] = verification_failed ? "verification_failed" : "ok";
    result.exit_code = verification_failed ? 1 : 0;
    result.human = emitter.human.str() +
                   (verification_failed ? "verification FAILED\n" : "ok\n");
    return result;
  } catch (const Error& e) {
    int code = exit_code_for(e.kind());
    doc["status"] = code == 2 ? "input_error" : "verification_failed";
    doc["error"] = json{{"kind", error_kind_name(e.kind())}, {"message", e.what()}};
    result.exit_code = code;
    result.human = std::string("error (") + error_kind_name(e.kind()) + "): " + e.what() + "\n";
    return result;
  }
}

}  // namespace flagcurv
