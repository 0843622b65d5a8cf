#include "flagcurv/document.hpp"

#include <algorithm>

#include "flagcurv/errors.hpp"

namespace flagcurv {

BuiltDocument build_document(const InputDocument& input) {
  BuiltDocument out;
  out.input = input;

  for (const auto& name : input.constants) out.scope.symbols[name] = sym(name);
  for (const auto& name : input.coordinates) out.scope.symbols[name] = sym(name);

  RelationSet relations;
  {
    NameScope scalar_scope = out.scope;  // frame still null: scalar expressions only
    for (const auto& expr : input.relations) {
      Scalar s = evaluate_scalar(expr, scalar_scope);
      if (s.is_syntactic_zero())
        fail(ErrorKind::BadRelation, "relation is identically zero");
      relations.add_vanishing(s.num());
    }
  }

  if (input.frame_names.empty())
    fail(ErrorKind::ParseError, "the document declares no [frame] section");

  FrameBuilder builder(input.frame_names, std::move(relations));
  out.scope.frame = builder.frame();

  std::vector<std::string> coordinate_rules;
  for (const auto& [name, expr] : input.differentials) {
    Form value = evaluate(expr, out.scope);
    if (builder.frame()->basis_index(name) >= 0) {
      builder.set_d_rule(name, std::move(value));
    } else if (std::find(input.coordinates.begin(), input.coordinates.end(), name) !=
               input.coordinates.end()) {
      builder.set_coordinate_differential(out.scope.symbols.at(name), std::move(value));
      coordinate_rules.push_back(name);
    } else {
      fail(ErrorKind::UndeclaredName,
           "differential declared for '" + name + "', which is neither a basis form nor a "
           "coordinate");
    }
  }
  for (const auto& name : input.frame_names) {
    bool declared = false;
    for (const auto& [n, e] : input.differentials) declared = declared || n == name;
    if (!declared)
      fail(ErrorKind::ParseError, "missing d-rule for basis form '" + name + "'");
  }
  for (const auto& name : input.coordinates) {
    if (std::find(coordinate_rules.begin(), coordinate_rules.end(), name) ==
        coordinate_rules.end())
      fail(ErrorKind::ParseError, "missing differential for coordinate '" + name + "'");
  }
  out.frame = builder.finalize();
  out.scope.frame = out.frame;

  if (input.has_pseudoflag) {
    const char* keys[] = {"theta", "Z1", "Z2", "scale", "fiber"};
    for (const char* k : keys)
      if (!input.pseudoflag.count(k))
        fail(ErrorKind::ParseError, std::string("pseudoflag block is missing '") + k + "'");
    const std::string& scale_name = input.pseudoflag.at("scale");
    auto it = out.scope.symbols.find(scale_name);
    if (it == out.scope.symbols.end())
      fail(ErrorKind::UndeclaredName, "pseudoflag scale '" + scale_name + "' is not declared");
    out.pseudoflag_names = PseudoFlagNames{input.pseudoflag.at("theta"), input.pseudoflag.at("Z1"),
                                           input.pseudoflag.at("Z2"), input.pseudoflag.at("fiber"),
                                           it->second};
  }

  if (input.has_conjugation) {
    ConjugationSpec spec;
    for (const auto& [name, expr] : input.conjugation) {
      if (out.frame->basis_index(name) >= 0) {
        Form image = evaluate(expr, out.scope);
        if (image.empty()) image = Form(out.frame, 1);
        if (image.degree() != 1)
          fail(ErrorKind::IllFormedInvolution,
               "conjugation image of basis form '" + name + "' must be a 1-form");
        spec.basis_images[name] = std::move(image);
      } else {
        auto sit = out.scope.symbols.find(name);
        if (sit == out.scope.symbols.end())
          fail(ErrorKind::UndeclaredName, "conjugation image for undeclared '" + name + "'");
        spec.symbol_images[sit->second] = evaluate_scalar(expr, out.scope);
      }
    }
    // untouched basis forms conjugate to themselves
    for (const auto& name : input.frame_names)
      if (!spec.basis_images.count(name)) spec.basis_images[name] = Form::basis(out.frame, name);
    out.conjugation = std::move(spec);
  }

  if (input.has_gauge) {
    BorelElement h = BorelElement::identity();
    auto entry = [&](const char* key, Scalar fallback) {
      auto git = input.gauge.find(key);
      return git == input.gauge.end() ? fallback : evaluate_scalar(git->second, out.scope);
    };
    h.alpha = entry("alpha", Scalar::one());
    h.beta = entry("beta", Scalar::one());
    h.gamma = entry("gamma", Scalar::zero());
    h.delta = entry("delta", Scalar::zero());
    h.eps = entry("eps", Scalar::zero());
    out.gauge = std::move(h);
  }

  return out;
}

BuiltDocument build_document_from_text(const std::string& text) {
  return build_document(parse_document(text));
}

PseudoFlagStructure make_pseudoflag(const BuiltDocument& doc) {
  if (!doc.pseudoflag_names)
    fail(ErrorKind::ParseError, "this command needs a [pseudoflag] block");
  const PseudoFlagNames& n = *doc.pseudoflag_names;
  return PseudoFlagStructure(doc.frame, n.theta, n.z1, n.z2, n.scale, n.fiber);
}

}  // namespace flagcurv
