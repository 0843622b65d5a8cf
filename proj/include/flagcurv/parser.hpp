#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "flagcurv/form.hpp"

namespace flagcurv {

struct SourcePos {
  int line = 0;
  int col = 0;
  std::string str() const { return std::to_string(line) + ":" + std::to_string(col); }
};

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Kind { Integer, ImagUnit, Ident, Neg, Add, Sub, Mul, Div, Pow, Wedge };
  Kind kind;
  SourcePos pos;
  std::string literal;  // Integer digits or Ident name
  long exponent = 0;    // Pow
  ExprPtr lhs, rhs;
};

// Free-standing expression parser for the grammar: + - * / with the usual
// precedence, `^` wedge binding looser than `*`, except `atom ^ INTEGER`
// which is exponentiation binding tightly; parentheses; `i` imaginary unit.
ExprPtr parse_expression(const std::string& text, int line_number = 1);

// The .flag input document, section by section, unevaluated.
struct InputDocument {
  std::string source_text;
  std::vector<std::string> constants;
  std::vector<std::string> coordinates;
  std::vector<std::string> frame_names;
  std::vector<ExprPtr> relations;
  std::vector<std::pair<std::string, ExprPtr>> differentials;  // d NAME = EXPR
  bool has_pseudoflag = false;
  std::map<std::string, std::string> pseudoflag;  // theta/Z1/Z2/scale/fiber -> name
  bool has_conjugation = false;
  std::vector<std::pair<std::string, ExprPtr>> conjugation;  // conj NAME = EXPR
  bool has_gauge = false;
  std::map<std::string, ExprPtr> gauge;  // alpha,beta,gamma,delta,eps
};

InputDocument parse_document(const std::string& text);

// Symbol names visible to an expression evaluator.
struct NameScope {
  std::map<std::string, SymbolId> symbols;
  FramePtr frame;  // may be null while evaluating scalar-only sections
};

// Evaluates to a Form (a degree-0 form is a scalar); UndeclaredName carries
// the source position.
Form evaluate(const ExprPtr& expr, const NameScope& scope);
Scalar evaluate_scalar(const ExprPtr& expr, const NameScope& scope);

}  // namespace flagcurv
