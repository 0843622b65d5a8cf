#include "flagcurv/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "flagcurv/errors.hpp"

namespace flagcurv {

namespace {

enum class Tok { Integer, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Equals, End };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Integer: return "integer";
    case Tok::Ident: return "identifier";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Caret: return "'^'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Equals: return "'='";
    case Tok::End: return "end of expression";
  }
  return "?";
}

std::vector<Token> lex(const std::string& text, int line) {
  std::vector<Token> out;
  int col = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    SourcePos pos{line, col};
    if (ch == ' ' || ch == '\t') { ++i; ++col; continue; }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string digits;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        digits += text[i++];
        ++col;
      }
      out.push_back({Tok::Integer, digits, pos});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::string name;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        name += text[i++];
        ++col;
      }
      out.push_back({Tok::Ident, name, pos});
      continue;
    }
    Tok kind;
    switch (ch) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '=': kind = Tok::Equals; break;
      default:
        fail(ErrorKind::ParseError,
             pos.str() + ": unexpected character '" + std::string(1, ch) + "'");
    }
    out.push_back({kind, std::string(1, ch), pos});
    ++i;
    ++col;
  }
  out.push_back({Tok::End, "", {line, col}});
  return out;
}

class ExprParser {
 public:
  explicit ExprParser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    expect(Tok::End);
    return e;
  }

 private:
  const Token& peek(int ahead = 0) const {
    std::size_t k = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[k];
  }
  Token take() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  void expect(Tok t) {
    if (peek().kind != t)
      fail(ErrorKind::ParseError, peek().pos.str() + ": expected " + tok_name(t) + ", found " +
                                      (peek().kind == Tok::End ? "end of expression"
                                                               : "'" + peek().text + "'"));
    if (t != Tok::End) take();
  }

  static ExprPtr node(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

  ExprPtr expr() {
    ExprPtr left = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      Token op = take();
      ExprPtr right = term();
      left = node({op.kind == Tok::Plus ? ExprNode::Kind::Add : ExprNode::Kind::Sub, op.pos,
                   "", 0, left, right});
    }
    return left;
  }

  // wedge level: '^' binding looser than '*'
  ExprPtr term() {
    ExprPtr left = product();
    while (peek().kind == Tok::Caret) {
      Token op = take();
      ExprPtr right = product();
      left = node({ExprNode::Kind::Wedge, op.pos, "", 0, left, right});
    }
    return left;
  }

  ExprPtr product() {
    ExprPtr left = prefix();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      Token op = take();
      ExprPtr right = prefix();
      left = node({op.kind == Tok::Star ? ExprNode::Kind::Mul : ExprNode::Kind::Div, op.pos,
                   "", 0, left, right});
    }
    return left;
  }

  ExprPtr prefix() {
    if (peek().kind == Tok::Minus) {
      Token op = take();
      return node({ExprNode::Kind::Neg, op.pos, "", 0, prefix(), nullptr});
    }
    if (peek().kind == Tok::Plus) {
      take();
      return prefix();
    }
    return postfix();
  }

  // `atom ^ INTEGER` is exponentiation and binds tightly
  ExprPtr postfix() {
    ExprPtr base = atom();
    while (peek().kind == Tok::Caret && peek(1).kind == Tok::Integer) {
      Token op = take();
      Token e = take();
      long exponent = 0;
      try {
        exponent = std::stol(e.text);
      } catch (const std::exception&) {
        fail(ErrorKind::ParseError, e.pos.str() + ": exponent out of range");
      }
      base = node({ExprNode::Kind::Pow, op.pos, "", exponent, base, nullptr});
    }
    return base;
  }

  ExprPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Integer: {
        Token tok = take();
        return node({ExprNode::Kind::Integer, tok.pos, tok.text, 0, nullptr, nullptr});
      }
      case Tok::Ident: {
        Token tok = take();
        if (tok.text == "i")
          return node({ExprNode::Kind::ImagUnit, tok.pos, "", 0, nullptr, nullptr});
        return node({ExprNode::Kind::Ident, tok.pos, tok.text, 0, nullptr, nullptr});
      }
      case Tok::LParen: {
        take();
        ExprPtr inner = expr();
        expect(Tok::RParen);
        return inner;
      }
      default:
        fail(ErrorKind::ParseError,
             t.pos.str() + ": expected integer, identifier or '(', found " +
                 (t.kind == Tok::End ? "end of expression" : "'" + t.text + "'"));
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

ExprPtr parse_expression(const std::string& text, int line_number) {
  return ExprParser(lex(text, line_number)).parse();
}

InputDocument parse_document(const std::string& text) {
  InputDocument doc;
  doc.source_text = text;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  int line_no = 0;
  auto note_name = [&](std::vector<std::string>& into, const std::string& name, int line) {
    for (const auto& existing : doc.constants)
      if (existing == name)
        fail(ErrorKind::DuplicateDeclaration,
             std::to_string(line) + ": '" + name + "' already declared");
    for (const auto& existing : doc.coordinates)
      if (existing == name)
        fail(ErrorKind::DuplicateDeclaration,
             std::to_string(line) + ": '" + name + "' already declared");
    for (const auto& existing : doc.frame_names)
      if (existing == name)
        fail(ErrorKind::DuplicateDeclaration,
             std::to_string(line) + ": '" + name + "' already declared");
    into.push_back(name);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trimmed(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        fail(ErrorKind::ParseError, std::to_string(line_no) + ":1: unterminated section header");
      section = line.substr(1, line.size() - 2);
      const char* known[] = {"frame", "coordinates", "constants", "relations",
                             "differentials", "pseudoflag", "conjugation", "gauge"};
      bool ok = false;
      for (const char* k : known) ok = ok || section == k;
      if (!ok)
        fail(ErrorKind::ParseError,
             std::to_string(line_no) + ":1: unknown section '" + section + "'");
      if (section == "pseudoflag") {
        if (doc.has_pseudoflag)
          fail(ErrorKind::DuplicateDeclaration,
               std::to_string(line_no) + ": a second [pseudoflag] block");
        doc.has_pseudoflag = true;
      }
      if (section == "conjugation") doc.has_conjugation = true;
      if (section == "gauge") doc.has_gauge = true;
      continue;
    }
    if (section.empty())
      fail(ErrorKind::ParseError, std::to_string(line_no) + ":1: content before any section");

    if (section == "frame" || section == "coordinates" || section == "constants") {
      std::istringstream words(line);
      std::string w;
      while (words >> w) {
        auto toks = lex(w, line_no);
        if (toks.size() != 2 || toks[0].kind != Tok::Ident || w == "i")
          fail(ErrorKind::ParseError,
               std::to_string(line_no) + ": '" + w + "' is not a declarable identifier");
        if (section == "frame") note_name(doc.frame_names, w, line_no);
        else if (section == "coordinates") note_name(doc.coordinates, w, line_no);
        else note_name(doc.constants, w, line_no);
      }
      continue;
    }
    if (section == "relations") {
      doc.relations.push_back(parse_expression(line, line_no));
      continue;
    }
    if (section == "differentials") {
      auto toks = lex(line, line_no);
      if (toks.size() < 4 || toks[0].kind != Tok::Ident || toks[0].text != "d" ||
          toks[1].kind != Tok::Ident || toks[2].kind != Tok::Equals)
        fail(ErrorKind::ParseError,
             std::to_string(line_no) + ": expected 'd NAME = EXPR'");
      auto eq = line.find('=');
      doc.differentials.emplace_back(toks[1].text,
                                     parse_expression(line.substr(eq + 1), line_no));
      continue;
    }
    if (section == "pseudoflag") {
      auto eq = line.find('=');
      if (eq == std::string::npos)
        fail(ErrorKind::ParseError, std::to_string(line_no) + ": expected 'KEY = NAME'");
      std::string key = trimmed(line.substr(0, eq));
      std::string value = trimmed(line.substr(eq + 1));
      const char* keys[] = {"theta", "Z1", "Z2", "scale", "fiber"};
      bool ok = false;
      for (const char* k : keys) ok = ok || key == k;
      if (!ok)
        fail(ErrorKind::ParseError,
             std::to_string(line_no) + ": unknown pseudoflag key '" + key +
                 "' (expected theta, Z1, Z2, scale or fiber)");
      if (doc.pseudoflag.count(key))
        fail(ErrorKind::DuplicateDeclaration,
             std::to_string(line_no) + ": pseudoflag key '" + key + "' set twice");
      doc.pseudoflag[key] = value;
      continue;
    }
    if (section == "conjugation") {
      auto toks = lex(line, line_no);
      if (toks.size() < 4 || toks[0].kind != Tok::Ident || toks[0].text != "conj" ||
          toks[1].kind != Tok::Ident || toks[2].kind != Tok::Equals)
        fail(ErrorKind::ParseError,
             std::to_string(line_no) + ": expected 'conj NAME = EXPR'");
      auto eq = line.find('=');
      doc.conjugation.emplace_back(toks[1].text,
                                   parse_expression(line.substr(eq + 1), line_no));
      continue;
    }
    if (section == "gauge") {
      auto eq = line.find('=');
      if (eq == std::string::npos)
        fail(ErrorKind::ParseError, std::to_string(line_no) + ": expected 'ENTRY = EXPR'");
      std::string key = trimmed(line.substr(0, eq));
      // group-element entries accept both the short names and the long ones
      std::map<std::string, std::string> alias = {
          {"a", "alpha"}, {"b", "beta"}, {"c", "gamma"}, {"d", "delta"}, {"e", "eps"},
          {"alpha", "alpha"}, {"beta", "beta"}, {"gamma", "gamma"}, {"delta", "delta"},
          {"eps", "eps"}, {"epsilon", "eps"}};
      auto it = alias.find(key);
      if (it == alias.end())
        fail(ErrorKind::ParseError,
             std::to_string(line_no) + ": unknown gauge entry '" + key +
                 "' (expected a, b, c, d, e or alpha..epsilon)");
      if (doc.gauge.count(it->second))
        fail(ErrorKind::DuplicateDeclaration,
             std::to_string(line_no) + ": gauge entry '" + key + "' set twice");
      doc.gauge[it->second] = parse_expression(line.substr(eq + 1), line_no);
      continue;
    }
  }
  return doc;
}

Form evaluate(const ExprPtr& expr, const NameScope& scope) {
  switch (expr->kind) {
    case ExprNode::Kind::Integer: {
      Polynomial p = Polynomial::constant(GaussianRational(mpq_class(expr->literal), mpq_class(0)));
      return Form::scalar(scope.frame, Scalar(std::move(p), Polynomial::one()));
    }
    case ExprNode::Kind::ImagUnit:
      return Form::scalar(scope.frame, Scalar::i());
    case ExprNode::Kind::Ident: {
      if (scope.frame && scope.frame->basis_index(expr->literal) >= 0)
        return Form::basis(scope.frame, expr->literal);
      auto it = scope.symbols.find(expr->literal);
      if (it == scope.symbols.end())
        fail(ErrorKind::UndeclaredName,
             expr->pos.str() + ": undeclared name '" + expr->literal + "'");
      return Form::scalar(scope.frame, Scalar::variable(it->second));
    }
    case ExprNode::Kind::Neg:
      return -evaluate(expr->lhs, scope);
    case ExprNode::Kind::Add:
      return evaluate(expr->lhs, scope) + evaluate(expr->rhs, scope);
    case ExprNode::Kind::Sub:
      return evaluate(expr->lhs, scope) - evaluate(expr->rhs, scope);
    case ExprNode::Kind::Mul: {
      Form l = evaluate(expr->lhs, scope);
      Form r = evaluate(expr->rhs, scope);
      if (r.degree() == 0 || r.empty() || l.degree() == 0 || l.empty()) return wedge(l, r);
      fail(ErrorKind::ParseError,
           expr->pos.str() + ": '*' needs a scalar operand; use '^' for products of forms");
    }
    case ExprNode::Kind::Div: {
      Form l = evaluate(expr->lhs, scope);
      Form r = evaluate(expr->rhs, scope);
      if (r.degree() != 0)
        fail(ErrorKind::ParseError, expr->pos.str() + ": division by a non-scalar");
      Scalar d = r.coefficient_mask(0);
      if (d.is_syntactic_zero())
        fail(ErrorKind::DivisionByZero, expr->pos.str() + ": division by zero");
      return l * d.inverse();
    }
    case ExprNode::Kind::Pow: {
      Form base = evaluate(expr->lhs, scope);
      if (base.degree() != 0)
        fail(ErrorKind::ParseError,
             expr->pos.str() + ": exponentiation needs a scalar base; use '^' between forms "
                               "for wedge products");
      return Form::scalar(scope.frame, base.coefficient_mask(0).pow(expr->exponent));
    }
    case ExprNode::Kind::Wedge:
      return wedge(evaluate(expr->lhs, scope), evaluate(expr->rhs, scope));
  }
  fail(ErrorKind::ParseError, "unreachable expression kind");
}

Scalar evaluate_scalar(const ExprPtr& expr, const NameScope& scope) {
  Form f = evaluate(expr, scope);
  if (!f.empty() && f.degree() != 0)
    fail(ErrorKind::ParseError, expr->pos.str() + ": expected a scalar expression");
  return f.coefficient_mask(0);
}

}  // namespace flagcurv
