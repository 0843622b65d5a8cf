#include "flagcurv/errors.hpp"

namespace flagcurv {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::NonTerminatingReduction: return "NonTerminatingReduction";
    case ErrorKind::BadRelation: return "BadRelation";
    case ErrorKind::FrameMismatch: return "FrameMismatch";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::ShapeViolation: return "ShapeViolation";
    case ErrorKind::NotAPseudoFlag: return "NotAPseudoFlag";
    case ErrorKind::DegenerateContact: return "DegenerateContact";
    case ErrorKind::JacobiViolation: return "JacobiViolation";
    case ErrorKind::CrossCheckMismatch: return "CrossCheckMismatch";
    case ErrorKind::NonInvertible: return "NonInvertible";
    case ErrorKind::IllFormedInvolution: return "IllFormedInvolution";
    case ErrorKind::NotSupported: return "NotSupported";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UndeclaredName: return "UndeclaredName";
    case ErrorKind::DuplicateDeclaration: return "DuplicateDeclaration";
  }
  return "Error";
}

}  // namespace flagcurv
