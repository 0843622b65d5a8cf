#pragma once

#include <string>

#include "flagcurv/form.hpp"

namespace flagcurv {

// Canonical printing: relation-reduced, monomials in descending graded-lex
// order, rational coefficients as p/q, imaginary unit as `i`. Every emitted
// string reparses to an equal value under the expression grammar.
std::string to_string(const GaussianRational& c);
std::string to_string(const Polynomial& p);
std::string to_string(const Scalar& s, const RelationSet& rel = {});
std::string to_string(const Form& f);

}  // namespace flagcurv
