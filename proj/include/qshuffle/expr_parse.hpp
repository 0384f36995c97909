#pragma once

#include <string>

#include "qshuffle/laurent.hpp"

namespace qshuffle {

// Parses the textual expression grammar shared by parameter fractions and
// Laurent polynomials:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := ('-' | '+')* atom ('^' integer)?
//   atom   := integer | 'q1' | 'q2' | 'z'<k> | '(' expr ')'
//
// Division requires a z-free divisor (a parameter fraction); negative powers
// need a single-monomial or z-free base. Variables z1..z<arity> are allowed;
// parse_param_rat uses arity 0.
LaurentPoly parse_laurent(const std::string& text, int arity);

ParamRat parse_param_rat(const std::string& text);

}  // namespace qshuffle
