#pragma once

#include "reducta/zn.hpp"

#include <string>

namespace reducta {

// Recursive-descent parser over the session alphabet:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ['^' integer]
//   atom   := generator | coeff | rational | '(' expr ')' | 'comm(' expr ',' expr ')'
//   generator := z[i,j] | t[i] | tring[i] | zhat[i,j]
//   coeff     := th(i) | th(i,j)
// Division and powers apply to coefficient-valued subexpressions only; words
// multiply freely (the star interpretation is the caller's). tring/zhat expand
// through the change of variables.
ZElement parse_zelement(const std::string& text, int n);

// Canonical text form, parseable back to an equal element.
std::string print_zelement(const ZElement& x);

} // namespace reducta
