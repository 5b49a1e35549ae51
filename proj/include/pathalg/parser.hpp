#pragma once

#include <string>

#include "pathalg/opexpr.hpp"

namespace pathalg {

// Grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := primary ('^' UINT)*
//   primary:= RATIONAL | 'x'INT | 'D'INT | '[' expr ',' expr ']' | '(' expr ')'
//   RATIONAL := UINT ['/' UINT]
// Throws parse_error with line/column on malformed input.
OpExprPtr parse_expr(const std::string& src);

}
