/*   Copyright 2026 The fuzzcalc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
 */

#ifndef FUZZCALC_PARSER_HPP
#define FUZZCALC_PARSER_HPP

#include <string_view>

#include "fuzzcalc/fuzzy_expr.hpp"

namespace fuzzcalc {

/// Parses the expression language
///
///   expr     := term ('+' term)*
///   term     := fuzzylit ('*' factor)? | factor
///   factor   := product ('-' product)*          (no bare '+' at term level)
///   product  := power ('*' power)*
///   power    := atom ('^' nonneg-integer)?
///   atom     := real | var | '(' crispexpr ')'
///             | ('sin'|'cos'|'exp') '(' crispexpr ')' | '-' atom
///   fuzzylit := 'tfn(' r ',' r ',' r ')' | 'tpfn(' r{4} ')' | 'crisp(' r ')'
///   var      := 'x' positive-integer
///
/// against a declared arity. Whitespace-insensitive; reals in decimal or
/// scientific notation. Syntax errors carry line:column; variable
/// indices above the arity raise ArityError; out-of-order fuzzy-literal
/// parameters raise InvalidShape.
FuzzyExpr parse(std::string_view text, int arity, const AlphaGrid& grid = AlphaGrid::uniform());

/// Largest variable index mentioned in the text (1 if none), usable as
/// the arity when the caller does not declare one.
int infer_arity(std::string_view text);

/// Parses a single fuzzy literal ("tfn(3,4,5)", "tpfn(0,1,2,3)",
/// "crisp(2)") onto the given grid.
FuzzyNumber parse_fuzzy_literal(std::string_view text, const AlphaGrid& grid = AlphaGrid::uniform());

} // namespace fuzzcalc

#endif
