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

#ifndef FUZZCALC_FUZZY_EXPR_HPP
#define FUZZCALC_FUZZY_EXPR_HPP

#include <span>
#include <string>
#include <vector>

#include "fuzzcalc/arithmetic.hpp"
#include "fuzzcalc/crisp_expr.hpp"
#include "fuzzcalc/fuzzy_number.hpp"

namespace fuzzcalc {

/// One summand of the canonical form: a fuzzy coefficient times a crisp
/// expression.
struct FuzzyTerm {
    FuzzyNumber coeff;
    CrispExpr crisp;
};

/// Fuzzy-valued function in canonical form: the fuzzy sum of its terms.
/// Term grouping is preserved exactly as written; it is semantically
/// significant for the existence analysis.
class FuzzyExpr {
public:
    FuzzyExpr(int arity, std::vector<FuzzyTerm> terms);

    int arity() const { return arity_; }
    const std::vector<FuzzyTerm>& terms() const { return terms_; }

    /// Level-wise evaluation via fuzzy addition and scalar multiplication;
    /// negative crisp values swap the endpoint contributions.
    FuzzyNumber eval(std::span<const double> x) const;

    /// Lower/upper endpoint of the alpha-cut of eval(x), i.e. the level
    /// functions, computed without building the whole profile.
    double level_lower(double alpha, std::span<const double> x) const;
    double level_upper(double alpha, std::span<const double> x) const;

    /// Term-wise symbolic derivative along x_var: each coefficient is
    /// kept and each crisp part is differentiated.
    FuzzyExpr term_derivative(int var) const;

    bool structurally_equal(const FuzzyExpr& other) const;

    /// Round-trippable text when every coefficient is parametric.
    std::string to_string() const;

private:
    int arity_;
    std::vector<FuzzyTerm> terms_;
};

} // namespace fuzzcalc

#endif
