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

#include "fuzzcalc/fuzzy_expr.hpp"

#include <sstream>

#include "fuzzcalc/error.hpp"

namespace fuzzcalc {

FuzzyExpr::FuzzyExpr(int arity, std::vector<FuzzyTerm> terms)
    : arity_(arity), terms_(std::move(terms)) {
    if (arity_ < 1)
        throw Error(ErrorCode::InvalidArgument, "arity must be positive");
    if (terms_.empty())
        throw Error(ErrorCode::InvalidArgument, "expression needs at least one term");
    for (const FuzzyTerm& t : terms_)
        if (t.crisp.max_variable() > arity_)
            throw Error(ErrorCode::ArityError, "variable index exceeds declared arity");
}

FuzzyNumber FuzzyExpr::eval(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != arity_)
        throw Error(ErrorCode::ArityError, "evaluation point does not match arity");
    FuzzyNumber acc = scalar_mul(terms_[0].crisp.eval(x), terms_[0].coeff);
    for (std::size_t i = 1; i < terms_.size(); ++i)
        acc = add(acc, scalar_mul(terms_[i].crisp.eval(x), terms_[i].coeff));
    return acc;
}

double FuzzyExpr::level_lower(double alpha, std::span<const double> x) const {
    double s = 0.0;
    for (const FuzzyTerm& t : terms_) {
        const double g = t.crisp.eval(x);
        const Interval c = t.coeff.alpha_cut(alpha);
        s += g >= 0.0 ? c.lower * g : c.upper * g;
    }
    return s;
}

double FuzzyExpr::level_upper(double alpha, std::span<const double> x) const {
    double s = 0.0;
    for (const FuzzyTerm& t : terms_) {
        const double g = t.crisp.eval(x);
        const Interval c = t.coeff.alpha_cut(alpha);
        s += g >= 0.0 ? c.upper * g : c.lower * g;
    }
    return s;
}

FuzzyExpr FuzzyExpr::term_derivative(int var) const {
    std::vector<FuzzyTerm> out;
    out.reserve(terms_.size());
    for (const FuzzyTerm& t : terms_)
        out.push_back({t.coeff, t.crisp.derivative(var)});
    return FuzzyExpr(arity_, std::move(out));
}

bool FuzzyExpr::structurally_equal(const FuzzyExpr& other) const {
    if (arity_ != other.arity_ || terms_.size() != other.terms_.size())
        return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (!terms_[i].coeff.identical(other.terms_[i].coeff))
            return false;
        if (!terms_[i].crisp.structurally_equal(other.terms_[i].crisp))
            return false;
    }
    return true;
}

std::string FuzzyExpr::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i > 0)
            os << " + ";
        const FuzzyTerm& t = terms_[i];
        const ShapeTag& tag = t.coeff.shape();
        const bool unit_coeff = tag.shape == Shape::Crisp && tag.params[0] == 1.0;
        const bool unit_crisp = t.crisp.is_one();
        std::string crisp_text = t.crisp.to_string();
        // the term-level grammar has no bare '+', so sums need parentheses
        if (t.crisp.kind() == NodeKind::Add || t.crisp.kind() == NodeKind::Sub)
            crisp_text = "(" + crisp_text + ")";
        if (unit_coeff && !unit_crisp) {
            os << crisp_text;
        } else if (unit_crisp) {
            os << t.coeff.to_string();
        } else {
            os << t.coeff.to_string() << " * " << crisp_text;
        }
    }
    return os.str();
}

} // namespace fuzzcalc
