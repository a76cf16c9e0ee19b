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

#ifndef FUZZCALC_DERIVATIVE_HPP
#define FUZZCALC_DERIVATIVE_HPP

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fuzzcalc/difference.hpp"
#include "fuzzcalc/fuzzy_expr.hpp"
#include "fuzzcalc/metric.hpp"

namespace fuzzcalc {

enum class DiffMode { H, GH };

/// Which one-sided quotients the limit engine is required to form.
/// ForwardOnly/BackwardOnly are for boundary points of the domain.
enum class Side { Both, ForwardOnly, BackwardOnly };

enum class FailReason {
    ForwardHDiffMissing,
    BackwardHDiffMissing,
    GhDiffMissing,
    NoConvergence,
    OneSidedMismatch,
    ZeroPartial, // an identically-zero partial of a non-constant term
};

const char* to_string(FailReason r);

/// Discretization of the difference-quotient limit.
struct LimitParams {
    double h0 = 1e-2;    ///< initial step
    double shrink = 0.5; ///< geometric step factor, in (0,1)
    int max_iters = 20;
    double tol = 1e-6; ///< metric tolerance for convergence and agreement
};

/// One step of the quotient trace. Deltas are metric distances between
/// successive quotients (raw) and between successive Richardson
/// estimates (extrapolated); NaN when not yet defined or side missing.
struct StepRecord {
    double h = 0.0;
    bool forward_exists = false;
    bool backward_exists = false;
    double delta_forward = 0.0;
    double delta_backward = 0.0;
    double delta_forward_extrap = 0.0;
    double delta_backward_extrap = 0.0;
    double delta_pair = 0.0;
};

struct DerivativeResult {
    DiffMode mode = DiffMode::H;
    bool differentiable = false;
    std::optional<FuzzyNumber> value;
    std::optional<FailReason> reason;
    std::vector<StepRecord> trace;

    int order = 1;
    int failing_order = 0; ///< first order whose check failed; 0 when none
    Side side = Side::Both;
    bool one_sided = false;     ///< verdict rests on one admissible side
    bool used_symbolic = false; ///< closed-form analysis decided existence
    bool used_numeric = false;  ///< the limit engine ran
    std::string detail;
};

using ScalarFuzzyFn = std::function<FuzzyNumber(double)>;

/// Difference-quotient limit for the Hukuhara derivative: per step h,
/// forward quotient (1/h)(f(x0+h) (-H) f(x0)) and backward quotient
/// (1/h)(f(x0) (-H) f(x0-h)). Differentiable iff the required
/// differences exist at every step, each quotient sequence settles
/// within tol, and both one-sided limits agree within tol. The reported
/// value is the per-level midpoint of the two one-sided limits.
///
/// At an interior point where exactly one side's differences exist at
/// every step, the verdict is "differentiable (one-sided)" only when the
/// level endpoint maps show no kink at x0; a kink certifies
/// nonexistence of the two-sided derivative.
DerivativeResult h_derivative_numeric(const ScalarFuzzyFn& f, double x0, const LimitParams& p,
                                      Side side = Side::Both);

/// Same engine over the gH-difference, h running through both signs; the
/// scalar 1/h < 0 on the backward side applies the endpoint swap.
DerivativeResult gh_derivative_numeric(const ScalarFuzzyFn& f, double x0, const LimitParams& p,
                                       Side side = Side::Both);

/// Existence analysis of the canonical form at x0 (arity 1): per term,
/// the sign of g_i'(x0) in the sign context of g_i(x0) decides the
/// Hukuhara differences in closed form; crisp coefficients and constant
/// terms never block; ambiguous sign situations defer to the numeric
/// engine. The sum rule combines term contributions.
DerivativeResult h_derivative_symbolic(const FuzzyExpr& e, double x0,
                                       const LimitParams& p = LimitParams{},
                                       Side side = Side::Both);

/// Partial derivative along x_var at a point of arity n: symbolic
/// per-term check of the partial's sign (identically-zero partials of
/// non-constant terms block), with the numeric engine as fallback along
/// the coordinate line.
DerivativeResult partial_h_derivative(const FuzzyExpr& e, std::span<const double> x0, int var,
                                      const LimitParams& p = LimitParams{},
                                      Side side = Side::Both);

/// gH analogue of the partial derivative (numeric along the coordinate).
DerivativeResult partial_gh_derivative(const FuzzyExpr& e, std::span<const double> x0, int var,
                                       const LimitParams& p = LimitParams{},
                                       Side side = Side::Both);

/// Iterated H-derivative along x_var: re-checks the existence condition
/// at each order on the term-wise derivative expression and records the
/// first failing order.
DerivativeResult higher_h_derivative(const FuzzyExpr& e, std::span<const double> x0, int var,
                                     int order, const LimitParams& p = LimitParams{},
                                     Side side = Side::Both);

struct SecondPartial {
    bool exists = false;
    std::optional<FuzzyNumber> value; ///< sum of c_j (*) d2g_j at x0 when it exists
    int blocking_term = -1;           ///< 0-based index of the term that failed
    std::string detail;
};

/// Existence map of the second-order partial H-derivatives: ordered pair
/// (i,j) stands for d/dx_i of d/dx_j. A pair exists iff every term has a
/// positive second-partial sign context at x0 (constant terms and crisp
/// coefficients excepted).
std::map<std::pair<int, int>, SecondPartial> second_partial_existence(const FuzzyExpr& e,
                                                                      std::span<const double> x0);

/// Full multivariable H-differentiability at x0: every partial exists
/// at x0 and stays within 10*tol of itself on a small stencil around x0
/// (numeric surrogate for "the remaining partials exist near x0 and are
/// continuous"). `domain` clamps stencil points when given.
struct MultivariableResult {
    bool differentiable = false;
    std::vector<DerivativeResult> partials; ///< one per coordinate
    bool continuity_ok = true;
    std::string detail;
};
MultivariableResult multivariable_h_derivative(const FuzzyExpr& e, std::span<const double> x0,
                                               const LimitParams& p = LimitParams{},
                                               const std::vector<Interval>* domain = nullptr);

/// Checks a differentiable verdict against central finite differences of
/// the level functions at every grid level (step 1e-6, tolerance 1e-4).
bool level_derivative_check(const FuzzyExpr& e, std::span<const double> x0, int var,
                            const DerivativeResult& result, double step = 1e-6,
                            double tol = 1e-4);

} // namespace fuzzcalc

#endif
