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

#include "fuzzcalc/derivative.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "fuzzcalc/arithmetic.hpp"
#include "fuzzcalc/error.hpp"

namespace fuzzcalc {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Sign decisions below this magnitude are deferred to the numeric
// engine instead of being decided symbolically.
constexpr double kSignEps = 1e-9;

std::vector<Interval> midpoint_profile(const std::vector<Interval>& a,
                                       const std::vector<Interval>& b) {
    std::vector<Interval> out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        out[k] = {0.5 * (a[k].lower + b[k].lower), 0.5 * (a[k].upper + b[k].upper)};
    return out;
}

/// One side of the quotient sequence with Richardson acceleration
/// (shrink-aware two-point extrapolation kills the O(h) term).
///
/// The limit only needs differences for sufficiently small h, so missing
/// differences are tolerated as long as they form a prefix of the step
/// sequence; a difference that disappears again as h shrinks is a
/// genuine failure.
struct SideSeq {
    bool required = false;
    int attempts = 0;
    int missing = 0;
    int last_missing_index = -1;
    int first_exist_index = -1;
    bool have_q = false, have_prev_q = false;
    bool have_e = false, have_prev_e = false;
    std::vector<Interval> cur_q, prev_q, cur_e, prev_e;
    double last_raw = kNaN, last_extrap = kNaN;
    bool converged = false;

    void miss() {
        last_missing_index = attempts;
        ++attempts;
        ++missing;
        converged = false;
    }

    void push(std::vector<Interval> q, double shrink, double tol) {
        if (first_exist_index < 0)
            first_exist_index = attempts;
        ++attempts;
        if (have_q) {
            prev_q = cur_q;
            have_prev_q = true;
        }
        cur_q = std::move(q);
        have_q = true;
        last_raw = have_prev_q ? profile_distance(cur_q, prev_q) : kNaN;
        if (have_prev_q) {
            const double w = 1.0 / (1.0 - shrink); // q_inf ~ w*q_k - (w-1)*q_{k-1}
            std::vector<Interval> e(cur_q.size());
            for (std::size_t i = 0; i < cur_q.size(); ++i)
                e[i] = {w * cur_q[i].lower - (w - 1.0) * prev_q[i].lower,
                        w * cur_q[i].upper - (w - 1.0) * prev_q[i].upper};
            if (have_e) {
                prev_e = cur_e;
                have_prev_e = true;
            }
            cur_e = std::move(e);
            have_e = true;
            last_extrap = have_prev_e ? profile_distance(cur_e, prev_e) : kNaN;
        }
        converged = (have_prev_q && last_raw <= tol) || (have_prev_e && last_extrap <= tol);
    }

    /// Differences exist for all sufficiently small steps.
    bool tail_exists() const { return have_q && last_missing_index < first_exist_index; }

    const std::vector<Interval>& estimate() const { return have_e ? cur_e : cur_q; }
};

std::optional<std::vector<Interval>> quotient(DiffMode mode, const ScalarFuzzyFn& f,
                                              const FuzzyNumber& f0, double x0, double h,
                                              bool forward) {
    if (mode == DiffMode::H) {
        ExistenceCertificate cert =
            forward ? h_diff(f(x0 + h), f0) : h_diff(f0, f(x0 - h));
        if (!cert.exists)
            return std::nullopt;
        return scalar_mul(1.0 / h, *cert.witness).cuts();
    }
    // gH: the two-sided limit always forms f(x0 + h') (-gH) f(x0); for
    // h' < 0 the scalar 1/h' applies the endpoint swap.
    ExistenceCertificate cert =
        forward ? gh_diff(f(x0 + h), f0) : gh_diff(f(x0 - h), f0);
    if (!cert.exists)
        return std::nullopt;
    return scalar_mul(forward ? 1.0 / h : -1.0 / h, *cert.witness).cuts();
}

std::optional<FuzzyNumber> value_from_profiles(const AlphaGrid& grid,
                                               const std::vector<Interval>& preferred,
                                               const std::vector<Interval>& fallback) {
    if (profile_valid(preferred))
        return FuzzyNumber::from_cuts(grid, preferred);
    if (profile_valid(fallback))
        return FuzzyNumber::from_cuts(grid, fallback);
    return std::nullopt;
}

DerivativeResult run_limit_engine(DiffMode mode, const ScalarFuzzyFn& f, double x0,
                                  const LimitParams& p, Side side) {
    if (!(p.h0 > 0.0) || !(p.shrink > 0.0 && p.shrink < 1.0) || p.max_iters < 2 || !(p.tol > 0.0))
        throw Error(ErrorCode::InvalidArgument, "invalid limit parameters");

    DerivativeResult res;
    res.mode = mode;
    res.side = side;
    res.used_numeric = true;

    const FuzzyNumber f0 = f(x0);
    SideSeq fwd, bwd;
    fwd.required = side != Side::BackwardOnly;
    bwd.required = side != Side::ForwardOnly;

    double h = p.h0;
    for (int k = 0; k < p.max_iters; ++k, h *= p.shrink) {
        StepRecord rec;
        rec.h = h;
        if (fwd.required) {
            auto q = quotient(mode, f, f0, x0, h, true);
            rec.forward_exists = q.has_value();
            if (q)
                fwd.push(std::move(*q), p.shrink, p.tol);
            else
                fwd.miss();
        }
        if (bwd.required) {
            auto q = quotient(mode, f, f0, x0, h, false);
            rec.backward_exists = q.has_value();
            if (q)
                bwd.push(std::move(*q), p.shrink, p.tol);
            else
                bwd.miss();
        }
        rec.delta_forward = fwd.last_raw;
        rec.delta_backward = bwd.last_raw;
        rec.delta_forward_extrap = fwd.last_extrap;
        rec.delta_backward_extrap = bwd.last_extrap;
        rec.delta_pair = (fwd.have_q && bwd.have_q)
                             ? profile_distance(fwd.estimate(), bwd.estimate())
                             : kNaN;
        res.trace.push_back(rec);

        bool done = true;
        if (fwd.required && !(fwd.tail_exists() && fwd.converged && fwd.missing == 0))
            done = false;
        if (bwd.required && !(bwd.tail_exists() && bwd.converged && bwd.missing == 0))
            done = false;
        if (done && fwd.required && bwd.required && !(res.trace.back().delta_pair <= p.tol))
            done = false;
        if (done)
            break;
    }

    const bool fwd_ok = !fwd.required || (fwd.tail_exists() && fwd.converged);
    const bool bwd_ok = !bwd.required || (bwd.tail_exists() && bwd.converged);
    const bool pair_ok = !(fwd.required && bwd.required) ||
                         (fwd.have_q && bwd.have_q &&
                          profile_distance(fwd.estimate(), bwd.estimate()) <= p.tol);

    if (fwd_ok && bwd_ok && pair_ok) {
        const AlphaGrid& grid = f0.grid();
        std::optional<FuzzyNumber> value;
        if (fwd.required && bwd.required)
            value = value_from_profiles(grid, midpoint_profile(fwd.estimate(), bwd.estimate()),
                                        midpoint_profile(fwd.cur_q, bwd.cur_q));
        else {
            const SideSeq& s = fwd.required ? fwd : bwd;
            value = value_from_profiles(grid, s.estimate(), s.cur_q);
            res.one_sided = true;
        }
        if (value) {
            res.differentiable = true;
            res.value = std::move(value);
            if (fwd.missing > 0 || bwd.missing > 0) {
                std::ostringstream os;
                os << "differences exist within tolerance only below h = "
                   << (fwd.missing > 0
                           ? p.h0 * std::pow(p.shrink, fwd.last_missing_index + 1)
                           : p.h0 * std::pow(p.shrink, bwd.last_missing_index + 1));
                res.detail = os.str();
            }
            return res;
        }
        // the quotient limit is not a valid fuzzy profile
        res.differentiable = false;
        res.detail = "quotient limit is not a valid fuzzy profile";
        if (mode == DiffMode::GH)
            res.reason = FailReason::GhDiffMissing;
        else if (fwd.missing > 0)
            res.reason = FailReason::ForwardHDiffMissing;
        else if (bwd.missing > 0)
            res.reason = FailReason::BackwardHDiffMissing;
        else
            res.reason = FailReason::NoConvergence;
        return res;
    }

    res.differentiable = false;
    if (mode == DiffMode::GH) {
        if ((fwd.required && !fwd.tail_exists()) || (bwd.required && !bwd.tail_exists())) {
            res.reason = FailReason::GhDiffMissing;
            return res;
        }
    } else {
        if (fwd.required && !fwd.tail_exists()) {
            res.reason = FailReason::ForwardHDiffMissing;
            return res;
        }
        if (bwd.required && !bwd.tail_exists()) {
            res.reason = FailReason::BackwardHDiffMissing;
            return res;
        }
    }
    if ((fwd.required && !fwd.converged) || (bwd.required && !bwd.converged)) {
        res.reason = FailReason::NoConvergence;
        return res;
    }
    res.reason = FailReason::OneSidedMismatch;
    return res;
}

ScalarFuzzyFn line_function(const FuzzyExpr& e, std::span<const double> x0, int var) {
    std::vector<double> base(x0.begin(), x0.end());
    return [e, base, var](double t) {
        std::vector<double> pt = base;
        pt[static_cast<std::size_t>(var - 1)] = t;
        return e.eval(pt);
    };
}

enum class TermClass {
    CrispCoeff,   // degenerate coefficient: classical calculus applies
    ConstantTerm, // constant crisp part: contributes the crisp zero
    ZeroPartial,  // identically-zero partial of a non-constant term
    Positive,     // g and dg/dx_var have the same strict sign at x0
    Negative,     // strict opposite signs: differences cannot exist
    Ambiguous,    // sign too close to zero to decide symbolically
};

struct TermAnalysis {
    TermClass cls = TermClass::Ambiguous;
    double g = 0.0;
    double d = 0.0;
};

TermAnalysis analyze_term(const FuzzyTerm& t, std::span<const double> x, int var) {
    TermAnalysis a;
    const CrispExpr d_expr = t.crisp.derivative(var);
    a.d = d_expr.eval(x);
    if (t.coeff.is_crisp()) {
        a.cls = TermClass::CrispCoeff;
        return a;
    }
    if (t.crisp.is_constant_function()) {
        a.cls = TermClass::ConstantTerm;
        return a;
    }
    if (d_expr.is_zero()) {
        a.cls = TermClass::ZeroPartial;
        return a;
    }
    a.g = t.crisp.eval(x);
    if (std::abs(a.d) <= kSignEps || std::abs(a.g) <= kSignEps) {
        a.cls = TermClass::Ambiguous;
        return a;
    }
    a.cls = (a.g > 0.0) == (a.d > 0.0) ? TermClass::Positive : TermClass::Negative;
    return a;
}

/// Existence analysis of the whole sum along x_var, with the numeric
/// engine as the fallback for sign situations the closed-form argument
/// does not cover.
DerivativeResult analyze_sum(const FuzzyExpr& e, std::span<const double> x, int var,
                             const LimitParams& p, Side side) {
    DerivativeResult res;
    res.mode = DiffMode::H;
    res.side = side;
    res.used_symbolic = true;

    const AlphaGrid& grid = e.terms().front().coeff.grid();
    FuzzyNumber acc = FuzzyNumber::crisp(0.0, grid);
    bool any_ambiguous = false;
    bool any_positive_fuzzy = false;
    int negative_term = -1;
    int zero_term = -1;

    for (std::size_t i = 0; i < e.terms().size(); ++i) {
        const FuzzyTerm& t = e.terms()[i];
        TermAnalysis a = analyze_term(t, x, var);
        // a single variable leaves no room between "partial vanishes
        // identically" and "term is constant along the line"
        if (a.cls == TermClass::ZeroPartial && e.arity() == 1)
            a.cls = TermClass::ConstantTerm;
        switch (a.cls) {
        case TermClass::CrispCoeff:
            acc = add(acc, FuzzyNumber::crisp(t.coeff.cuts().back().lower * a.d, grid));
            break;
        case TermClass::ConstantTerm:
            break;
        case TermClass::ZeroPartial:
            if (zero_term < 0)
                zero_term = static_cast<int>(i);
            break;
        case TermClass::Positive:
            acc = add(acc, scalar_mul(a.d, t.coeff));
            any_positive_fuzzy = true;
            break;
        case TermClass::Negative:
            if (negative_term < 0)
                negative_term = static_cast<int>(i);
            break;
        case TermClass::Ambiguous:
            any_ambiguous = true;
            break;
        }
    }

    if (zero_term >= 0) {
        res.differentiable = false;
        res.reason = FailReason::ZeroPartial;
        std::ostringstream os;
        os << "term " << zero_term + 1 << " has identically zero partial along x" << var;
        res.detail = os.str();
        return res;
    }
    if (negative_term >= 0 && !any_positive_fuzzy && !any_ambiguous) {
        res.differentiable = false;
        res.reason = FailReason::ForwardHDiffMissing;
        std::ostringstream os;
        os << "term " << negative_term + 1
           << " has a sign-reversing slope at the point; differences cannot exist";
        res.detail = os.str();
        return res;
    }
    if (negative_term >= 0 || any_ambiguous) {
        DerivativeResult numeric =
            run_limit_engine(DiffMode::H, line_function(e, x, var),
                             x[static_cast<std::size_t>(var - 1)], p, side);
        numeric.used_symbolic = true;
        if (numeric.detail.empty())
            numeric.detail = "sign analysis inconclusive; decided by the limit engine";
        return numeric;
    }

    res.differentiable = true;
    res.value = acc;
    return res;
}

Side coordinate_side(const std::vector<Interval>* domain, std::span<const double> x, int var) {
    if (!domain)
        return Side::Both;
    const Interval& box = (*domain)[static_cast<std::size_t>(var - 1)];
    const double v = x[static_cast<std::size_t>(var - 1)];
    const double eps = 1e-12 * (1.0 + std::abs(box.lower) + std::abs(box.upper));
    if (v <= box.lower + eps)
        return Side::ForwardOnly;
    if (v >= box.upper - eps)
        return Side::BackwardOnly;
    return Side::Both;
}

} // namespace

const char* to_string(FailReason r) {
    switch (r) {
    case FailReason::ForwardHDiffMissing: return "forward_h_diff_missing";
    case FailReason::BackwardHDiffMissing: return "backward_h_diff_missing";
    case FailReason::GhDiffMissing: return "gh_diff_missing";
    case FailReason::NoConvergence: return "no_convergence";
    case FailReason::OneSidedMismatch: return "one_sided_mismatch";
    case FailReason::ZeroPartial: return "zero_partial";
    }
    return "?";
}

DerivativeResult h_derivative_numeric(const ScalarFuzzyFn& f, double x0, const LimitParams& p,
                                      Side side) {
    return run_limit_engine(DiffMode::H, f, x0, p, side);
}

DerivativeResult gh_derivative_numeric(const ScalarFuzzyFn& f, double x0, const LimitParams& p,
                                       Side side) {
    return run_limit_engine(DiffMode::GH, f, x0, p, side);
}

DerivativeResult h_derivative_symbolic(const FuzzyExpr& e, double x0, const LimitParams& p,
                                       Side side) {
    if (e.arity() != 1)
        throw Error(ErrorCode::UnsupportedForm, "expected a single-variable expression");
    const double x[1] = {x0};
    return analyze_sum(e, x, 1, p, side);
}

DerivativeResult partial_h_derivative(const FuzzyExpr& e, std::span<const double> x0, int var,
                                      const LimitParams& p, Side side) {
    if (var < 1 || var > e.arity())
        throw Error(ErrorCode::InvalidArgument, "variable index out of range");
    if (static_cast<int>(x0.size()) != e.arity())
        throw Error(ErrorCode::ArityError, "point does not match arity");
    return analyze_sum(e, x0, var, p, side);
}

DerivativeResult partial_gh_derivative(const FuzzyExpr& e, std::span<const double> x0, int var,
                                       const LimitParams& p, Side side) {
    if (var < 1 || var > e.arity())
        throw Error(ErrorCode::InvalidArgument, "variable index out of range");
    if (static_cast<int>(x0.size()) != e.arity())
        throw Error(ErrorCode::ArityError, "point does not match arity");
    return run_limit_engine(DiffMode::GH, line_function(e, x0, var),
                            x0[static_cast<std::size_t>(var - 1)], p, side);
}

DerivativeResult higher_h_derivative(const FuzzyExpr& e, std::span<const double> x0, int var,
                                     int order, const LimitParams& p, Side side) {
    if (order < 1)
        throw Error(ErrorCode::InvalidArgument, "order must be at least 1");
    if (var < 1 || var > e.arity())
        throw Error(ErrorCode::InvalidArgument, "variable index out of range");
    FuzzyExpr cur = e;
    DerivativeResult last;
    for (int j = 1; j <= order; ++j) {
        last = analyze_sum(cur, x0, var, p, side);
        last.order = order;
        if (!last.differentiable) {
            last.failing_order = j;
            return last;
        }
        if (j < order)
            cur = cur.term_derivative(var);
    }
    last.failing_order = 0;
    return last;
}

std::map<std::pair<int, int>, SecondPartial> second_partial_existence(const FuzzyExpr& e,
                                                                      std::span<const double> x0) {
    if (static_cast<int>(x0.size()) != e.arity())
        throw Error(ErrorCode::ArityError, "point does not match arity");
    std::map<std::pair<int, int>, SecondPartial> out;
    const AlphaGrid& grid = e.terms().front().coeff.grid();
    for (int i = 1; i <= e.arity(); ++i) {
        for (int j = 1; j <= e.arity(); ++j) {
            SecondPartial entry;
            entry.exists = true;
            FuzzyNumber acc = FuzzyNumber::crisp(0.0, grid);
            for (std::size_t t = 0; t < e.terms().size(); ++t) {
                const FuzzyTerm& term = e.terms()[t];
                const CrispExpr d2 = term.crisp.derivative(j).derivative(i);
                const double v2 = d2.eval(x0);
                if (term.coeff.is_crisp()) {
                    acc = add(acc, FuzzyNumber::crisp(term.coeff.cuts().back().lower * v2, grid));
                    continue;
                }
                if (term.crisp.is_constant_function())
                    continue;
                std::ostringstream os;
                if (d2.is_zero()) {
                    os << "term " << t + 1 << " has identically zero d2/dx" << i << "dx" << j;
                } else {
                    const double g = term.crisp.eval(x0);
                    if (std::abs(v2) > kSignEps && std::abs(g) > kSignEps &&
                        (g > 0.0) == (v2 > 0.0)) {
                        acc = add(acc, scalar_mul(v2, term.coeff));
                        continue;
                    }
                    os << "term " << t + 1 << " has non-positive second-partial sign context";
                }
                entry.exists = false;
                entry.blocking_term = static_cast<int>(t);
                entry.detail = os.str();
                break;
            }
            if (entry.exists)
                entry.value = acc;
            out[{i, j}] = std::move(entry);
        }
    }
    return out;
}

MultivariableResult multivariable_h_derivative(const FuzzyExpr& e, std::span<const double> x0,
                                               const LimitParams& p,
                                               const std::vector<Interval>* domain) {
    MultivariableResult res;
    const int n = e.arity();

    for (int i = 1; i <= n; ++i) {
        res.partials.push_back(partial_h_derivative(e, x0, i, p, coordinate_side(domain, x0, i)));
        if (!res.partials.back().differentiable) {
            res.differentiable = false;
            std::ostringstream os;
            os << "partial along x" << i << " does not exist";
            if (!res.partials.back().detail.empty())
                os << ": " << res.partials.back().detail;
            res.detail = os.str();
        }
    }
    for (const DerivativeResult& r : res.partials)
        if (!r.differentiable)
            return res;

    // Continuity surrogate: every partial must stay within 10*tol of
    // itself across a small stencil around x0. The spacing keeps the
    // smooth variation of desk-scale second derivatives well inside
    // that budget.
    const double delta = p.tol / 50.0;
    std::vector<std::vector<double>> stencil;
    stencil.push_back(std::vector<double>(x0.begin(), x0.end()));
    for (std::size_t c = 0; c < static_cast<std::size_t>(n); ++c) {
        std::vector<std::vector<double>> next;
        for (const auto& pt : stencil) {
            for (int dir = -1; dir <= 1; ++dir) {
                std::vector<double> q = pt;
                q[c] = x0[c] + dir * delta;
                if (domain) {
                    const Interval& box = (*domain)[c];
                    q[c] = std::min(std::max(q[c], box.lower), box.upper);
                }
                next.push_back(std::move(q));
            }
        }
        stencil = std::move(next);
    }

    for (int i = 1; i <= n; ++i) {
        std::vector<FuzzyNumber> values;
        for (const auto& pt : stencil) {
            DerivativeResult r = partial_h_derivative(e, pt, i, p, coordinate_side(domain, pt, i));
            if (!r.differentiable) {
                res.continuity_ok = false;
                std::ostringstream os;
                os << "partial along x" << i << " ceases to exist near the point";
                res.detail = os.str();
                res.differentiable = false;
                return res;
            }
            values.push_back(std::move(*r.value));
        }
        for (std::size_t a = 0; a < values.size(); ++a)
            for (std::size_t b = a + 1; b < values.size(); ++b)
                if (distance(values[a], values[b]) > 10.0 * p.tol) {
                    res.continuity_ok = false;
                    std::ostringstream os;
                    os << "partial along x" << i << " varies by more than 10*tol on the stencil";
                    res.detail = os.str();
                    res.differentiable = false;
                    return res;
                }
    }

    res.differentiable = true;
    return res;
}

bool level_derivative_check(const FuzzyExpr& e, std::span<const double> x0, int var,
                            const DerivativeResult& result, double step, double tol) {
    if (!result.differentiable || !result.value)
        return false;
    std::vector<double> xp(x0.begin(), x0.end());
    std::vector<double> xm(x0.begin(), x0.end());
    xp[static_cast<std::size_t>(var - 1)] += step;
    xm[static_cast<std::size_t>(var - 1)] -= step;

    const FuzzyNumber& v = *result.value;
    for (std::size_t k = 0; k < v.grid().size(); ++k) {
        const double alpha = v.grid()[k];
        const double dl = (e.level_lower(alpha, xp) - e.level_lower(alpha, xm)) / (2.0 * step);
        const double du = (e.level_upper(alpha, xp) - e.level_upper(alpha, xm)) / (2.0 * step);
        const Interval& cut = v.cuts()[k];
        double lo = dl, hi = du;
        if (result.mode == DiffMode::GH && lo > hi)
            std::swap(lo, hi);
        if (std::abs(lo - cut.lower) > tol || std::abs(hi - cut.upper) > tol)
            return false;
    }
    return true;
}

} // namespace fuzzcalc
