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

#include "fuzzcalc/analyzer.hpp"

#include <cmath>
#include <sstream>

#include "fuzzcalc/error.hpp"

namespace fuzzcalc {

namespace {

Side edge_side(const Interval& range, double x) {
    const double eps = 1e-12 * (1.0 + std::abs(range.lower) + std::abs(range.upper));
    if (x <= range.lower + eps)
        return Side::ForwardOnly;
    if (x >= range.upper - eps)
        return Side::BackwardOnly;
    return Side::Both;
}

DerivativeResult summarize_multivariable(const MultivariableResult& m) {
    DerivativeResult r;
    r.mode = DiffMode::H;
    r.differentiable = m.differentiable;
    r.used_symbolic = true;
    r.detail = m.detail;
    for (const DerivativeResult& p : m.partials) {
        if (!p.differentiable && p.reason) {
            r.reason = p.reason;
            break;
        }
    }
    if (!m.differentiable && !r.reason)
        r.reason = FailReason::NoConvergence;
    return r;
}

Json condensed_result(const DerivativeResult& r) {
    Json j;
    j["verdict"] = r.differentiable ? "differentiable" : "not_differentiable";
    if (r.reason)
        j["reason"] = to_string(*r.reason);
    if (r.one_sided)
        j["one_sided"] = true;
    if (!r.detail.empty())
        j["detail"] = r.detail;
    return j;
}

} // namespace

std::string PointRecord::h_class() const {
    if (!h)
        return "-";
    return h->differentiable ? "differentiable" : "not_differentiable";
}

std::string PointRecord::gh_class() const {
    if (!gh)
        return "-";
    return gh->differentiable ? "differentiable" : "not_differentiable";
}

bool DiffReport::all_fixtures_pass() const {
    for (const FixtureOutcome& f : fixtures)
        if (!f.pass)
            return false;
    return true;
}

DiffReport scan(const ScanRequest& req) {
    if (req.box.empty())
        throw Error(ErrorCode::InvalidArgument, "scan needs at least one box range");
    if (req.box.size() > 3)
        throw Error(ErrorCode::InvalidArgument, "scans are capped at three variables");
    if (req.samples_per_axis < 2)
        throw Error(ErrorCode::InvalidArgument, "samples_per_axis must be at least 2");
    if (req.box.size() > 1 && req.samples_per_axis > 33)
        throw Error(ErrorCode::InvalidArgument,
                    "multivariable scans are capped at 33 samples per axis");
    for (const Interval& r : req.box)
        if (!(r.lower < r.upper) || !std::isfinite(r.lower) || !std::isfinite(r.upper))
            throw Error(ErrorCode::InvalidArgument, "box bounds must be finite and ordered");

    const int arity = static_cast<int>(req.box.size());
    const AlphaGrid grid = req.config.grid();
    const FuzzyExpr e = parse(req.expr_text, arity, grid);
    const LimitParams& lp = req.config.limit;

    DiffReport rep;
    rep.request = req;

    // per-axis sample coordinates; the endpoints are exact
    std::vector<std::vector<double>> axes(static_cast<std::size_t>(arity));
    for (int d = 0; d < arity; ++d) {
        const Interval& r = req.box[static_cast<std::size_t>(d)];
        const double step = (r.upper - r.lower) / (req.samples_per_axis - 1);
        for (int i = 0; i < req.samples_per_axis; ++i)
            axes[static_cast<std::size_t>(d)].push_back(
                i == req.samples_per_axis - 1 ? r.upper : r.lower + i * step);
    }

    std::size_t total = 1;
    for (int d = 0; d < arity; ++d)
        total *= static_cast<std::size_t>(req.samples_per_axis);

    for (std::size_t idx = 0; idx < total; ++idx) {
        PointRecord rec;
        rec.index = idx;
        std::size_t rest = idx;
        rec.x.resize(static_cast<std::size_t>(arity));
        for (int d = arity - 1; d >= 0; --d) {
            rec.x[static_cast<std::size_t>(d)] =
                axes[static_cast<std::size_t>(d)][rest % req.samples_per_axis];
            rest /= static_cast<std::size_t>(req.samples_per_axis);
        }

        if (arity == 1) {
            const double x0 = rec.x[0];
            const Side side = edge_side(req.box[0], x0);
            if (req.mode_h)
                rec.h = h_derivative_symbolic(e, x0, lp, side);
            if (req.mode_gh) {
                auto f = [&e](double t) { return e.eval(std::span<const double>(&t, 1)); };
                rec.gh = gh_derivative_numeric(f, x0, lp, side);
            }
        } else {
            if (req.mode_h) {
                MultivariableResult m = multivariable_h_derivative(e, rec.x, lp, &req.box);
                rec.h = summarize_multivariable(m);
                rec.h_partials = std::move(m.partials);
            }
            if (req.mode_gh) {
                DerivativeResult overall;
                overall.mode = DiffMode::GH;
                overall.differentiable = true;
                for (int i = 1; i <= arity; ++i) {
                    Side side = edge_side(req.box[static_cast<std::size_t>(i - 1)],
                                          rec.x[static_cast<std::size_t>(i - 1)]);
                    rec.gh_partials.push_back(partial_gh_derivative(e, rec.x, i, lp, side));
                    if (!rec.gh_partials.back().differentiable) {
                        overall.differentiable = false;
                        overall.reason = rec.gh_partials.back().reason;
                    }
                }
                overall.used_numeric = true;
                rec.gh = std::move(overall);
            }
        }
        if (req.mode_order2)
            rec.order2 = second_partial_existence(e, rec.x);

        rep.points.push_back(std::move(rec));
    }

    // maximal runs of identical classification over the flattened order
    for (const PointRecord& p : rep.points) {
        if (rep.regions.empty() || rep.regions.back().h_class != p.h_class() ||
            rep.regions.back().gh_class != p.gh_class()) {
            rep.regions.push_back({p.index, p.index, p.h_class(), p.gh_class()});
        } else {
            rep.regions.back().to_index = p.index;
        }
    }
    return rep;
}

Json DiffReport::to_json() const {
    Json j;
    Json reqj;
    reqj["expr"] = request.expr_text;
    Json boxj = Json::array();
    for (const Interval& r : request.box)
        boxj.push_back(Json::array({r.lower, r.upper}));
    reqj["box"] = std::move(boxj);
    reqj["samples_per_axis"] = request.samples_per_axis;
    Json modes = Json::array();
    if (request.mode_h)
        modes.push_back("h");
    if (request.mode_gh)
        modes.push_back("gh");
    if (request.mode_order2)
        modes.push_back("order2");
    reqj["modes"] = std::move(modes);
    reqj["config"] = fuzzcalc::to_json(request.config);
    j["request"] = std::move(reqj);

    Json pts = Json::array();
    for (const PointRecord& p : points) {
        Json pj;
        pj["index"] = p.index;
        pj["x"] = p.x;
        if (p.h)
            pj["h"] = condensed_result(*p.h);
        if (!p.h_partials.empty()) {
            Json parts = Json::array();
            for (const DerivativeResult& r : p.h_partials)
                parts.push_back(condensed_result(r));
            pj["h_partials"] = std::move(parts);
        }
        if (p.gh)
            pj["gh"] = condensed_result(*p.gh);
        if (!p.gh_partials.empty()) {
            Json parts = Json::array();
            for (const DerivativeResult& r : p.gh_partials)
                parts.push_back(condensed_result(r));
            pj["gh_partials"] = std::move(parts);
        }
        const DerivativeResult* with_value = nullptr;
        if (p.h && p.h->value)
            with_value = &*p.h;
        else if (p.gh && p.gh->value)
            with_value = &*p.gh;
        if (with_value) {
            const FuzzyNumber& v = *with_value->value;
            Json dc;
            dc["alpha0"] = Json::array({v.cuts().front().lower, v.cuts().front().upper});
            dc["alpha1"] = Json::array({v.cuts().back().lower, v.cuts().back().upper});
            pj["derivative_cuts"] = std::move(dc);
        }
        if (!p.order2.empty()) {
            Json oj = Json::array();
            for (const auto& [key, entry] : p.order2) {
                Json ej;
                ej["i"] = key.first;
                ej["j"] = key.second;
                ej["result"] = fuzzcalc::to_json(entry);
                oj.push_back(std::move(ej));
            }
            pj["order2"] = std::move(oj);
        }
        pts.push_back(std::move(pj));
    }
    j["points"] = std::move(pts);

    Json regs = Json::array();
    for (const RegionSegment& r : regions) {
        Json rj;
        rj["from_index"] = r.from_index;
        rj["to_index"] = r.to_index;
        if (request.box.size() == 1 && !points.empty()) {
            rj["x_start"] = points[r.from_index].x[0];
            rj["x_end"] = points[r.to_index].x[0];
        }
        rj["h"] = r.h_class;
        rj["gh"] = r.gh_class;
        regs.push_back(std::move(rj));
    }
    j["regions"] = std::move(regs);

    // bracketing pairs around every verdict change
    Json bounds = Json::array();
    for (std::size_t i = 1; i < regions.size(); ++i) {
        Json bj;
        bj["left_index"] = regions[i - 1].to_index;
        bj["right_index"] = regions[i].from_index;
        bj["left"] = regions[i - 1].h_class + "/" + regions[i - 1].gh_class;
        bj["right"] = regions[i].h_class + "/" + regions[i].gh_class;
        bounds.push_back(std::move(bj));
    }
    j["boundaries"] = std::move(bounds);

    Json fx = Json::array();
    for (const FixtureOutcome& f : fixtures) {
        Json fj;
        fj["name"] = f.name;
        fj["expected"] = f.expected;
        fj["actual"] = f.actual;
        fj["pass"] = f.pass;
        fx.push_back(std::move(fj));
    }
    j["fixtures"] = std::move(fx);
    return j;
}

std::string level_curves_csv(const FuzzyExpr& e, const Interval& range, int samples) {
    if (e.arity() != 1)
        throw Error(ErrorCode::UnsupportedForm, "level curves need a single-variable expression");
    if (samples < 2)
        throw Error(ErrorCode::InvalidArgument, "need at least two samples");
    std::ostringstream os;
    os << "x,alpha,lower,upper\n";
    const double step = (range.upper - range.lower) / (samples - 1);
    for (int i = 0; i < samples; ++i) {
        const double x = i == samples - 1 ? range.upper : range.lower + i * step;
        FuzzyNumber v = e.eval(std::span<const double>(&x, 1));
        for (std::size_t k = 0; k < v.grid().size(); ++k)
            os << format_double(x) << "," << format_double(v.grid()[k]) << ","
               << format_double(v.cuts()[k].lower) << "," << format_double(v.cuts()[k].upper)
               << "\n";
    }
    return os.str();
}

std::string profile_csv(const FuzzyNumber& f) {
    std::ostringstream os;
    os << "alpha,lower,upper\n";
    for (std::size_t k = 0; k < f.grid().size(); ++k)
        os << format_double(f.grid()[k]) << "," << format_double(f.cuts()[k].lower) << ","
           << format_double(f.cuts()[k].upper) << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// fixture suite

namespace {

constexpr double kValueTol = 1e-5; // limit-engine value tolerance
constexpr double kExactTol = 1e-9; // closed-form value tolerance

class Fixtures {
public:
    explicit Fixtures(const Config& cfg) : cfg_(cfg), grid_(cfg.grid()) {}

    std::vector<FixtureOutcome> run() {
        differences();
        single_variable_derivatives();
        modelling();
        multivariable();
        region_scans();
        return std::move(out_);
    }

private:
    void record(const std::string& name, const std::string& expected, const std::string& actual,
                bool pass) {
        out_.push_back({name, expected, actual, pass});
    }

    FuzzyNumber tri(double a1, double a, double a2) const {
        return FuzzyNumber::triangular(a1, a, a2, grid_);
    }

    std::string describe(const DerivativeResult& r) const {
        std::ostringstream os;
        os << (r.differentiable ? "differentiable" : "not_differentiable");
        if (r.reason)
            os << " (" << to_string(*r.reason) << ")";
        if (r.one_sided)
            os << " [one-sided]";
        if (r.value)
            os << " value " << r.value->to_string();
        return os.str();
    }

    FuzzyExpr parse_on_grid(const std::string& text, int arity) const {
        return parse(text, arity, grid_);
    }

    void differences() {
        {
            auto cert = gh_diff(tri(3, 4, 5), tri(-3, -2, -1));
            double worst = 0.0;
            if (cert.witness)
                for (const Interval& c : cert.witness->cuts())
                    worst = std::max({worst, std::abs(c.lower - 6.0), std::abs(c.upper - 6.0)});
            record("gh_difference_opposed_triangulars", "exists, crisp 6 at every level",
                   cert.exists ? "exists, max deviation " + format_double(worst)
                               : "not_exists",
                   cert.exists && worst <= kExactTol);
        }
        {
            auto cert = gh_diff(tri(0, 2, 4),
                                FuzzyNumber::trapezoidal(0, 1, 2, 3, grid_));
            const Interval c0 = cert.candidate.front();
            const Interval c1 = cert.candidate.back();
            const bool evidence = c0.lower == 0.0 && c0.upper == 1.0 && c1.lower == 1.0 &&
                                  c1.upper == 0.0;
            std::ostringstream actual;
            actual << (cert.exists ? "exists" : "not_exists") << ", candidate at alpha 0 ["
                   << format_double(c0.lower) << ", " << format_double(c0.upper)
                   << "], at alpha 1 [" << format_double(c1.lower) << ", "
                   << format_double(c1.upper) << "]";
            record("gh_difference_triangular_vs_trapezoidal",
                   "not_exists; case-(i) candidate [0,1] at alpha 0 and [1,0] at alpha 1",
                   actual.str(), !cert.exists && evidence);
        }
        {
            auto cert = h_diff(tri(-1, 1, 3), tri(-1, 0, 1));
            const double d = cert.witness ? distance(*cert.witness, tri(0, 1, 2)) : 1e300;
            record("h_difference_nested_triangulars", "exists, (0,1,2)",
                   cert.exists ? "exists, deviation " + format_double(d) : "not_exists",
                   cert.exists && d <= kExactTol);
        }
        {
            FuzzyNumber a = tri(0, 1, 2);
            auto cert = h_diff(a, a);
            const double d =
                cert.witness ? distance(*cert.witness, FuzzyNumber::crisp(0.0, grid_)) : 1e300;
            record("h_difference_self_is_zero", "exists, crisp 0",
                   cert.exists ? "exists, deviation " + format_double(d) : "not_exists",
                   cert.exists && d <= kExactTol);
        }
        {
            FuzzyNumber a = tri(-1, 0.5, 2);
            FuzzyNumber b = tri(0, 1, 3);
            auto cert = h_diff(add(a, b), b);
            const double d = cert.witness ? distance(*cert.witness, a) : 1e300;
            record("h_difference_recovers_addend", "exists, recovers the left addend",
                   cert.exists ? "exists, deviation " + format_double(d) : "not_exists",
                   cert.exists && d <= kExactTol);
        }
        {
            FuzzyNumber a = tri(0, 1, 2);
            FuzzyNumber d = standard_diff(a, a);
            const double dev = distance(d, tri(-2, 0, 2));
            record("standard_difference_self_spread",
                   "a (-) a = (-2,0,2), not the crisp zero",
                   "deviation " + format_double(dev) + ", value " + d.to_string(),
                   dev <= 1e-12);
        }
    }

    void single_variable_derivatives() {
        const LimitParams& lp = cfg_.limit;
        {
            FuzzyExpr e = parse_on_grid("tfn(1,2,4)", 1);
            auto sym = h_derivative_symbolic(e, 0.7, lp);
            auto num = h_derivative_numeric(
                [&e](double t) { return e.eval(std::span<const double>(&t, 1)); }, 0.7, lp);
            const FuzzyNumber zero = FuzzyNumber::crisp(0.0, grid_);
            const bool ok = sym.differentiable && num.differentiable &&
                            distance(*sym.value, zero) <= kExactTol &&
                            distance(*num.value, zero) <= kValueTol;
            record("constant_function_zero_derivative", "H-derivative is the crisp zero",
                   describe(sym) + "; numeric " + describe(num), ok);
        }
        {
            FuzzyExpr e = parse_on_grid("tfn(0,2,4)*x1", 1);
            auto r = h_derivative_symbolic(e, 1.0, lp);
            const bool ok = r.differentiable && distance(*r.value, tri(0, 2, 4)) <= kExactTol &&
                            level_derivative_check(e, std::vector<double>{1.0}, 1, r);
            record("linear_positive_halfline", "H-differentiable with the coefficient as value",
                   describe(r), ok);
        }
        {
            FuzzyExpr e = parse_on_grid("tfn(0,2,4)*x1", 1);
            auto r = h_derivative_symbolic(e, -1.0, lp);
            record("linear_negative_halfline_h", "not H-differentiable, differences missing",
                   describe(r),
                   !r.differentiable && r.reason &&
                       (*r.reason == FailReason::ForwardHDiffMissing ||
                        *r.reason == FailReason::BackwardHDiffMissing));
        }
        {
            FuzzyExpr e = parse_on_grid("tfn(0,2,4)*x1", 1);
            auto f = [&e](double t) { return e.eval(std::span<const double>(&t, 1)); };
            auto r = gh_derivative_numeric(f, -1.0, lp);
            const bool ok = r.differentiable && distance(*r.value, tri(0, 2, 4)) <= kValueTol;
            record("linear_negative_halfline_gh", "gH-differentiable with the coefficient",
                   describe(r), ok);
        }
        {
            FuzzyExpr e = parse_on_grid("tfn(0,2,4)*x1", 1);
            auto r = h_derivative_symbolic(e, 0.0, lp);
            record("linear_origin_h", "not H-differentiable at the kink of the level maps",
                   describe(r), !r.differentiable);
        }
        {
            FuzzyExpr e = parse_on_grid("tfn(0,2,4)*x1^2", 1);
            auto r = h_derivative_symbolic(e, 0.5, lp);
            const bool ok = r.differentiable && distance(*r.value, tri(0, 2, 4)) <= kValueTol &&
                            level_derivative_check(e, std::vector<double>{0.5}, 1, r);
            record("quadratic_positive_point", "H-derivative equals the coefficient at x=0.5",
                   describe(r), ok);
        }
        {
            FuzzyExpr e = parse_on_grid("tfn(0,2,4)*x1^2", 1);
            auto r = h_derivative_symbolic(e, 0.0, lp);
            const bool ok = r.differentiable &&
                            distance(*r.value, FuzzyNumber::crisp(0.0, grid_)) <= kValueTol;
            record("quadratic_origin",
                   "H-derivative exists at the parabola vertex (crisp zero)", describe(r), ok);
        }
        {
            FuzzyExpr e = parse_on_grid("tfn(0,2,4)*x1^2", 1);
            auto rh = h_derivative_symbolic(e, -0.5, lp);
            auto f = [&e](double t) { return e.eval(std::span<const double>(&t, 1)); };
            auto rg = gh_derivative_numeric(f, -0.5, lp);
            const FuzzyNumber expect = scalar_mul(-1.0, tri(0, 2, 4));
            const bool ok = !rh.differentiable && rg.differentiable &&
                            distance(*rg.value, expect) <= kValueTol;
            record("quadratic_negative_point", "H fails, gH gives the swapped coefficient",
                   describe(rh) + "; gh " + describe(rg), ok);
        }
        {
            FuzzyExpr e = parse_on_grid("tfn(1,2,3)*sin(x1)", 1);
            bool ok = true;
            std::ostringstream actual;
            for (double x0 : {0.3, 0.7, 1.2}) {
                auto r = h_derivative_symbolic(e, x0, lp);
                const FuzzyNumber expect = scalar_mul(std::cos(x0), tri(1, 2, 3));
                const bool point_ok = r.differentiable &&
                                      distance(*r.value, expect) <= kValueTol &&
                                      level_derivative_check(e, std::vector<double>{x0}, 1, r);
                ok = ok && point_ok;
                actual << "x=" << format_double(x0) << " " << describe(r) << "; ";
            }
            record("sine_first_quadrant", "H-differentiable with value cos(x) (*) coefficient",
                   actual.str(), ok);
        }
        {
            FuzzyExpr e = parse_on_grid("tfn(1,2,3)*sin(x1)", 1);
            bool ok = true;
            std::ostringstream actual;
            for (double x0 : {1.8, 2.4}) {
                auto rh = h_derivative_symbolic(e, x0, lp);
                auto f = [&e](double t) { return e.eval(std::span<const double>(&t, 1)); };
                auto rg = gh_derivative_numeric(f, x0, lp);
                const FuzzyNumber expect = scalar_mul(std::cos(x0), tri(1, 2, 3));
                ok = ok && !rh.differentiable && rg.differentiable &&
                     distance(*rg.value, expect) <= kValueTol;
                actual << "x=" << format_double(x0) << " h " << describe(rh) << ", gh "
                       << describe(rg) << "; ";
            }
            record("sine_second_quadrant", "H fails, gH succeeds with cos(x) (*) coefficient",
                   actual.str(), ok);
        }
        {
            FuzzyExpr e = parse_on_grid("tfn(1,2,3)*sin(x1)", 1);
            auto r = higher_h_derivative(e, std::vector<double>{0.8}, 1, 2, lp);
            record("sine_second_order", "second order fails (negative inner slope)",
                   describe(r) + ", failing order " + std::to_string(r.failing_order),
                   !r.differentiable && r.failing_order == 2);
        }
        {
            FuzzyExpr e = parse_on_grid("tfn(-1,1,3)*x1^3", 1);
            auto r1 = h_derivative_symbolic(e, 0.7, lp);
            auto r2 = higher_h_derivative(e, std::vector<double>{0.7}, 1, 2, lp);
            const FuzzyNumber e1 = scalar_mul(3.0 * 0.7 * 0.7, tri(-1, 1, 3));
            const FuzzyNumber e2 = scalar_mul(6.0 * 0.7, tri(-1, 1, 3));
            const bool ok = r1.differentiable && distance(*r1.value, e1) <= kExactTol &&
                            r2.differentiable && distance(*r2.value, e2) <= kExactTol;
            record("power_rule_first_and_second",
                   "derivatives n x^(n-1) and n(n-1) x^(n-2) times the coefficient",
                   describe(r1) + "; order2 " + describe(r2), ok);
        }
        {
            FuzzyExpr e =
                parse_on_grid("tfn(0,1,2)*x1^2 + tfn(1,2,3)*x1 + tfn(2,3,4)", 1);
            auto r1 = h_derivative_symbolic(e, 1.5, lp);
            const FuzzyNumber e1 = add(scalar_mul(3.0, tri(0, 1, 2)), tri(1, 2, 3));
            auto r2 = higher_h_derivative(e, std::vector<double>{1.5}, 1, 2, lp);
            const FuzzyNumber e2 = scalar_mul(2.0, tri(0, 1, 2));
            const bool ok = r1.differentiable && distance(*r1.value, e1) <= kExactTol &&
                            r2.differentiable && distance(*r2.value, e2) <= kExactTol;
            record("polynomial_sum_rule", "term-wise derivative of the fuzzy polynomial",
                   describe(r1) + "; order2 " + describe(r2), ok);
        }
        {
            FuzzyExpr e = parse_on_grid("tfn(1,2,3)*exp(x1)", 1);
            bool ok = true;
            std::ostringstream actual;
            for (double x0 : {0.0, 0.5, 1.0}) {
                for (int order = 1; order <= 4; ++order) {
                    auto r = higher_h_derivative(e, std::vector<double>{x0}, 1, order, lp);
                    const FuzzyNumber expect = scalar_mul(std::exp(x0), tri(1, 2, 3));
                    const bool point_ok =
                        r.differentiable && distance(*r.value, expect) <= kExactTol;
                    ok = ok && point_ok;
                    if (!point_ok)
                        actual << "x=" << format_double(x0) << " order " << order << " "
                               << describe(r) << "; ";
                }
            }
            if (ok)
                actual << "orders 1..4 H-differentiable at x in {0, 0.5, 1}";
            record("exponential_all_orders", "every order H-differentiable with value e^x (*) c",
                   actual.str(), ok);
        }
    }

    void modelling() {
        {
            FuzzyExpr f1 = parse_on_grid("tfn(0,2,4)*x1", 1);
            FuzzyExpr f2 = parse_on_grid("tfn(0,1,2)*(2*x1)", 1);
            double worst = 0.0;
            for (double x : {1.0, 2.0, 3.0, 4.0, 5.0}) {
                auto span = std::span<const double>(&x, 1);
                worst = std::max(worst, distance(f1.eval(span), f2.eval(span)));
            }
            const double x1 = 1.0, x2 = 2.0;
            const double d1 = distance(f1.eval(std::span<const double>(&x1, 1)), tri(0, 2, 4));
            const double d2 = distance(f1.eval(std::span<const double>(&x2, 1)), tri(0, 4, 8));
            record("modelling_equivalent_level_functions",
                   "both fuzzifications of 2x share level functions; f(1)=(0,2,4), f(2)=(0,4,8)",
                   "max deviation " + format_double(std::max({worst, d1, d2})),
                   worst <= 1e-12 && d1 <= 1e-12 && d2 <= 1e-12);
        }
        {
            FuzzyExpr g1 = parse_on_grid("tfn(1,2,3)*x1", 1);
            FuzzyExpr f2 = parse_on_grid("tfn(0,1,2)*(2*x1)", 1);
            const double x = 1.0;
            auto span = std::span<const double>(&x, 1);
            FuzzyNumber a = g1.eval(span);
            FuzzyNumber b = f2.eval(span);
            const Interval core_a = a.cuts().back();
            const Interval core_b = b.cuts().back();
            const bool same_core = std::abs(core_a.lower - core_b.lower) <= 1e-12 &&
                                   std::abs(core_a.upper - core_b.upper) <= 1e-12;
            const double spread_gap = distance(a, b);
            record("modelling_spread_sensitivity",
                   "narrower coefficient keeps the centre but changes the spread",
                   "cores match: " + std::string(same_core ? "yes" : "no") + ", distance " +
                       format_double(spread_gap),
                   same_core && spread_gap > 0.5);
        }
    }

    void multivariable() {
        const LimitParams& lp = cfg_.limit;
        const std::vector<double> p11 = {1.0, 1.0};
        {
            FuzzyExpr e = parse_on_grid(
                "tfn(-1,1,3)*x1^3 + tfn(1,2,3)*x2^3 + tfn(-1,1,3)*(x1*x2)", 2);
            auto r2 = partial_h_derivative(e, p11, 2, lp);
            auto r1 = partial_h_derivative(e, p11, 1, lp);
            const bool ok = !r2.differentiable && r2.reason &&
                            *r2.reason == FailReason::ZeroPartial && !r1.differentiable;
            record("multivariable_original_grouping",
                   "zero partials block both partial H-derivatives", describe(r1) + "; " +
                       describe(r2),
                   ok);
        }
        {
            FuzzyExpr e =
                parse_on_grid("tfn(-1,1,3)*(x1^3 + 2*x2^3) + tfn(-1,1,3)*(x1*x2)", 2);
            bool ok = true;
            std::ostringstream actual;
            for (const auto& pt : std::vector<std::vector<double>>{{0.5, 0.5}, {1.0, 1.0},
                                                                   {1.5, 0.5}}) {
                MultivariableResult m = multivariable_h_derivative(e, pt, lp);
                ok = ok && m.differentiable;
                actual << "(" << format_double(pt[0]) << "," << format_double(pt[1]) << ") "
                       << (m.differentiable ? "ok" : "fails: " + m.detail) << "; ";
            }
            if (ok) {
                auto r1 = partial_h_derivative(e, p11, 1, lp);
                const FuzzyNumber expect = add(scalar_mul(3.0, tri(-1, 1, 3)),
                                               scalar_mul(1.0, tri(-1, 1, 3)));
                ok = r1.differentiable && distance(*r1.value, expect) <= kExactTol;
                actual << "d/dx1 at (1,1): " << describe(r1);
            }
            record("multivariable_regrouped_first_order",
                   "regrouped form is H-differentiable on the positive quadrant", actual.str(),
                   ok);
        }
        {
            FuzzyExpr e =
                parse_on_grid("tfn(-1,1,3)*(x1^3 + 2*x2^3) + tfn(-1,1,3)*(x1*x2)", 2);
            auto m = second_partial_existence(e, p11);
            const bool mixed_fail = !m[{1, 2}].exists && !m[{2, 1}].exists;
            std::ostringstream actual;
            for (const auto& [key, entry] : m)
                actual << "(" << key.first << "," << key.second << ") "
                       << (entry.exists ? "exists" : "not_exists") << "; ";
            record("multivariable_regrouped_second_order",
                   "mixed second-order pairs do not exist", actual.str(), mixed_fail);
        }
        {
            FuzzyExpr e = parse_on_grid("tfn(0,1,2)*(x1^3 + 2*x2^3 + x1*x2)", 2);
            MultivariableResult first = multivariable_h_derivative(e, p11, lp);
            auto m = second_partial_existence(e, p11);
            bool all_second = true;
            for (const auto& [key, entry] : m)
                all_second = all_second && entry.exists;
            record("multivariable_single_term_full",
                   "single-term form has first and second partial H-derivatives",
                   std::string(first.differentiable ? "first ok" : "first fails") +
                       (all_second ? ", all second-order pairs exist"
                                   : ", some second-order pair missing"),
                   first.differentiable && all_second);
        }
        {
            FuzzyExpr e =
                parse_on_grid("tfn(1,2,4)*x1^2 + tfn(1,2,4)*x2^2 + tfn(1,3,5)", 2);
            auto r1 = partial_h_derivative(e, p11, 1, lp);
            record("quadratic_model_original",
                   "zero partial of the second coordinate term blocks H-differentiability",
                   describe(r1),
                   !r1.differentiable && r1.reason && *r1.reason == FailReason::ZeroPartial);
        }
        {
            FuzzyExpr e = parse_on_grid("tfn(0.5,1,2)*(2*x1^2 + 2*x2^2 + 2)", 2);
            bool ok = true;
            std::ostringstream actual;
            for (const auto& pt :
                 std::vector<std::vector<double>>{{0.5, 0.5}, {1.0, 1.0}}) {
                MultivariableResult m = multivariable_h_derivative(e, pt, lp);
                ok = ok && m.differentiable;
                actual << "(" << format_double(pt[0]) << "," << format_double(pt[1]) << ") "
                       << (m.differentiable ? "ok" : "fails") << "; ";
            }
            auto m2 = second_partial_existence(e, p11);
            const bool diag = m2[{1, 1}].exists && m2[{2, 2}].exists;
            actual << "diagonal second-order " << (diag ? "exists" : "missing");
            record("quadratic_model_rewritten",
                   "single-term rewrite is H-differentiable (diagonal second order too)",
                   actual.str(), ok && diag);
        }
    }

    void region_scans() {
        {
            ScanRequest req;
            req.expr_text = "tfn(0,2,4)*x1^2";
            req.box = {{-1.0, 1.0}};
            req.samples_per_axis = 21;
            req.config = cfg_;
            DiffReport rep = scan(req);
            bool ok = true;
            for (const PointRecord& p : rep.points) {
                const bool expect_h = p.x[0] >= 0.0;
                ok = ok && p.h && p.h->differentiable == expect_h;
                ok = ok && p.gh && p.gh->differentiable;
            }
            record("scan_quadratic_region",
                   "H-differentiable exactly on [0,1] samples, gH everywhere",
                   ok ? "regions match" : "regions differ", ok);
        }
        {
            ScanRequest req;
            req.expr_text = "tfn(1,2,3)*sin(x1)";
            req.box = {{0.0, 3.141592653589793}};
            req.samples_per_axis = 33;
            req.config = cfg_;
            DiffReport rep = scan(req);
            bool ok = true;
            const double half_pi = 3.141592653589793 / 2.0;
            for (const PointRecord& p : rep.points) {
                // the sample at pi/2 itself sits on the region boundary;
                // its verdict is tolerance-sensitive and not asserted
                if (std::abs(p.x[0] - half_pi) > 0.05)
                    ok = ok && p.h && p.h->differentiable == (p.x[0] < half_pi);
                ok = ok && p.gh && p.gh->differentiable;
            }
            record("scan_sine_region",
                   "H-differentiable left of pi/2, not right of it, gH everywhere on [0, pi]",
                   ok ? "regions match" : "regions differ", ok);
        }
    }

    Config cfg_;
    AlphaGrid grid_;
    std::vector<FixtureOutcome> out_;
};

} // namespace

DiffReport run_fixtures(const Config& cfg) {
    DiffReport rep;
    rep.request.expr_text = "";
    rep.request.box = {};
    rep.request.mode_h = rep.request.mode_gh = rep.request.mode_order2 = false;
    rep.request.config = cfg;
    rep.fixtures = Fixtures(cfg).run();
    return rep;
}

} // namespace fuzzcalc
