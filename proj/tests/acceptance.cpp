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

// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fuzzcalc/analyzer.hpp"
#include "fuzzcalc/arithmetic.hpp"
#include "fuzzcalc/derivative.hpp"
#include "fuzzcalc/difference.hpp"
#include "fuzzcalc/metric.hpp"
#include "fuzzcalc/parser.hpp"

using namespace fuzzcalc;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool pass, const std::string& note = "") {
    std::printf("[%s] %d. %s%s%s\n", pass ? "PASS" : "FAIL", criterion, what.c_str(),
                note.empty() ? "" : " -- ", note.c_str());
    if (!pass)
        ++g_failures;
}

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

const AlphaGrid kGrid = AlphaGrid::uniform();
const LimitParams kLp{};

FuzzyNumber tri(double a1, double a, double a2) { return FuzzyNumber::triangular(a1, a, a2, kGrid); }

ScalarFuzzyFn fn(const FuzzyExpr& e) {
    return [e](double t) { return e.eval(std::span<const double>(&t, 1)); };
}

// ---------------------------------------------------------------- 1-3

void criterion_1() {
    // warm-up, then median of repeated timings
    auto cert = gh_diff(tri(3, 4, 5), tri(-3, -2, -1));
    std::vector<double> times;
    for (int i = 0; i < 7; ++i) {
        auto t0 = Clock::now();
        cert = gh_diff(tri(3, 4, 5), tri(-3, -2, -1));
        times.push_back(ms_since(t0));
    }
    std::sort(times.begin(), times.end());
    const double median_ms = times[times.size() / 2];

    bool exact = cert.exists;
    if (cert.exists)
        for (const Interval& c : cert.witness->cuts())
            exact = exact && std::abs(c.lower - 6.0) <= 1e-9 && std::abs(c.upper - 6.0) <= 1e-9;
    report(1, "gH-difference of (3,4,5) and (-3,-2,-1) is crisp 6 at every level",
           exact && median_ms < 1.0,
           "median " + format_double(median_ms) + " ms");
}

void criterion_2() {
    auto cert = gh_diff(tri(0, 2, 4), FuzzyNumber::trapezoidal(0, 1, 2, 3, kGrid));
    const Interval c0 = cert.candidate.front();
    const Interval c1 = cert.candidate.back();
    const bool evidence =
        c0.lower == 0.0 && c0.upper == 1.0 && c1.lower == 1.0 && c1.upper == 0.0;
    report(2, "gH-difference of (0,2,4) and (0,1,2,3) does not exist, with endpoint evidence",
           !cert.exists && evidence);
}

void criterion_3() {
    auto cert = h_diff(tri(-1, 1, 3), tri(-1, 0, 1));
    report(3, "H-difference of (-1,1,3) and (-1,0,1) is (0,1,2)",
           cert.exists && distance(*cert.witness, tri(0, 1, 2)) <= 1e-9);
}

// ------------------------------------------------------------------ 4

struct TimedCheck {
    bool pass = true;
    double worst_ms = 0.0;

    void add(bool ok, double ms) {
        pass = pass && ok;
        worst_ms = std::max(worst_ms, ms);
    }
};

void criterion_4() {
    const double tol = 1e-5;
    TimedCheck t;

    { // a. constant
        FuzzyExpr e = parse("tfn(1,2,4)", 1, kGrid);
        auto t0 = Clock::now();
        auto r = h_derivative_symbolic(e, 0.7, kLp);
        auto n = h_derivative_numeric(fn(e), 0.7, kLp);
        const double ms = ms_since(t0);
        const FuzzyNumber zero = FuzzyNumber::crisp(0, kGrid);
        t.add(r.differentiable && distance(*r.value, zero) <= tol && n.differentiable &&
                  distance(*n.value, zero) <= tol,
              ms);
    }
    report(4, "a: constant function has H-derivative 0", t.pass && t.worst_ms < 100.0,
           format_double(t.worst_ms) + " ms");

    t = TimedCheck{};
    { // b. linear
        FuzzyExpr e = parse("tfn(0,2,4)*x1", 1, kGrid);
        auto t0 = Clock::now();
        auto at1 = h_derivative_symbolic(e, 1.0, kLp);
        auto hneg = h_derivative_symbolic(e, -1.0, kLp);
        auto gneg = gh_derivative_numeric(fn(e), -1.0, kLp);
        const double ms = ms_since(t0);
        t.add(at1.differentiable && distance(*at1.value, tri(0, 2, 4)) <= tol, ms);
        t.add(!hneg.differentiable && hneg.reason &&
                  (*hneg.reason == FailReason::ForwardHDiffMissing ||
                   *hneg.reason == FailReason::BackwardHDiffMissing),
              ms);
        t.add(gneg.differentiable && distance(*gneg.value, tri(0, 2, 4)) <= tol, ms);
    }
    report(4, "b: linear function: H at 1, H fails at -1, gH at -1", t.pass && t.worst_ms < 100.0,
           format_double(t.worst_ms) + " ms");

    t = TimedCheck{};
    { // c. quadratic
        FuzzyExpr e = parse("tfn(0,2,4)*x1^2", 1, kGrid);
        auto t0 = Clock::now();
        auto mid = h_derivative_symbolic(e, 0.5, kLp);
        const double ms0 = ms_since(t0);
        t.add(mid.differentiable && distance(*mid.value, tri(0, 2, 4)) <= tol, ms0);

        t0 = Clock::now();
        auto origin = h_derivative_symbolic(e, 0.0, kLp);
        t.add(origin.differentiable &&
                  distance(*origin.value, FuzzyNumber::crisp(0, kGrid)) <= tol,
              ms_since(t0));

        t0 = Clock::now();
        auto hneg = h_derivative_symbolic(e, -0.5, kLp);
        auto gneg = gh_derivative_numeric(fn(e), -0.5, kLp);
        t.add(!hneg.differentiable && gneg.differentiable &&
                  distance(*gneg.value, scalar_mul(-1.0, tri(0, 2, 4))) <= tol,
              ms_since(t0));
    }
    report(4, "c: quadratic: H at 0.5 and at 0, H fails / gH works at -0.5",
           t.pass && t.worst_ms < 100.0, format_double(t.worst_ms) + " ms");

    t = TimedCheck{};
    { // d. sine
        FuzzyExpr e = parse("tfn(1,2,3)*sin(x1)", 1, kGrid);
        for (double x : {0.3, 0.8, 1.3}) {
            auto t0 = Clock::now();
            auto r = h_derivative_symbolic(e, x, kLp);
            t.add(r.differentiable && distance(*r.value, scalar_mul(std::cos(x), tri(1, 2, 3))) <=
                                          tol,
                  ms_since(t0));
        }
        for (double x : {1.8, 2.4, 3.0}) {
            auto t0 = Clock::now();
            auto r = h_derivative_symbolic(e, x, kLp);
            t.add(!r.differentiable, ms_since(t0));
        }
        for (double x : {0.4, 1.0}) {
            auto t0 = Clock::now();
            auto r = higher_h_derivative(e, std::vector<double>{x}, 1, 2, kLp);
            t.add(!r.differentiable && r.failing_order == 2, ms_since(t0));
        }
    }
    report(4, "d: sine: H on (0,pi/2), not on (pi/2,pi), order 2 fails",
           t.pass && t.worst_ms < 100.0, format_double(t.worst_ms) + " ms");

    t = TimedCheck{};
    { // e. exponential
        FuzzyExpr e = parse("tfn(1,2,3)*exp(x1)", 1, kGrid);
        for (double x : {0.0, 0.5, 1.0})
            for (int order = 1; order <= 4; ++order) {
                auto t0 = Clock::now();
                auto r = higher_h_derivative(e, std::vector<double>{x}, 1, order, kLp);
                t.add(r.differentiable &&
                          distance(*r.value, scalar_mul(std::exp(x), tri(1, 2, 3))) <= tol,
                      ms_since(t0));
            }
    }
    report(4, "e: exponential: orders 1-4 H-differentiable at 0, 0.5, 1",
           t.pass && t.worst_ms < 100.0, format_double(t.worst_ms) + " ms");
}

// ------------------------------------------------------------------ 5

void criterion_5() {
    const std::vector<std::vector<double>> pts = {{0.5, 0.5}, {1.0, 1.0}, {1.5, 0.5}};
    bool ok = true;

    FuzzyExpr original =
        parse("tfn(-1,1,3)*x1^3 + tfn(1,2,3)*x2^3 + tfn(-1,1,3)*(x1*x2)", 2, kGrid);
    for (const auto& p : pts) {
        auto r = partial_h_derivative(original, p, 2, kLp);
        ok = ok && !r.differentiable && r.reason && *r.reason == FailReason::ZeroPartial;
    }

    FuzzyExpr regrouped = parse("tfn(-1,1,3)*(x1^3 + 2*x2^3) + tfn(-1,1,3)*(x1*x2)", 2, kGrid);
    for (const auto& p : pts) {
        auto m = multivariable_h_derivative(regrouped, p, kLp);
        ok = ok && m.differentiable;
        auto pairs = second_partial_existence(regrouped, p);
        ok = ok && !pairs[{1, 2}].exists && !pairs[{2, 1}].exists;
    }

    FuzzyExpr single = parse("tfn(0,1,2)*(x1^3 + 2*x2^3 + x1*x2)", 2, kGrid);
    for (const auto& p : pts) {
        auto m = multivariable_h_derivative(single, p, kLp);
        auto pairs = second_partial_existence(single, p);
        bool all = m.differentiable;
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                all = all && pairs[{i, j}].exists;
        ok = ok && all;
    }
    report(5, "cubic model: original grouping blocks, regrouped first order works, single term full",
           ok);

    FuzzyExpr quad_orig = parse("tfn(1,2,4)*x1^2 + tfn(1,2,4)*x2^2 + tfn(1,3,5)", 2, kGrid);
    FuzzyExpr quad_new = parse("tfn(0.5,1,2)*(2*x1^2 + 2*x2^2 + 2)", 2, kGrid);
    bool ok2 = true;
    for (const auto& p : pts) {
        auto r = partial_h_derivative(quad_orig, p, 1, kLp);
        ok2 = ok2 && !r.differentiable && r.reason && *r.reason == FailReason::ZeroPartial;
        auto m = multivariable_h_derivative(quad_new, p, kLp);
        ok2 = ok2 && m.differentiable;
    }
    report(5, "quadratic model: original grouping blocks, single-term rewrite is H-differentiable",
           ok2);
}

// ------------------------------------------------------------------ 6

void criterion_6() {
    FuzzyExpr f1 = parse("tfn(0,2,4)*x1", 1, kGrid);
    FuzzyExpr f2 = parse("tfn(0,1,2)*(2*x1)", 1, kGrid);
    double worst = 0.0;
    for (double x : {1.0, 2.0, 3.0, 4.0, 5.0}) {
        auto pt = std::span<const double>(&x, 1);
        FuzzyNumber a = f1.eval(pt);
        FuzzyNumber b = f2.eval(pt);
        worst = std::max(worst, distance(a, b));
    }
    report(6, "both fuzzifications of 2x agree on all grid levels at x = 1..5", worst <= 1e-12,
           "max deviation " + format_double(worst));
}

// ------------------------------------------------------------------ 7

struct Rand {
    std::mt19937_64 rng;
    explicit Rand(std::uint64_t seed) : rng(seed) {}
    double real(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
    double dyadic() { return integer(-64, 64) / 8.0; }

    FuzzyNumber number(const AlphaGrid& grid, bool dyadic_params = false) {
        auto draw = [&] { return dyadic_params ? dyadic() : real(-8.0, 8.0); };
        switch (integer(0, 3)) {
        case 0: return FuzzyNumber::crisp(draw(), grid);
        case 1: {
            double p[3] = {draw(), draw(), draw()};
            std::sort(p, p + 3);
            return FuzzyNumber::triangular(p[0], p[1], p[2], grid);
        }
        default: {
            double p[4] = {draw(), draw(), draw(), draw()};
            std::sort(p, p + 4);
            return FuzzyNumber::trapezoidal(p[0], p[1], p[2], p[3], grid);
        }
        }
    }
};

FuzzyExpr random_positive_polynomial(Rand& r) {
    const int terms = r.integer(1, 3);
    std::vector<FuzzyTerm> ts;
    for (int t = 0; t < terms; ++t) {
        double p[3] = {r.real(-4, 4), r.real(-4, 4), r.real(-4, 4)};
        std::sort(p, p + 3);
        CrispExpr g = CrispExpr::mul(CrispExpr::constant(r.real(0.1, 3.0)),
                                     CrispExpr::pow(CrispExpr::variable(1), r.integer(1, 4)));
        ts.push_back({FuzzyNumber::triangular(p[0], p[1], p[2], kGrid), g});
    }
    return FuzzyExpr(1, std::move(ts));
}

void criterion_7() {
    const int cases = 1000;
    auto t0 = Clock::now();

    bool invariants = true;
    {
        Rand r(201);
        for (int i = 0; i < cases; ++i) {
            FuzzyNumber a = r.number(kGrid), b = r.number(kGrid);
            invariants = invariants && profile_valid(add(a, b).cuts()) &&
                         profile_valid(scalar_mul(r.real(-5, 5), a).cuts());
        }
    }
    report(7, "invariant preservation under (+) and scaling, 1000 cases", invariants);

    bool metric_ok = true;
    {
        const AlphaGrid dyadic = AlphaGrid::uniform(129);
        Rand r(202);
        for (int i = 0; i < cases; ++i) {
            FuzzyNumber a = r.number(dyadic, true), b = r.number(dyadic, true),
                        c = r.number(dyadic, true), d = r.number(dyadic, true);
            const double dab = distance(a, b);
            metric_ok = metric_ok && dab >= 0 && dab == distance(b, a) && distance(a, a) == 0;
            const double tri_rhs = dab + distance(b, c);
            metric_ok = metric_ok && distance(a, c) <= tri_rhs + 1e-12 * (1 + tri_rhs);
            metric_ok = metric_ok && distance(add(a, c), add(b, c)) == dab;
            const double l = r.real(-4, 4);
            const double hom = std::abs(l) * dab;
            metric_ok = metric_ok && std::abs(distance(scalar_mul(l, a), scalar_mul(l, b)) - hom) <=
                                         1e-12 * (1 + hom);
            const double sub_rhs = distance(a, c) + distance(b, d);
            metric_ok = metric_ok && distance(add(a, b), add(c, d)) <= sub_rhs + 1e-12 * (1 + sub_rhs);
        }
    }
    report(7, "metric axioms and the three sup-metric properties, 1000 cases", metric_ok);

    bool algebra = true;
    {
        Rand r(203);
        const FuzzyNumber zero = FuzzyNumber::crisp(0, kGrid);
        for (int i = 0; i < cases; ++i) {
            FuzzyNumber a = r.number(kGrid), b = r.number(kGrid);
            algebra = algebra && add(a, zero).identical(a);
            double x = r.real(0, 4), y = r.real(0, 4);
            if (r.integer(0, 1)) {
                x = -x;
                y = -y;
            }
            algebra = algebra && distance(scalar_mul(x + y, a),
                                          add(scalar_mul(x, a), scalar_mul(y, a))) <= 1e-10;
            const double l = r.real(-4, 4), mu = r.real(-4, 4);
            algebra = algebra && distance(scalar_mul(l, add(a, b)),
                                          add(scalar_mul(l, a), scalar_mul(l, b))) <= 1e-10;
            algebra = algebra &&
                      distance(scalar_mul(l, scalar_mul(mu, a)), scalar_mul(l * mu, a)) <= 1e-10;
        }
        // the mixed-sign counterexample
        FuzzyNumber w = tri(0, 1, 2);
        algebra = algebra && distance(scalar_mul(0.0, w),
                                      add(scalar_mul(1.0, w), scalar_mul(-1.0, w))) > 0.5;
    }
    report(7, "algebraic laws with the mixed-sign counterexample, 1000 cases", algebra);

    bool consistency = true;
    {
        Rand r(204);
        int hits = 0;
        for (int i = 0; i < cases; ++i) {
            FuzzyNumber b = r.number(kGrid);
            FuzzyNumber a = i % 2 ? r.number(kGrid) : add(b, r.number(kGrid));
            auto h = h_diff(a, b);
            if (!h.exists)
                continue;
            ++hits;
            auto gh = gh_diff(a, b);
            consistency = consistency && gh.exists &&
                          distance(*h.witness, *gh.witness) <= 1e-9 &&
                          distance(add(*h.witness, b), a) <= 1e-9;
        }
        consistency = consistency && hits >= cases / 3;
    }
    report(7, "H-difference implies gH-difference with equal witness, 1000 cases", consistency);

    bool levels = true;
    {
        Rand r(205);
        for (int i = 0; i < cases; ++i) {
            FuzzyExpr e = random_positive_polynomial(r);
            const double x0 = r.real(0.2, 2.0);
            auto res = h_derivative_symbolic(e, x0, kLp);
            levels = levels && res.differentiable &&
                     level_derivative_check(e, std::vector<double>{x0}, 1, res);
        }
    }
    report(7, "level functions of the derivative match finite differences, 1000 cases", levels);

    bool oracle = true;
    {
        Rand r(206);
        for (int i = 0; i < cases; ++i) {
            FuzzyExpr e = random_positive_polynomial(r);
            const double x0 = r.real(0.2, 2.0);
            auto sym = h_derivative_symbolic(e, x0, kLp);
            auto num = h_derivative_numeric(fn(e), x0, kLp);
            oracle = oracle && sym.differentiable && num.differentiable &&
                     distance(*sym.value, *num.value) <= 1e-5;
        }
    }
    report(7, "closed-form vs limit-engine derivative agreement, 1000 cases", oracle);

    const double total_s = ms_since(t0) / 1000.0;
    report(7, "total property-suite runtime below 60 s", total_s < 60.0,
           format_double(total_s) + " s");
}

// ------------------------------------------------------------------ 8

void criterion_8() {
    ScanRequest req;
    req.expr_text = "tfn(1,2,3)*sin(x1)";
    req.box = {{0.0, 3.141592653589793}};
    req.samples_per_axis = 33;
    const std::string a = scan(req).to_json().dump(2);
    const std::string b = scan(req).to_json().dump(2);
    report(8, "two identical scans serialize byte-identically", a == b);
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (g_failures == 0) {
        std::printf("acceptance: all criteria satisfied\n");
        return 0;
    }
    std::printf("acceptance: %d criterion check(s) failed\n", g_failures);
    return 1;
}
