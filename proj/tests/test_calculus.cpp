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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fuzzcalc/arithmetic.hpp"
#include "fuzzcalc/derivative.hpp"
#include "fuzzcalc/error.hpp"
#include "fuzzcalc/metric.hpp"
#include "fuzzcalc/parser.hpp"

using namespace fuzzcalc;

namespace {

const AlphaGrid kGrid = AlphaGrid::uniform();
const LimitParams kParams{};

FuzzyNumber tri(double a1, double a, double a2) { return FuzzyNumber::triangular(a1, a, a2, kGrid); }

ScalarFuzzyFn fn(const FuzzyExpr& e) {
    return [e](double t) { return e.eval(std::span<const double>(&t, 1)); };
}

FuzzyExpr parse1(const std::string& text) { return parse(text, 1, kGrid); }

} // namespace

TEST_CASE("numeric H-derivative of a constant is the crisp zero") {
    FuzzyExpr e = parse1("tfn(1,2,4)");
    auto r = h_derivative_numeric(fn(e), 3.3, kParams);
    REQUIRE(r.differentiable);
    CHECK(distance(*r.value, FuzzyNumber::crisp(0, kGrid)) <= 1e-9);
    // quotients are identically zero: immediate convergence
    CHECK(r.trace.size() <= 3);
}

TEST_CASE("numeric H-derivative of the linear function") {
    FuzzyExpr e = parse1("tfn(0,2,4)*x1");
    SUBCASE("positive point") {
        auto r = h_derivative_numeric(fn(e), 1.0, kParams);
        REQUIRE(r.differentiable);
        CHECK(distance(*r.value, tri(0, 2, 4)) <= 1e-5);
    }
    SUBCASE("negative point: differences missing at every step") {
        auto r = h_derivative_numeric(fn(e), -1.0, kParams);
        REQUIRE_FALSE(r.differentiable);
        CHECK(*r.reason == FailReason::ForwardHDiffMissing);
        CHECK(r.trace.size() == static_cast<std::size_t>(kParams.max_iters));
        for (const StepRecord& s : r.trace) {
            CHECK_FALSE(s.forward_exists);
            CHECK_FALSE(s.backward_exists);
        }
    }
    SUBCASE("origin: backward differences never recover") {
        auto r = h_derivative_numeric(fn(e), 0.0, kParams);
        REQUIRE_FALSE(r.differentiable);
        CHECK(*r.reason == FailReason::BackwardHDiffMissing);
        for (const StepRecord& s : r.trace)
            CHECK_FALSE(s.backward_exists);
    }
}

TEST_CASE("numeric H-derivative of the quadratic") {
    FuzzyExpr e = parse1("tfn(0,2,4)*x1^2");
    SUBCASE("interior of the positive branch") {
        auto r = h_derivative_numeric(fn(e), 0.5, kParams);
        REQUIRE(r.differentiable);
        CHECK(distance(*r.value, tri(0, 2, 4)) <= 1e-5); // a (*) 2x = a at x = 0.5
    }
    SUBCASE("vertex: backward violations fall below the validity tolerance") {
        auto r = h_derivative_numeric(fn(e), 0.0, kParams);
        REQUIRE(r.differentiable);
        CHECK(distance(*r.value, FuzzyNumber::crisp(0, kGrid)) <= 1e-5);
        // early steps genuinely miss the backward difference
        CHECK_FALSE(r.trace.front().backward_exists);
    }
    SUBCASE("negative branch fails") {
        auto r = h_derivative_numeric(fn(e), -0.5, kParams);
        REQUIRE_FALSE(r.differentiable);
    }
}

TEST_CASE("numeric gH-derivative of a constant is the crisp zero") {
    FuzzyExpr e = parse1("tfn(1,2,4)");
    auto r = gh_derivative_numeric(fn(e), -2.0, kParams);
    REQUIRE(r.differentiable);
    CHECK(distance(*r.value, FuzzyNumber::crisp(0, kGrid)) <= 1e-9);
}

TEST_CASE("numeric gH-derivative handles sign-reversing slopes") {
    FuzzyExpr lin = parse1("tfn(0,2,4)*x1");
    auto r = gh_derivative_numeric(fn(lin), -1.0, kParams);
    REQUIRE(r.differentiable);
    CHECK(distance(*r.value, tri(0, 2, 4)) <= 1e-5);

    FuzzyExpr quad = parse1("tfn(0,2,4)*x1^2");
    auto q = gh_derivative_numeric(fn(quad), -0.5, kParams);
    REQUIRE(q.differentiable);
    CHECK(distance(*q.value, scalar_mul(-1.0, tri(0, 2, 4))) <= 1e-5);

    FuzzyExpr sine = parse1("tfn(1,2,3)*sin(x1)");
    auto s = gh_derivative_numeric(fn(sine), 2.2, kParams);
    REQUIRE(s.differentiable);
    CHECK(distance(*s.value, scalar_mul(std::cos(2.2), tri(1, 2, 3))) <= 1e-5);
}

TEST_CASE("one-sided engine modes for domain boundaries") {
    FuzzyExpr sine = parse1("tfn(1,2,3)*sin(x1)");
    auto left = h_derivative_numeric(fn(sine), 0.0, kParams, Side::ForwardOnly);
    REQUIRE(left.differentiable);
    CHECK(left.one_sided);
    CHECK(distance(*left.value, tri(1, 2, 3)) <= 1e-5); // cos(0) = 1

    const double pi = 3.141592653589793;
    auto right_h = h_derivative_numeric(fn(sine), pi, kParams, Side::BackwardOnly);
    CHECK_FALSE(right_h.differentiable);
    CHECK(*right_h.reason == FailReason::BackwardHDiffMissing);

    auto right_gh = gh_derivative_numeric(fn(sine), pi, kParams, Side::BackwardOnly);
    REQUIRE(right_gh.differentiable);
    CHECK(distance(*right_gh.value, scalar_mul(std::cos(pi), tri(1, 2, 3))) <= 1e-5);
}

TEST_CASE("symbolic existence analysis") {
    SUBCASE("positive slope in a positive context") {
        FuzzyExpr e = parse1("tfn(-1,1,3)*x1^3");
        auto r = h_derivative_symbolic(e, 0.7, kParams);
        REQUIRE(r.differentiable);
        CHECK(r.used_symbolic);
        CHECK_FALSE(r.used_numeric);
        CHECK(distance(*r.value, scalar_mul(3 * 0.7 * 0.7, tri(-1, 1, 3))) <= 1e-12);
    }
    SUBCASE("negative slope in a positive context blocks") {
        FuzzyExpr e = parse1("tfn(1,2,3)*sin(x1)");
        auto r = h_derivative_symbolic(e, 2.0, kParams);
        REQUIRE_FALSE(r.differentiable);
        CHECK(*r.reason == FailReason::ForwardHDiffMissing);
        CHECK_FALSE(r.used_numeric);
    }
    SUBCASE("negative context with negative slope is the mirrored positive case") {
        // g < 0 and g' < 0: both scalar factors share a sign, so the
        // split argument applies verbatim
        FuzzyExpr e = parse1("tfn(1,2,3)*(0 - exp(x1))");
        auto r = h_derivative_symbolic(e, 0.3, kParams);
        REQUIRE(r.differentiable);
        CHECK(distance(*r.value, scalar_mul(-std::exp(0.3), tri(1, 2, 3))) <= 1e-12);
        // the numeric engine agrees
        auto n = h_derivative_numeric(fn(e), 0.3, kParams);
        REQUIRE(n.differentiable);
        CHECK(distance(*n.value, *r.value) <= 1e-5);
    }
    SUBCASE("crisp coefficients never block") {
        FuzzyExpr e = parse1("crisp(2)*(3 - x1)");
        auto r = h_derivative_symbolic(e, 1.0, kParams);
        REQUIRE(r.differentiable);
        CHECK(distance(*r.value, FuzzyNumber::crisp(-2, kGrid)) <= 1e-12);
    }
    SUBCASE("constant terms contribute the crisp zero") {
        FuzzyExpr e = parse1("tfn(0,1,2)*x1 + tfn(5,6,7)");
        auto r = h_derivative_symbolic(e, 2.0, kParams);
        REQUIRE(r.differentiable);
        CHECK(distance(*r.value, tri(0, 1, 2)) <= 1e-12);
    }
    SUBCASE("mixed slope signs defer to the limit engine") {
        FuzzyExpr e = parse1("tfn(0,1,2)*(5*x1) + tfn(0,1,2)*(3 - x1)");
        auto r = h_derivative_symbolic(e, 1.0, kParams);
        CHECK(r.used_numeric); // analysis alone cannot decide
        REQUIRE(r.differentiable);
        // d/dx of the level maps: 5*cL - cL and 5*cU - cU
        CHECK(distance(*r.value, scalar_mul(4.0, tri(0, 1, 2))) <= 1e-5);
    }
    SUBCASE("uniformly negative slopes block without the engine") {
        FuzzyExpr e = parse1("tfn(0,1,2)*(3 - x1) + tfn(1,2,3)*(2 - x1)");
        auto r = h_derivative_symbolic(e, 1.0, kParams);
        REQUIRE_FALSE(r.differentiable);
        CHECK(*r.reason == FailReason::ForwardHDiffMissing);
        // and the engine corroborates: no difference at any step
        auto n = h_derivative_numeric(fn(e), 1.0, kParams);
        REQUIRE_FALSE(n.differentiable);
        for (const StepRecord& s : n.trace) {
            CHECK_FALSE(s.forward_exists);
            CHECK_FALSE(s.backward_exists);
        }
    }
}

TEST_CASE("a quotient limit that is not a fuzzy profile is rejected") {
    // slope is tiny and negative: the per-step violation drops below the
    // validity tolerance as h shrinks, but the limit profile stays
    // reversed, so the verdict must remain negative
    FuzzyExpr e = parse1("tfn(0,1,2)*(3 - 0.001*x1)");
    auto r = h_derivative_numeric(fn(e), 1.0, kParams);
    REQUIRE_FALSE(r.differentiable);
    CHECK(r.reason.has_value());

    auto g = gh_derivative_numeric(fn(e), 1.0, kParams);
    REQUIRE(g.differentiable);
    CHECK(distance(*g.value, scalar_mul(-0.001, tri(0, 1, 2))) <= 1e-5);
}

TEST_CASE("higher-order derivatives") {
    SUBCASE("exponential: every order works") {
        FuzzyExpr e = parse1("tfn(1,2,3)*exp(x1)");
        for (int order = 1; order <= 4; ++order) {
            auto r = higher_h_derivative(e, std::vector<double>{0.5}, 1, order, kParams);
            REQUIRE(r.differentiable);
            CHECK(r.failing_order == 0);
            CHECK(distance(*r.value, scalar_mul(std::exp(0.5), tri(1, 2, 3))) <= 1e-9);
        }
    }
    SUBCASE("cubic: second order via the power rule") {
        FuzzyExpr e = parse1("tfn(-1,1,3)*x1^3");
        auto r = higher_h_derivative(e, std::vector<double>{0.7}, 1, 2, kParams);
        REQUIRE(r.differentiable);
        CHECK(distance(*r.value, scalar_mul(6 * 0.7, tri(-1, 1, 3))) <= 1e-9);
    }
    SUBCASE("sine: fails exactly at order two") {
        FuzzyExpr e = parse1("tfn(1,2,3)*sin(x1)");
        auto r = higher_h_derivative(e, std::vector<double>{0.8}, 1, 2, kParams);
        REQUIRE_FALSE(r.differentiable);
        CHECK(r.failing_order == 2);
        CHECK(r.order == 2);
        auto first = higher_h_derivative(e, std::vector<double>{0.8}, 1, 1, kParams);
        CHECK(first.differentiable);
    }
    SUBCASE("quadratic at the vertex: second order fails on the kink") {
        FuzzyExpr e = parse1("tfn(0,2,4)*x1^2");
        auto r = higher_h_derivative(e, std::vector<double>{0.0}, 1, 2, kParams);
        REQUIRE_FALSE(r.differentiable);
        CHECK(r.failing_order == 2);
    }
}

TEST_CASE("partial H-derivatives") {
    const std::vector<double> p11 = {1.0, 1.0};
    SUBCASE("identically-zero partial of a non-constant term blocks") {
        FuzzyExpr e = parse("tfn(-1,1,3)*x1^3 + tfn(1,2,3)*x2^3 + tfn(-1,1,3)*(x1*x2)", 2, kGrid);
        auto r = partial_h_derivative(e, p11, 2, kParams);
        REQUIRE_FALSE(r.differentiable);
        CHECK(*r.reason == FailReason::ZeroPartial);
    }
    SUBCASE("regrouped form has both partials") {
        FuzzyExpr e = parse("tfn(-1,1,3)*(x1^3 + 2*x2^3) + tfn(-1,1,3)*(x1*x2)", 2, kGrid);
        auto r1 = partial_h_derivative(e, p11, 1, kParams);
        auto r2 = partial_h_derivative(e, p11, 2, kParams);
        REQUIRE(r1.differentiable);
        REQUIRE(r2.differentiable);
        // d/dx1 = 3 x1^2 (*) c (+) x2 (*) c at (1,1)
        CHECK(distance(*r1.value, add(scalar_mul(3.0, tri(-1, 1, 3)), tri(-1, 1, 3))) <= 1e-12);
        // d/dx2 = 6 x2^2 (*) c (+) x1 (*) c at (1,1)
        CHECK(distance(*r2.value, add(scalar_mul(6.0, tri(-1, 1, 3)), tri(-1, 1, 3))) <= 1e-12);
    }
    SUBCASE("crisp reduction") {
        FuzzyExpr e = parse("crisp(1)*(x1 + 2*x2)", 2, kGrid);
        auto r = partial_h_derivative(e, p11, 1, kParams);
        REQUIRE(r.differentiable);
        CHECK(distance(*r.value, FuzzyNumber::crisp(1, kGrid)) <= 1e-12);
    }
    SUBCASE("out-of-range coordinate") {
        FuzzyExpr e = parse("tfn(0,1,2)*x1", 2, kGrid);
        CHECK_THROWS_AS(partial_h_derivative(e, p11, 3, kParams), Error);
    }
}

TEST_CASE("second-order partial existence map") {
    const std::vector<double> p11 = {1.0, 1.0};
    SUBCASE("regrouped two-term form: mixed pairs missing") {
        FuzzyExpr e = parse("tfn(-1,1,3)*(x1^3 + 2*x2^3) + tfn(-1,1,3)*(x1*x2)", 2, kGrid);
        auto m = second_partial_existence(e, p11);
        CHECK_FALSE(m[{1, 2}].exists);
        CHECK_FALSE(m[{2, 1}].exists);
        // the bilinear term also zeroes the diagonal pairs
        CHECK_FALSE(m[{1, 1}].exists);
        CHECK_FALSE(m[{2, 2}].exists);
    }
    SUBCASE("single-term cubic form: all pairs exist") {
        FuzzyExpr e = parse("tfn(0,1,2)*(x1^3 + 2*x2^3 + x1*x2)", 2, kGrid);
        auto m = second_partial_existence(e, p11);
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) {
                CAPTURE(i);
                CAPTURE(j);
                CHECK(m[{i, j}].exists);
            }
        // d2/dx1dx1 = 6 x1 (*) c
        CHECK(distance(*m[{1, 1}].value, scalar_mul(6.0, tri(0, 1, 2))) <= 1e-12);
        CHECK(distance(*m[{1, 2}].value, tri(0, 1, 2)) <= 1e-12);
    }
    SUBCASE("constant function: every pair exists with the crisp zero") {
        FuzzyExpr e = parse("crisp(5)", 2, kGrid);
        auto m = second_partial_existence(e, p11);
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) {
                CHECK(m[{i, j}].exists);
                CHECK(distance(*m[{i, j}].value, FuzzyNumber::crisp(0, kGrid)) == 0.0);
            }
    }
}

TEST_CASE("multivariable differentiability with the stencil surrogate") {
    const std::vector<double> p11 = {1.0, 1.0};
    SUBCASE("regrouped form passes including continuity") {
        FuzzyExpr e = parse("tfn(-1,1,3)*(x1^3 + 2*x2^3) + tfn(-1,1,3)*(x1*x2)", 2, kGrid);
        auto m = multivariable_h_derivative(e, p11, kParams);
        CHECK(m.differentiable);
        CHECK(m.continuity_ok);
        CHECK(m.partials.size() == 2);
    }
    SUBCASE("original grouping fails") {
        FuzzyExpr e = parse("tfn(-1,1,3)*x1^3 + tfn(1,2,3)*x2^3 + tfn(-1,1,3)*(x1*x2)", 2, kGrid);
        auto m = multivariable_h_derivative(e, p11, kParams);
        CHECK_FALSE(m.differentiable);
    }
    SUBCASE("domain clamping keeps the stencil one-sided at the edge") {
        FuzzyExpr e = parse("tfn(0,1,2)*(x1 + 2*x2)", 2, kGrid);
        std::vector<Interval> box = {{0.0, 2.0}, {0.0, 2.0}};
        std::vector<double> edge = {0.0, 1.0};
        auto m = multivariable_h_derivative(e, edge, kParams, &box);
        CHECK(m.differentiable);
    }
}

TEST_CASE("level derivative check validates produced values") {
    SUBCASE("linear at a positive point") {
        FuzzyExpr e = parse1("tfn(0,2,4)*x1");
        auto r = h_derivative_symbolic(e, 1.0, kParams);
        REQUIRE(r.differentiable);
        CHECK(level_derivative_check(e, std::vector<double>{1.0}, 1, r));
    }
    SUBCASE("constant") {
        FuzzyExpr e = parse1("tfn(1,2,4)");
        auto r = h_derivative_symbolic(e, 0.0, kParams);
        REQUIRE(r.differentiable);
        CHECK(level_derivative_check(e, std::vector<double>{0.0}, 1, r));
    }
    SUBCASE("square at the midpoint") {
        FuzzyExpr e = parse1("tfn(0,2,4)*x1^2");
        auto r = h_derivative_symbolic(e, 0.5, kParams);
        REQUIRE(r.differentiable);
        CHECK(level_derivative_check(e, std::vector<double>{0.5}, 1, r));
    }
    SUBCASE("gh value at a negative point") {
        FuzzyExpr e = parse1("tfn(0,2,4)*x1^2");
        auto r = gh_derivative_numeric(fn(e), -0.5, kParams);
        REQUIRE(r.differentiable);
        CHECK(level_derivative_check(e, std::vector<double>{-0.5}, 1, r));
    }
    SUBCASE("a wrong value fails the check") {
        FuzzyExpr e = parse1("tfn(0,2,4)*x1");
        auto r = h_derivative_symbolic(e, 1.0, kParams);
        REQUIRE(r.differentiable);
        r.value = tri(5, 6, 7);
        CHECK_FALSE(level_derivative_check(e, std::vector<double>{1.0}, 1, r));
    }
}

TEST_CASE("containment: H-differentiable implies gH-differentiable") {
    for (const std::string& text :
         {std::string("tfn(0,2,4)*x1"), std::string("tfn(0,2,4)*x1^2"),
          std::string("tfn(1,2,3)*sin(x1)"), std::string("tfn(1,2,3)*exp(x1)")}) {
        FuzzyExpr e = parse1(text);
        for (double x0 : {0.3, 0.8, 1.4}) {
            auto h = h_derivative_numeric(fn(e), x0, kParams);
            if (!h.differentiable)
                continue;
            auto g = gh_derivative_numeric(fn(e), x0, kParams);
            CAPTURE(text);
            CAPTURE(x0);
            REQUIRE(g.differentiable);
            CHECK(distance(*h.value, *g.value) <= kParams.tol);
        }
    }
}

TEST_CASE("invalid limit parameters are rejected") {
    FuzzyExpr e = parse1("tfn(0,1,2)*x1");
    LimitParams bad;
    bad.shrink = 1.5;
    CHECK_THROWS_AS(h_derivative_numeric(fn(e), 1.0, bad), Error);
    bad = LimitParams{};
    bad.h0 = -1;
    CHECK_THROWS_AS(h_derivative_numeric(fn(e), 1.0, bad), Error);
}
