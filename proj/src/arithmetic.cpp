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

#include "fuzzcalc/arithmetic.hpp"

#include <algorithm>
#include <utility>

namespace fuzzcalc {

namespace {

// Parametric tags are propagated exactly where the algebra allows it:
// the endpoint maps of triangular/trapezoidal numbers are affine in
// alpha, and level-wise sums/scalings of affine maps stay affine.
std::vector<double> trapezoid_params(const ShapeTag& t) {
    switch (t.shape) {
    case Shape::Crisp:
        return {t.params[0], t.params[0], t.params[0], t.params[0]};
    case Shape::Triangular:
        return {t.params[0], t.params[1], t.params[1], t.params[2]};
    case Shape::Trapezoidal:
        return t.params;
    case Shape::General:
        break;
    }
    return {};
}

ShapeTag tag_from_trapezoid(const std::vector<double>& p) {
    if (p[0] == p[1] && p[1] == p[2] && p[2] == p[3])
        return {Shape::Crisp, {p[0]}};
    if (p[1] == p[2])
        return {Shape::Triangular, {p[0], p[1], p[3]}};
    return {Shape::Trapezoidal, p};
}

std::pair<FuzzyNumber, FuzzyNumber> on_common_grid(const FuzzyNumber& a, const FuzzyNumber& b) {
    if (a.grid() == b.grid())
        return {a, b};
    AlphaGrid g = AlphaGrid::merged(a.grid(), b.grid());
    return {a.resampled(g), b.resampled(g)};
}

} // namespace

FuzzyNumber add(const FuzzyNumber& a, const FuzzyNumber& b) {
    auto [x, y] = on_common_grid(a, b);
    std::vector<Interval> cuts(x.cuts().size());
    for (std::size_t k = 0; k < cuts.size(); ++k)
        cuts[k] = {x.cuts()[k].lower + y.cuts()[k].lower, x.cuts()[k].upper + y.cuts()[k].upper};

    ShapeTag tag{Shape::General, {}};
    auto pa = trapezoid_params(x.shape());
    auto pb = trapezoid_params(y.shape());
    if (!pa.empty() && !pb.empty())
        tag = tag_from_trapezoid({pa[0] + pb[0], pa[1] + pb[1], pa[2] + pb[2], pa[3] + pb[3]});
    return FuzzyNumber(std::move(x.grid_), std::move(cuts), std::move(tag));
}

FuzzyNumber scalar_mul(double l, const FuzzyNumber& a) {
    if (l == 0.0)
        return FuzzyNumber::crisp(0.0, a.grid());

    std::vector<Interval> cuts(a.cuts().size());
    for (std::size_t k = 0; k < cuts.size(); ++k) {
        const Interval& c = a.cuts()[k];
        cuts[k] = l >= 0.0 ? Interval{l * c.lower, l * c.upper} : Interval{l * c.upper, l * c.lower};
    }

    ShapeTag tag{Shape::General, {}};
    auto p = trapezoid_params(a.shape());
    if (!p.empty()) {
        std::vector<double> q = {l * p[0], l * p[1], l * p[2], l * p[3]};
        if (l < 0.0)
            std::reverse(q.begin(), q.end());
        tag = tag_from_trapezoid(q);
    }
    return FuzzyNumber(a.grid(), std::move(cuts), std::move(tag));
}

FuzzyNumber standard_diff(const FuzzyNumber& a, const FuzzyNumber& b) {
    return add(a, scalar_mul(-1.0, b));
}

} // namespace fuzzcalc
