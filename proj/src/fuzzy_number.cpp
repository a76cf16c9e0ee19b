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

#include "fuzzcalc/fuzzy_number.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "fuzzcalc/error.hpp"

namespace fuzzcalc {

namespace {

// Tolerance for re-deriving a parametric tag from computed cuts; looser
// than kValidityEps would be wrong here because tagging is cosmetic and
// must never misclassify, so keep it tight.
constexpr double kClassifyEps = 1e-9;

bool near(double x, double y, double eps) { return std::abs(x - y) <= eps; }

} // namespace

std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

bool profile_valid(const std::vector<Interval>& cuts, double eps) {
    if (cuts.empty())
        return false;
    for (std::size_t k = 0; k < cuts.size(); ++k) {
        if (!cuts[k].is_valid(eps))
            return false;
        if (k > 0) {
            if (cuts[k].lower < cuts[k - 1].lower - eps)
                return false;
            if (cuts[k].upper > cuts[k - 1].upper + eps)
                return false;
        }
    }
    return true;
}

FuzzyNumber::FuzzyNumber(AlphaGrid grid, std::vector<Interval> cuts, ShapeTag tag)
    : grid_(std::move(grid)), cuts_(std::move(cuts)), tag_(std::move(tag)) {}

FuzzyNumber FuzzyNumber::triangular(double a1, double a, double a2, const AlphaGrid& grid) {
    if (!(a1 <= a && a <= a2))
        throw Error(ErrorCode::InvalidShape, "triangular parameters must satisfy a1 <= a <= a2");
    std::vector<Interval> cuts(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double t = grid[k];
        cuts[k] = {(1.0 - t) * a1 + t * a, (1.0 - t) * a2 + t * a};
    }
    ShapeTag tag{Shape::Triangular, {a1, a, a2}};
    if (a1 == a && a == a2)
        tag = {Shape::Crisp, {a}};
    return FuzzyNumber(grid, std::move(cuts), std::move(tag));
}

FuzzyNumber FuzzyNumber::trapezoidal(double a1, double a2, double a3, double a4,
                                     const AlphaGrid& grid) {
    if (!(a1 <= a2 && a2 <= a3 && a3 <= a4))
        throw Error(ErrorCode::InvalidShape,
                    "trapezoidal parameters must satisfy a1 <= a2 <= a3 <= a4");
    std::vector<Interval> cuts(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double t = grid[k];
        cuts[k] = {a1 + t * (a2 - a1), a4 - t * (a4 - a3)};
    }
    ShapeTag tag{Shape::Trapezoidal, {a1, a2, a3, a4}};
    if (a1 == a2 && a2 == a3 && a3 == a4)
        tag = {Shape::Crisp, {a1}};
    return FuzzyNumber(grid, std::move(cuts), std::move(tag));
}

FuzzyNumber FuzzyNumber::crisp(double v, const AlphaGrid& grid) {
    std::vector<Interval> cuts(grid.size(), Interval{v, v});
    return FuzzyNumber(grid, std::move(cuts), ShapeTag{Shape::Crisp, {v}});
}

FuzzyNumber FuzzyNumber::from_cuts(const AlphaGrid& grid, std::vector<Interval> cuts) {
    if (cuts.size() != grid.size())
        throw Error(ErrorCode::InvalidArgument, "cut count must match grid size");
    if (!profile_valid(cuts))
        throw Error(ErrorCode::InvalidShape, "profile violates fuzzy-number invariants");
    ShapeTag tag = classify(grid, cuts);
    return FuzzyNumber(grid, std::move(cuts), std::move(tag));
}

ShapeTag FuzzyNumber::classify(const AlphaGrid& grid, const std::vector<Interval>& cuts) {
    const Interval& base = cuts.front();
    const Interval& core = cuts.back();
    const double scale = 1.0 + std::max(std::abs(base.lower), std::abs(base.upper));
    const double eps = kClassifyEps * scale;

    bool crisp = true;
    for (const Interval& c : cuts)
        if (!near(c.lower, core.lower, eps) || !near(c.upper, core.lower, eps)) {
            crisp = false;
            break;
        }
    if (crisp)
        return {Shape::Crisp, {core.lower}};

    // Trapezoid (a1,a2,a3,a4) from the support and core; triangular when
    // the core degenerates.
    const double a1 = base.lower, a2 = core.lower, a3 = core.upper, a4 = base.upper;
    bool affine = true;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double t = grid[k];
        if (!near(cuts[k].lower, a1 + t * (a2 - a1), eps) ||
            !near(cuts[k].upper, a4 - t * (a4 - a3), eps)) {
            affine = false;
            break;
        }
    }
    if (!affine)
        return {Shape::General, {}};
    if (near(a2, a3, eps))
        return {Shape::Triangular, {a1, a2, a4}};
    return {Shape::Trapezoidal, {a1, a2, a3, a4}};
}

Interval FuzzyNumber::alpha_cut(double alpha) const {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw Error(ErrorCode::DomainError, "alpha must lie in [0,1]");
    int exact = grid_.exact_index(alpha);
    if (exact >= 0)
        return cuts_[static_cast<std::size_t>(exact)];
    std::size_t lo = grid_.bracket_below(alpha);
    std::size_t hi = lo + 1;
    const double t = (alpha - grid_[lo]) / (grid_[hi] - grid_[lo]);
    return {cuts_[lo].lower + t * (cuts_[hi].lower - cuts_[lo].lower),
            cuts_[lo].upper + t * (cuts_[hi].upper - cuts_[lo].upper)};
}

double FuzzyNumber::membership(double r) const {
    switch (tag_.shape) {
    case Shape::Crisp:
        return r == tag_.params[0] ? 1.0 : 0.0;
    case Shape::Triangular: {
        const double a1 = tag_.params[0], a = tag_.params[1], a2 = tag_.params[2];
        if (r < a1 || r > a2)
            return 0.0;
        if (r == a)
            return 1.0;
        if (r < a)
            return (r - a1) / (a - a1);
        return (a2 - r) / (a2 - a);
    }
    case Shape::Trapezoidal: {
        const double a1 = tag_.params[0], a2 = tag_.params[1];
        const double a3 = tag_.params[2], a4 = tag_.params[3];
        if (r < a1 || r > a4)
            return 0.0;
        if (r >= a2 && r <= a3)
            return 1.0;
        if (r < a2)
            return (r - a1) / (a2 - a1);
        return (a4 - r) / (a4 - a3);
    }
    case Shape::General:
        break;
    }

    // sup{alpha : r in cut(alpha)} on the piecewise-linear profile. The
    // lower map is nondecreasing and the upper nonincreasing, so the
    // containment set is [0, a*]; walk the grid for the crossing.
    if (!cuts_.front().contains(r))
        return 0.0;
    if (cuts_.back().contains(r))
        return 1.0;
    double best = 0.0;
    for (std::size_t k = 1; k < cuts_.size(); ++k) {
        if (cuts_[k].contains(r)) {
            best = grid_[k];
            continue;
        }
        // crossing between levels k-1 and k on whichever side lost r
        const double t0 = grid_[k - 1], t1 = grid_[k];
        double alpha = t0;
        if (cuts_[k].lower > r) {
            const double l0 = cuts_[k - 1].lower, l1 = cuts_[k].lower;
            alpha = t0 + (r - l0) / (l1 - l0) * (t1 - t0);
        }
        if (cuts_[k].upper < r) {
            const double u0 = cuts_[k - 1].upper, u1 = cuts_[k].upper;
            double cross = t0 + (r - u0) / (u1 - u0) * (t1 - t0);
            alpha = cuts_[k].lower > r ? std::min(alpha, cross) : cross;
        }
        return std::max(best, alpha);
    }
    return best;
}

bool FuzzyNumber::identical(const FuzzyNumber& other) const {
    return grid_ == other.grid_ && cuts_ == other.cuts_;
}

FuzzyNumber FuzzyNumber::resampled(const AlphaGrid& grid) const {
    if (grid == grid_)
        return *this;
    std::vector<Interval> cuts(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k)
        cuts[k] = alpha_cut(grid[k]);
    return FuzzyNumber(grid, std::move(cuts), tag_);
}

bool FuzzyNumber::is_crisp(double eps) const {
    const double v = cuts_.back().lower;
    for (const Interval& c : cuts_)
        if (!near(c.lower, v, eps) || !near(c.upper, v, eps))
            return false;
    return true;
}

std::string FuzzyNumber::to_string() const {
    std::ostringstream os;
    switch (tag_.shape) {
    case Shape::Crisp:
        os << "crisp(" << format_double(tag_.params[0]) << ")";
        break;
    case Shape::Triangular:
        os << "tfn(" << format_double(tag_.params[0]) << ", " << format_double(tag_.params[1])
           << ", " << format_double(tag_.params[2]) << ")";
        break;
    case Shape::Trapezoidal:
        os << "tpfn(" << format_double(tag_.params[0]) << ", " << format_double(tag_.params[1])
           << ", " << format_double(tag_.params[2]) << ", " << format_double(tag_.params[3])
           << ")";
        break;
    case Shape::General:
        os << "general[" << cuts_.size() << " levels, support [" << format_double(cuts_[0].lower)
           << ", " << format_double(cuts_[0].upper) << "], core ["
           << format_double(cuts_.back().lower) << ", " << format_double(cuts_.back().upper)
           << "]]";
        break;
    }
    return os.str();
}

} // namespace fuzzcalc
