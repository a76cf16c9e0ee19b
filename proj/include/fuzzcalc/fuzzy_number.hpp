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

#ifndef FUZZCALC_FUZZY_NUMBER_HPP
#define FUZZCALC_FUZZY_NUMBER_HPP

#include <optional>
#include <string>
#include <vector>

#include "fuzzcalc/alpha_grid.hpp"
#include "fuzzcalc/interval.hpp"

namespace fuzzcalc {

enum class Shape { Triangular, Trapezoidal, Crisp, General };

/// Parametric tag attached to a profile when its endpoint maps match a
/// known closed form: triangular (a1, a, a2), trapezoidal (a1, a2, a3, a4)
/// or crisp (v). Purely descriptive; the cuts are always authoritative.
struct ShapeTag {
    Shape shape = Shape::General;
    std::vector<double> params;
};

/// A fuzzy number represented by its nested alpha-cuts on a grid.
///
/// Invariants (enforced at construction, checked within kValidityEps,
/// never repaired):
///   * every cut has lower <= upper,
///   * lower endpoints nondecreasing and upper endpoints nonincreasing
///     in alpha (nesting),
///   * the alpha = 1 cut is nonempty (normality).
class FuzzyNumber {
public:
    /// Triangular number (a1, a, a2); cut at level t is
    /// [(1-t) a1 + t a, (1-t) a2 + t a]. Requires a1 <= a <= a2.
    static FuzzyNumber triangular(double a1, double a, double a2,
                                  const AlphaGrid& grid = AlphaGrid::uniform());

    /// Trapezoidal number (a1, a2, a3, a4); cut at level t is
    /// [a1 + t (a2 - a1), a4 - t (a4 - a3)]. Requires a1 <= a2 <= a3 <= a4.
    static FuzzyNumber trapezoidal(double a1, double a2, double a3, double a4,
                                   const AlphaGrid& grid = AlphaGrid::uniform());

    /// Degenerate number chi_{v}: every cut equals [v, v].
    static FuzzyNumber crisp(double v, const AlphaGrid& grid = AlphaGrid::uniform());

    /// General profile from explicit cuts; throws InvalidShape if the
    /// profile violates the invariants beyond kValidityEps.
    static FuzzyNumber from_cuts(const AlphaGrid& grid, std::vector<Interval> cuts);

    const AlphaGrid& grid() const { return grid_; }
    const std::vector<Interval>& cuts() const { return cuts_; }
    const ShapeTag& shape() const { return tag_; }

    /// Cut at an arbitrary alpha in [0,1]; grid levels return the stored
    /// cut, off-grid levels interpolate the endpoint maps linearly.
    Interval alpha_cut(double alpha) const;

    /// Membership grade of r, in [0,1]. Uses the closed form for
    /// parametric shapes and the interpolated profile otherwise.
    double membership(double r) const;

    /// Same grid and identical cut endpoints.
    bool identical(const FuzzyNumber& other) const;

    /// Resample the profile onto another grid (endpoint interpolation).
    FuzzyNumber resampled(const AlphaGrid& grid) const;

    /// True if every cut is [v, v] within eps.
    bool is_crisp(double eps = kValidityEps) const;

    /// Re-derive the parametric tag from the cuts (used for results of
    /// difference operators, whose closed form is not known a priori).
    static ShapeTag classify(const AlphaGrid& grid, const std::vector<Interval>& cuts);

    /// Compact human-readable form: "tfn(0, 1, 2)", "crisp(6)" or
    /// "general[m levels]".
    std::string to_string() const;

private:
    FuzzyNumber(AlphaGrid grid, std::vector<Interval> cuts, ShapeTag tag);

    AlphaGrid grid_;
    std::vector<Interval> cuts_;
    ShapeTag tag_;

    friend FuzzyNumber add(const FuzzyNumber&, const FuzzyNumber&);
    friend FuzzyNumber scalar_mul(double, const FuzzyNumber&);
};

/// Validity of a raw profile: per-level ordering plus nesting, within eps.
/// Returns true when the profile satisfies all FuzzyNumber invariants.
bool profile_valid(const std::vector<Interval>& cuts, double eps = kValidityEps);

/// Formats a double with the shortest round-trip representation.
std::string format_double(double v);

} // namespace fuzzcalc

#endif
