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

#ifndef FUZZCALC_ALPHA_GRID_HPP
#define FUZZCALC_ALPHA_GRID_HPP

#include <cstddef>
#include <vector>

namespace fuzzcalc {

/// Default number of alpha levels (uniform, inclusive of 0 and 1).
inline constexpr int kDefaultGridSize = 101;

/// Discretization of the membership axis: strictly increasing levels
/// 0 = a_0 < a_1 < ... < a_m = 1. Immutable after construction.
class AlphaGrid {
public:
    /// Uniform grid with `size` levels including both endpoints. size >= 2.
    static AlphaGrid uniform(int size = kDefaultGridSize);

    /// Grid from explicit levels; validates ordering and the 0/1 endpoints.
    explicit AlphaGrid(std::vector<double> levels);

    const std::vector<double>& levels() const { return levels_; }
    std::size_t size() const { return levels_.size(); }
    double operator[](std::size_t i) const { return levels_[i]; }

    /// Index of `alpha` if it is exactly a grid level, else -1.
    int exact_index(double alpha) const;

    /// Largest index k with levels[k] <= alpha (alpha in [0,1]).
    std::size_t bracket_below(double alpha) const;

    /// Sorted union of the levels of both grids (exact-duplicate merge).
    static AlphaGrid merged(const AlphaGrid& a, const AlphaGrid& b);

    friend bool operator==(const AlphaGrid& a, const AlphaGrid& b) {
        return a.levels_ == b.levels_;
    }

private:
    std::vector<double> levels_;
};

} // namespace fuzzcalc

#endif
