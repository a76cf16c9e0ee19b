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

#ifndef FUZZCALC_METRIC_HPP
#define FUZZCALC_METRIC_HPP

#include <vector>

#include "fuzzcalc/fuzzy_number.hpp"

namespace fuzzcalc {

/// Supremum metric over alpha of the Hausdorff distance between cuts.
/// The endpoint maps are piecewise linear on the merged grid, so the
/// supremum is attained at a grid node and the computation is exact.
double distance(const FuzzyNumber& a, const FuzzyNumber& b);

/// Same metric on raw profiles sharing a grid (used for quotient
/// sequences whose intermediate values may not be valid fuzzy numbers).
double profile_distance(const std::vector<Interval>& a, const std::vector<Interval>& b);

} // namespace fuzzcalc

#endif
