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

#ifndef FUZZCALC_ARITHMETIC_HPP
#define FUZZCALC_ARITHMETIC_HPP

#include "fuzzcalc/fuzzy_number.hpp"

namespace fuzzcalc {

/// Level-wise sum: [aL + bL, aU + bU] per level. Operands on different
/// grids are resampled to the merged grid first.
FuzzyNumber add(const FuzzyNumber& a, const FuzzyNumber& b);

/// Level-wise scaling: [l*aL, l*aU] for l >= 0, endpoints swapped for
/// l < 0. l = 0 yields the crisp zero.
FuzzyNumber scalar_mul(double l, const FuzzyNumber& a);

/// Interval-arithmetic difference: [aL - bU, aU - bL] per level.
/// Always exists; note a (-) a is not the crisp zero.
FuzzyNumber standard_diff(const FuzzyNumber& a, const FuzzyNumber& b);

} // namespace fuzzcalc

#endif
