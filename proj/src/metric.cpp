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

#include "fuzzcalc/metric.hpp"

#include <algorithm>

#include "fuzzcalc/error.hpp"

namespace fuzzcalc {

double profile_distance(const std::vector<Interval>& a, const std::vector<Interval>& b) {
    if (a.size() != b.size())
        throw Error(ErrorCode::InvalidArgument, "profiles must share a grid");
    double d = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k)
        d = std::max(d, hausdorff(a[k], b[k]));
    return d;
}

double distance(const FuzzyNumber& a, const FuzzyNumber& b) {
    if (a.grid() == b.grid())
        return profile_distance(a.cuts(), b.cuts());
    AlphaGrid g = AlphaGrid::merged(a.grid(), b.grid());
    return profile_distance(a.resampled(g).cuts(), b.resampled(g).cuts());
}

} // namespace fuzzcalc
