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

#ifndef FUZZCALC_INTERVAL_HPP
#define FUZZCALC_INTERVAL_HPP

#include <algorithm>
#include <cmath>

namespace fuzzcalc {

/// Absolute tolerance for validity, monotonicity and reconstruction checks.
inline constexpr double kValidityEps = 1e-9;

/// Closed real interval [lower, upper].
///
/// Kept as a plain aggregate so that raw difference candidates (which may
/// have lower > upper) can be represented; callers that need a valid
/// interval check is_valid().
struct Interval {
    double lower = 0.0;
    double upper = 0.0;

    bool is_valid(double eps = kValidityEps) const { return lower <= upper + eps; }

    double width() const { return upper - lower; }
    double midpoint() const { return 0.5 * (lower + upper); }

    bool contains(double x) const { return lower <= x && x <= upper; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lower == b.lower && a.upper == b.upper;
    }
};

/// Hausdorff distance between two compact intervals:
/// max(|p.lower - q.lower|, |p.upper - q.upper|).
inline double hausdorff(const Interval& p, const Interval& q) {
    return std::max(std::abs(p.lower - q.lower), std::abs(p.upper - q.upper));
}

} // namespace fuzzcalc

#endif
