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

#include "fuzzcalc/alpha_grid.hpp"

#include <algorithm>
#include <cstddef>

#include "fuzzcalc/error.hpp"

namespace fuzzcalc {

AlphaGrid AlphaGrid::uniform(int size) {
    if (size < 2)
        throw Error(ErrorCode::InvalidArgument, "alpha grid needs at least the 0 and 1 levels");
    std::vector<double> levels(static_cast<std::size_t>(size));
    const double m = static_cast<double>(size - 1);
    for (int k = 0; k < size; ++k)
        levels[static_cast<std::size_t>(k)] = static_cast<double>(k) / m;
    levels.back() = 1.0;
    return AlphaGrid(std::move(levels));
}

AlphaGrid::AlphaGrid(std::vector<double> levels) : levels_(std::move(levels)) {
    if (levels_.size() < 2 || levels_.front() != 0.0 || levels_.back() != 1.0)
        throw Error(ErrorCode::InvalidArgument, "alpha grid must run from 0 to 1");
    for (std::size_t i = 1; i < levels_.size(); ++i)
        if (!(levels_[i - 1] < levels_[i]))
            throw Error(ErrorCode::InvalidArgument, "alpha grid levels must be strictly increasing");
}

int AlphaGrid::exact_index(double alpha) const {
    auto it = std::lower_bound(levels_.begin(), levels_.end(), alpha);
    if (it != levels_.end() && *it == alpha)
        return static_cast<int>(it - levels_.begin());
    return -1;
}

std::size_t AlphaGrid::bracket_below(double alpha) const {
    auto it = std::upper_bound(levels_.begin(), levels_.end(), alpha);
    std::size_t idx = static_cast<std::size_t>(it - levels_.begin());
    return idx == 0 ? 0 : idx - 1;
}

AlphaGrid AlphaGrid::merged(const AlphaGrid& a, const AlphaGrid& b) {
    if (a == b)
        return a;
    std::vector<double> out;
    out.reserve(a.size() + b.size());
    std::merge(a.levels_.begin(), a.levels_.end(), b.levels_.begin(), b.levels_.end(),
               std::back_inserter(out));
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return AlphaGrid(std::move(out));
}

} // namespace fuzzcalc
