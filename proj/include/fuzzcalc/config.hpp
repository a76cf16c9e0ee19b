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

#ifndef FUZZCALC_CONFIG_HPP
#define FUZZCALC_CONFIG_HPP

#include "fuzzcalc/alpha_grid.hpp"
#include "fuzzcalc/derivative.hpp"

namespace fuzzcalc {

/// All numeric defaults in one place; echoed into every report so runs
/// are reproducible from their output alone.
struct Config {
    int grid_size = kDefaultGridSize;
    LimitParams limit;

    AlphaGrid grid() const { return AlphaGrid::uniform(grid_size); }
};

} // namespace fuzzcalc

#endif
