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

#ifndef FUZZCALC_ANALYZER_HPP
#define FUZZCALC_ANALYZER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fuzzcalc/config.hpp"
#include "fuzzcalc/json_io.hpp"
#include "fuzzcalc/parser.hpp"

namespace fuzzcalc {

struct ScanRequest {
    std::string expr_text;
    std::vector<Interval> box; ///< one closed range per variable
    int samples_per_axis = 21;
    bool mode_h = true;
    bool mode_gh = true;
    bool mode_order2 = false;
    Config config;
};

struct PointRecord {
    std::size_t index = 0; ///< flattened grid index (row-major)
    std::vector<double> x;
    std::optional<DerivativeResult> h;  ///< overall H verdict at the point
    std::optional<DerivativeResult> gh; ///< overall gH verdict
    std::vector<DerivativeResult> h_partials;  ///< per coordinate, arity >= 2
    std::vector<DerivativeResult> gh_partials; ///< per coordinate, arity >= 2
    std::map<std::pair<int, int>, SecondPartial> order2;

    std::string h_class() const;
    std::string gh_class() const;
};

/// Maximal run of consecutive sample indices sharing a classification.
struct RegionSegment {
    std::size_t from_index = 0;
    std::size_t to_index = 0; ///< inclusive
    std::string h_class;
    std::string gh_class;
};

struct FixtureOutcome {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct DiffReport {
    ScanRequest request;
    std::vector<PointRecord> points;
    std::vector<RegionSegment> regions;
    std::vector<FixtureOutcome> fixtures;

    bool all_fixtures_pass() const;
    Json to_json() const;
};

/// Uniform sampling over the box; per point, symbolic-first existence
/// classification with the numeric engine as fallback. Box edges use
/// one-sided quotients. Deterministic: identical requests produce
/// byte-identical JSON.
DiffReport scan(const ScanRequest& req);

/// Built-in fixture suite: the library's reference behaviors, evaluated
/// under the given configuration and reported individually.
DiffReport run_fixtures(const Config& cfg);

/// Plot-ready level-curve data for a single-variable expression:
/// CSV columns x, alpha, lower, upper over the sampled range.
std::string level_curves_csv(const FuzzyExpr& e, const Interval& range, int samples);

/// Single-point alpha-profile CSV (columns alpha, lower, upper).
std::string profile_csv(const FuzzyNumber& f);

} // namespace fuzzcalc

#endif
