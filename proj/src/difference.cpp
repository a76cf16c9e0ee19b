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

#include "fuzzcalc/difference.hpp"

#include <cmath>
#include <utility>

#include "fuzzcalc/arithmetic.hpp"
#include "fuzzcalc/metric.hpp"

namespace fuzzcalc {

namespace {

// First violated condition of a raw profile, scanning levels from
// alpha = 0 upward: per-level ordering first, then nesting against the
// previous level. Returns true if a violation was found.
bool first_violation(const AlphaGrid& grid, const std::vector<Interval>& cuts, Violation& out) {
    for (std::size_t k = 0; k < cuts.size(); ++k) {
        if (cuts[k].lower > cuts[k].upper + kValidityEps) {
            out = {grid[k], Condition::LowerLeUpper, cuts[k].lower - cuts[k].upper};
            return true;
        }
        if (k > 0) {
            if (cuts[k].lower < cuts[k - 1].lower - kValidityEps) {
                out = {grid[k], Condition::LowerMonotone, cuts[k - 1].lower - cuts[k].lower};
                return true;
            }
            if (cuts[k].upper > cuts[k - 1].upper + kValidityEps) {
                out = {grid[k], Condition::UpperMonotone, cuts[k].upper - cuts[k - 1].upper};
                return true;
            }
        }
    }
    return false;
}

} // namespace

const char* to_string(Condition c) {
    switch (c) {
    case Condition::LowerMonotone: return "lower_monotone";
    case Condition::UpperMonotone: return "upper_monotone";
    case Condition::LowerLeUpper: return "lower_le_upper";
    case Condition::CaseI: return "case_i";
    case Condition::CaseII: return "case_ii";
    case Condition::Reconstruction: return "reconstruction";
    }
    return "?";
}

ExistenceCertificate h_diff(const FuzzyNumber& a, const FuzzyNumber& b) {
    AlphaGrid grid = AlphaGrid::merged(a.grid(), b.grid());
    FuzzyNumber x = a.resampled(grid);
    FuzzyNumber y = b.resampled(grid);

    ExistenceCertificate cert;
    cert.op = DiffOp::HDiff;
    cert.grid = grid;
    cert.candidate.resize(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k)
        cert.candidate[k] = {x.cuts()[k].lower - y.cuts()[k].lower,
                             x.cuts()[k].upper - y.cuts()[k].upper};

    Violation v;
    if (first_violation(grid, cert.candidate, v)) {
        cert.exists = false;
        cert.violations.push_back(v);
        return cert;
    }

    FuzzyNumber witness = FuzzyNumber::from_cuts(grid, cert.candidate);
    const double residual = distance(add(witness, y), x);
    if (residual > kValidityEps) {
        cert.exists = false;
        cert.violations.push_back({0.0, Condition::Reconstruction, residual});
        return cert;
    }
    cert.exists = true;
    cert.witness = std::move(witness);
    return cert;
}

ExistenceCertificate gh_diff(const FuzzyNumber& a, const FuzzyNumber& b) {
    AlphaGrid grid = AlphaGrid::merged(a.grid(), b.grid());
    FuzzyNumber x = a.resampled(grid);
    FuzzyNumber y = b.resampled(grid);

    ExistenceCertificate cert;
    cert.op = DiffOp::GHDiff;
    cert.grid = grid;
    cert.candidate.resize(grid.size());
    cert.candidate_alt.resize(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double dl = x.cuts()[k].lower - y.cuts()[k].lower;
        const double du = x.cuts()[k].upper - y.cuts()[k].upper;
        cert.candidate[k] = {dl, du};     // case (i): c = [aL-bL, aU-bU]
        cert.candidate_alt[k] = {du, dl}; // case (ii): c = [aU-bU, aL-bL]
    }

    Violation vi, vii;
    const bool case_i_fails = first_violation(grid, cert.candidate, vi);
    if (!case_i_fails) {
        cert.exists = true;
        cert.gh_case = 1;
        cert.witness = FuzzyNumber::from_cuts(grid, cert.candidate);
        return cert;
    }
    const bool case_ii_fails = first_violation(grid, cert.candidate_alt, vii);
    if (!case_ii_fails) {
        cert.exists = true;
        cert.gh_case = 2;
        cert.witness = FuzzyNumber::from_cuts(grid, cert.candidate_alt);
        return cert;
    }

    cert.exists = false;
    cert.violations.push_back({vi.alpha, Condition::CaseI, vi.magnitude});
    cert.violations.push_back({vii.alpha, Condition::CaseII, vii.magnitude});
    return cert;
}

} // namespace fuzzcalc
