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

#ifndef FUZZCALC_DIFFERENCE_HPP
#define FUZZCALC_DIFFERENCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "fuzzcalc/fuzzy_number.hpp"

namespace fuzzcalc {

enum class DiffOp { HDiff, GHDiff };

/// Conditions that a difference candidate can violate. The first three
/// are the fuzzy-number profile invariants (used by the H-difference);
/// CaseI / CaseII tag the failure of the two gH existence cases;
/// Reconstruction covers the final add-back check of the H-difference.
enum class Condition {
    LowerMonotone,
    UpperMonotone,
    LowerLeUpper,
    CaseI,
    CaseII,
    Reconstruction,
};

struct Violation {
    double alpha = 0.0;
    Condition condition = Condition::LowerLeUpper;
    double magnitude = 0.0;
};

/// Outcome of an H- or gH-difference: either an existing witness, or the
/// violated conditions. Nonexistence is a verdict, not an error, and no
/// candidate is ever clamped or re-sorted. Raw candidate profiles are
/// retained as evidence.
struct ExistenceCertificate {
    DiffOp op = DiffOp::HDiff;
    bool exists = false;
    std::optional<FuzzyNumber> witness;

    /// For GHDiff: 1 or 2 when the corresponding case witnessed existence.
    int gh_case = 0;

    /// Empty iff exists. H-difference records the first violated
    /// condition; gH records one entry per failed case.
    std::vector<Violation> violations;

    /// Endpoint-wise candidate [aL-bL, aU-bU] per level (H-difference
    /// candidate; also the case-(i) gH candidate). May be invalid.
    std::vector<Interval> candidate;

    /// Case-(ii) gH candidate [aU-bU, aL-bL] per level. Empty for HDiff.
    std::vector<Interval> candidate_alt;

    /// Grid the candidates are sampled on (merged operand grid).
    AlphaGrid grid = AlphaGrid::uniform(2);
};

/// Hukuhara difference: the c with c (+) b = a, when it exists.
/// The candidate is the endpoint-wise difference; the verdict is
/// "exists" iff the candidate is a valid profile and adding b back
/// reconstructs a within kValidityEps at every level.
ExistenceCertificate h_diff(const FuzzyNumber& a, const FuzzyNumber& b);

/// Generalized Hukuhara difference. Exists iff the case-(i) or the
/// case-(ii) candidate is a valid profile at every level (weak
/// monotonicity of both endpoint maps plus ordering, within
/// kValidityEps). When the H-difference exists the same witness is
/// returned (case i).
ExistenceCertificate gh_diff(const FuzzyNumber& a, const FuzzyNumber& b);

const char* to_string(Condition c);

} // namespace fuzzcalc

#endif
