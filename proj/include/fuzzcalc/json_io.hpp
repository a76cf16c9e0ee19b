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

#ifndef FUZZCALC_JSON_IO_HPP
#define FUZZCALC_JSON_IO_HPP

#include <json.hpp>

#include "fuzzcalc/config.hpp"
#include "fuzzcalc/derivative.hpp"
#include "fuzzcalc/difference.hpp"
#include "fuzzcalc/fuzzy_number.hpp"

namespace fuzzcalc {

using Json = nlohmann::ordered_json;

/// {"shape": ..., "params": [...], "grid": [...], "cuts": [[L,U], ...]}
/// Cuts are always emitted; params only for parametric shapes.
Json to_json(const FuzzyNumber& f);
FuzzyNumber fuzzy_number_from_json(const Json& j);

Json to_json(const ExistenceCertificate& c);
Json to_json(const DerivativeResult& r);
Json to_json(const SecondPartial& s);
Json to_json(const Config& c);

} // namespace fuzzcalc

#endif
