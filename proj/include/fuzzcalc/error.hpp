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

#ifndef FUZZCALC_ERROR_HPP
#define FUZZCALC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fuzzcalc {

enum class ErrorCode {
    InvalidArgument,
    InvalidShape,     // parametric shape parameters out of order
    DomainError,      // argument outside its mathematical domain (e.g. alpha not in [0,1])
    ParseError,       // expression text rejected by the grammar
    ArityError,       // variable index exceeds the declared arity
    UnsupportedForm,  // expression not in the canonical sum-of-terms form
};

/// Exception carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace fuzzcalc

#endif
