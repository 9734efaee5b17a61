// Copyright 2021 Google LLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CLIFFSYN_ERROR_HPP
#define CLIFFSYN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cliffsyn {

enum class ErrorCode {
    SingularMatrix,
    NotSymmetric,
    Unsolvable,
    BadPauliChar,
    LengthMismatch,
    SizeMismatch,
    BadDims,
    BadQubit,
    BadColumn,
    RangeViolation,
    DiagonalMismatch,
    BadLength,
    NotFullOperator,
    NotReduced,
    BadStructure,
    NonCommuting,
    DependentColumns,
    TooManyPaulis,
    SingularXk,
    BadGate,
    TooLarge,
    DimMismatch,
    ParseError,
    VerificationFailed,
    BadConfig,
};

const char *error_code_name(ErrorCode code);

class CliffError : public std::runtime_error {
   public:
    CliffError(ErrorCode code, const std::string &what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

   private:
    ErrorCode code_;
};

}  // namespace cliffsyn

#endif
