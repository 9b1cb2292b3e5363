// Copyright 2026 The skewcomm Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skewcomm {

enum class ErrorKind {
    DimensionMismatch,
    ConvergenceFailure,
    NotHermitian,
    NotNormal,
    InvalidParameter,
    SpectrumHit,
    EndpointOnSpectrum,
    ConditionFailed,
    VerificationFailed,
    MalformedInput,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::ConvergenceFailure:
            return "ConvergenceFailure";
        case ErrorKind::NotHermitian:
            return "NotHermitian";
        case ErrorKind::NotNormal:
            return "NotNormal";
        case ErrorKind::InvalidParameter:
            return "InvalidParameter";
        case ErrorKind::SpectrumHit:
            return "SpectrumHit";
        case ErrorKind::EndpointOnSpectrum:
            return "EndpointOnSpectrum";
        case ErrorKind::ConditionFailed:
            return "ConditionFailed";
        case ErrorKind::VerificationFailed:
            return "VerificationFailed";
        case ErrorKind::MalformedInput:
            return "MalformedInput";
    }
    return "Unknown";
}

}  // namespace skewcomm
