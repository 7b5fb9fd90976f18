// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ef1/error.hpp"

namespace ef1 {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadShape: return "BadShape";
    case ErrorCode::kNegativeValue: return "NegativeValue";
    case ErrorCode::kWorthlessItem: return "WorthlessItem";
    case ErrorCode::kNotTernary: return "NotTernary";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kNotTwoAgents: return "NotTwoAgents";
    case ErrorCode::kNotThreeAgents: return "NotThreeAgents";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kTooManyAgents: return "TooManyAgents";
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kNotPerfectSquare: return "NotPerfectSquare";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kTraceMismatch: return "TraceMismatch";
    case ErrorCode::kOverflow: return "Overflow";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail),
      code_(code) {}

}  // namespace ef1
