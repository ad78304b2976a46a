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

#include "amalgam/budget.h"
#include "amalgam/error.h"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace amalgam {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kOutOfRange: return "out_of_range";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kNotIsomorphism: return "not_isomorphism";
    case ErrorCode::kNotSelfSufficient: return "not_self_sufficient";
    case ErrorCode::kNotInClass: return "not_in_class";
    case ErrorCode::kNotIndependent: return "not_independent";
    case ErrorCode::kCapExceeded: return "cap_exceeded";
    case ErrorCode::kUndeclared: return "undeclared";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                  : message),
      code_(code),
      line_(line) {}

Budget Budget::from_environment() {
  Budget budget;
  const char* raw = std::getenv("AMALGAM_BUDGET");
  if (raw == nullptr) return budget;
  std::int64_t value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end || value <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "AMALGAM_BUDGET must be a positive integer");
  }
  budget.enumeration = value;
  return budget;
}

}  // namespace amalgam
