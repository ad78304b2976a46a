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

#ifndef AMALGAM_ERROR_H_
#define AMALGAM_ERROR_H_

#include <stdexcept>
#include <string>

namespace amalgam {

enum class ErrorCode {
  kParse,
  kOutOfRange,
  kInvalidArgument,
  kNotIsomorphism,
  kNotSelfSufficient,
  kNotInClass,
  kNotIndependent,
  kCapExceeded,
  kUndeclared,
  kIo,
};

const char* error_code_name(ErrorCode code);

// All library failures surface as this exception. `line` is set for
// parse errors (1-based) and is 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int line = 0);

  ErrorCode code() const { return code_; }
  int line() const { return line_; }

 private:
  ErrorCode code_;
  int line_;
};

}  // namespace amalgam

#endif  // AMALGAM_ERROR_H_
