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

#ifndef AMALGAM_TOOLS_CLI_CLI_H_
#define AMALGAM_TOOLS_CLI_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace amalgam::cli {

// Runs one `amalgam` invocation. `args` excludes the program name.
// Returns 0 when the computation succeeded and every reported property
// holds, 1 when a reported property fails, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace amalgam::cli

#endif  // AMALGAM_TOOLS_CLI_CLI_H_
