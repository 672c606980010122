// Copyright 2026 The mtsum Authors.
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

#ifndef MTSUM_TOOLS_CLI_H_
#define MTSUM_TOOLS_CLI_H_

#include <ostream>

namespace mtsum {

// Entry point for the `mtsum` tool: summarize, topics, evaluate. Returns
// the process exit status; diagnostics go to `err` as one line.
int RunCli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace mtsum

#endif  // MTSUM_TOOLS_CLI_H_
