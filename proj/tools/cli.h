// Copyright 2026 The Unicon Authors
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

#ifndef UNICON_TOOLS_CLI_H_
#define UNICON_TOOLS_CLI_H_

#include <iosfwd>

namespace unicon::cli {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInputData = 3;

// Entry point of the `unicon` tool: gen, volume, bounds, verify.
int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace unicon::cli

#endif  // UNICON_TOOLS_CLI_H_
