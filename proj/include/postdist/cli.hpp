// Copyright 2026 The postdist Authors
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


#ifndef POSTDIST_CLI_HPP
#define POSTDIST_CLI_HPP

#include <ostream>

namespace postdist {

/// Exit codes: 0 success, 1 failed verification, 2 parse or parameter error,
/// 3 validity failure, 4 dimension cap exceeded.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailedChecks = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitValidity = 3;
inline constexpr int kExitCapacity = 4;

/// Entry point of the `postdist` tool, with streams injected for testing.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace postdist

#endif  // POSTDIST_CLI_HPP
