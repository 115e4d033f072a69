// Copyright 2026 The SPPT Toolkit Authors
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

#ifndef SPPT_CLI_HPP
#define SPPT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "sppt/matrix.hpp"

namespace sppt::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;  // conjecture violation or NotRepresentable
inline constexpr int kUsage = 2;      // usage, parameter or input error

/// Default tolerances, with residual_tol overridden by $SPPT_TOL when set.
Tolerance tolerance_from_env();

/// Runs `sppt <args...>`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sppt::cli

#endif  // SPPT_CLI_HPP
