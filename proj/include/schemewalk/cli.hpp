// Copyright 2026 The schemewalk Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schemewalk::cli {

/// Runs one command line (without the program name). Output is written to
/// `out` only on success; failures print one `ErrorName: message` line to
/// `err`. Returns 0 on success, 2 on usage or schema errors, 1 otherwise.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Fixed-point with 12 decimals; negative zero prints as zero.
std::string format_number(double x);

/// Linearly spaced grid with `steps` points on [t0, t1].
std::vector<double> time_grid(double t0, double t1, int steps);

}  // namespace schemewalk::cli
