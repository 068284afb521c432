// Copyright 2026 The gsc Authors
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

#include <ostream>
#include <string>
#include <vector>

namespace gsc::cli {

/// Runs the command line (args excludes the program name) and returns the
/// process exit code: 0 on success, 1 on a failed check or bad input, 2 on a
/// usage error.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Bits as hex digits, coordinate 0 the top bit of the first digit, padded
/// with zero bits at the end.
std::string to_hex(const std::string &bits);

}  // namespace gsc::cli
