/*
 * Copyright 2026 The iocg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace iocg::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,        // success / positive decision
  kNegative = 1,  // check: negative decision
  kInvalid = 2,   // invalid or non-integral input, bad flags, unwritable output
  kInternal = 3,  // cross-check mismatch (a bug, not bad data)
};

enum class OutputFormat { json, table };

struct CliConfig {
  OutputFormat output_format = OutputFormat::table;
  double tolerance = 1e-9;
  long long enumeration_cap = 1024;
};

/// Runs the `iocg` command line. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace iocg::cli
