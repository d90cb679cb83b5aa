// Copyright 2026 The ontobench Authors
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

#ifndef ONTOBENCH_CLI_HPP
#define ONTOBENCH_CLI_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ontobench::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerdictFailed = 1,
    kUsageError = 2,
};

/// Runs one command line (without the program name). Normal output goes to
/// `out` unless --out names a file; diagnostics go to `err`.
int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Writes `content` to a temporary sibling of `path` and renames it into
/// place, so readers never observe a partially written file.
void write_atomically(const std::filesystem::path &path, std::string_view content);

}  // namespace ontobench::cli

#endif
