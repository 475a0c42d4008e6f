/* Copyright 2026 The mcmfcc Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef MCMFCC_CLI_H_
#define MCMFCC_CLI_H_

#include <filesystem>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace mcmfcc {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

struct ManifestEntry {
  std::string word_id;
  std::filesystem::path path;
};

// `word_id<TAB>path` per line. Blank lines and lines starting with '#' are
// skipped; relative paths resolve against the manifest's directory.
// Duplicate word ids are a ParseError.
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path);

// Entry point shared by the mcmfcc binary and the tests. `args` excludes the
// program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace mcmfcc

#endif  // MCMFCC_CLI_H_
