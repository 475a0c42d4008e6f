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

#ifndef MCMFCC_TEXT_IO_H_
#define MCMFCC_TEXT_IO_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace mcmfcc {

// Shortest decimal that parses back to the same double.
std::string format_double(double v);

// Parses the whole of `text` as a double; nullopt on any leftover input.
std::optional<double> parse_double(std::string_view text);

// Writes through a sibling temporary and renames it into place.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view contents);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace mcmfcc

#endif  // MCMFCC_TEXT_IO_H_
