// Copyright 2026 The qesd Authors
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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qesd/sweep.hpp"

namespace qesd {

/// Shortest round-trip form limited to 12 significant digits ("%.12g"), '.' as
/// decimal separator regardless of locale.
std::string format_number(double v);

/// Accumulates comma-separated rows terminated by '\n'.
class CsvBuilder {
 public:
  explicit CsvBuilder(const std::vector<std::string_view>& header);

  CsvBuilder& row(const std::vector<double>& values);
  /// Numeric fields followed by one trailing text field.
  CsvBuilder& row(const std::vector<double>& values, std::string_view label);

  const std::string& str() const { return text_; }

 private:
  std::size_t columns_;
  std::string text_;
};

std::string to_csv(const SurfaceTable& table);
std::string to_csv(const RegionTable& table);

/// Replaces `destination` with `contents`. Throws IoError naming the path and cause.
void write_text_file(const std::filesystem::path& destination, std::string_view contents);

void write_csv(const SurfaceTable& table, const std::filesystem::path& destination);
void write_csv(const RegionTable& table, const std::filesystem::path& destination);

}  // namespace qesd
