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

#include "qesd/csv.hpp"

#include <cerrno>
#include <charconv>
#include <cstring>
#include <fstream>

namespace qesd {

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

CsvBuilder::CsvBuilder(const std::vector<std::string_view>& header) : columns_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i > 0) text_ += ',';
    text_ += header[i];
  }
  text_ += '\n';
}

CsvBuilder& CsvBuilder::row(const std::vector<double>& values) {
  if (values.size() != columns_) throw PreconditionError("CsvBuilder: column count mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) text_ += ',';
    text_ += format_number(values[i]);
  }
  text_ += '\n';
  return *this;
}

CsvBuilder& CsvBuilder::row(const std::vector<double>& values, std::string_view label) {
  if (values.size() + 1 != columns_) throw PreconditionError("CsvBuilder: column count mismatch");
  for (double v : values) {
    text_ += format_number(v);
    text_ += ',';
  }
  text_ += label;
  text_ += '\n';
  return *this;
}

std::string to_csv(const SurfaceTable& table) {
  CsvBuilder csv({"vary", "gamma0_t", "concurrence"});
  for (const auto& r : table.rows) csv.row({r.vary_value, r.gamma0_t, r.concurrence});
  return csv.str();
}

std::string to_csv(const RegionTable& table) {
  CsvBuilder csv({"alpha", "r", "class"});
  for (const auto& c : table.cells) csv.row({c.alpha, c.r}, to_string(c.classification));
  return csv.str();
}

void write_text_file(const std::filesystem::path& destination, std::string_view contents) {
  std::ofstream out(destination, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + destination.string() + ": " + std::strerror(errno));
  }
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.flush();
  if (!out) {
    throw IoError("write to " + destination.string() + " failed: " + std::strerror(errno));
  }
}

void write_csv(const SurfaceTable& table, const std::filesystem::path& destination) {
  write_text_file(destination, to_csv(table));
}

void write_csv(const RegionTable& table, const std::filesystem::path& destination) {
  write_text_file(destination, to_csv(table));
}

}  // namespace qesd
