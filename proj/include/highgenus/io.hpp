// Copyright 2026 The highgenus Authors
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

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hg {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kOutDirEnv = "HIGHGENUS_OUT_DIR";

/// RFC 4180 field quoting.
std::string csv_escape(std::string_view field);
/// Shortest text that reads back to the same double.
std::string format_number(double x);
std::string format_number(long long x);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add(std::vector<std::string> row);
    std::string to_string() const;
};

/// Parses RFC 4180 text (used to read back emitted tables).
CsvTable parse_csv(std::string_view text);

void write_text_file(const std::filesystem::path& path, std::string_view text);
std::string read_text_file(const std::filesystem::path& path);

/// Value of the output-directory environment variable, else ".".
std::filesystem::path default_output_dir();

struct ResultBundle {
    std::string command;
    std::string config_text;
    std::string complex_hash;
    std::vector<std::pair<std::string, CsvTable>> tables;  // file stem -> table
    std::string summary;

    /// Writes <command>_<stem>.csv per table plus <command>.config.toml and
    /// <command>.summary.txt into dir.
    void write(const std::filesystem::path& dir) const;
};

}  // namespace hg
