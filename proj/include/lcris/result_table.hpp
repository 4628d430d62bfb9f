// SPDX-License-Identifier: Apache-2.0
//
// lcris - temperature-aware phase-shift design for liquid-crystal RIS
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef LCRIS_RESULT_TABLE_HPP
#define LCRIS_RESULT_TABLE_HPP

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace lcris {

// Rectangular table of finite reals with an ordered key/value metadata block.
// Serialised as CSV: "# key: value" lines, a header line, then one line per
// row with shortest round-trip number formatting and LF line endings.
struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, std::string>> metadata;

    explicit ResultTable(std::vector<std::string> cols = {}) : columns(std::move(cols)) {}

    // Throws std::invalid_argument on a width mismatch or non-finite value.
    void add_row(std::vector<double> row);
    void set_meta(const std::string& key, const std::string& value);
    const std::string* meta(const std::string& key) const;

    std::size_t column_index(const std::string& name) const;
    std::vector<double> column(const std::string& name) const;

    std::string to_csv() const;
    void write_csv(const std::filesystem::path& path) const;
};

/// Shortest decimal string that parses back to exactly `v`.
std::string format_double(double v);

}  // namespace lcris

#endif
