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

#include "lcris/result_table.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace lcris {

std::string format_double(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    if (res.ec != std::errc())
        throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, res.ptr);
}

void ResultTable::add_row(std::vector<double> row)
{
    if (row.size() != columns.size())
        throw std::invalid_argument("ResultTable: row has " + std::to_string(row.size()) + " values, expected "
                                    + std::to_string(columns.size()));
    for (double v : row)
        if (!std::isfinite(v))
            throw std::invalid_argument("ResultTable: non-finite value");
    rows.push_back(std::move(row));
}

void ResultTable::set_meta(const std::string& key, const std::string& value)
{
    if (key.find_first_of(":\n") != std::string::npos || value.find('\n') != std::string::npos)
        throw std::invalid_argument("ResultTable: metadata must be single-line and keys free of ':'");
    for (auto& kv : metadata)
        if (kv.first == key) {
            kv.second = value;
            return;
        }
    metadata.emplace_back(key, value);
}

const std::string* ResultTable::meta(const std::string& key) const
{
    for (const auto& kv : metadata)
        if (kv.first == key)
            return &kv.second;
    return nullptr;
}

std::size_t ResultTable::column_index(const std::string& name) const
{
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end())
        throw std::out_of_range("ResultTable: no column " + name);
    return static_cast<std::size_t>(it - columns.begin());
}

std::vector<double> ResultTable::column(const std::string& name) const
{
    const std::size_t k = column_index(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows)
        out.push_back(r[k]);
    return out;
}

std::string ResultTable::to_csv() const
{
    std::string out;
    for (const auto& [k, v] : metadata)
        out += "# " + k + ": " + v + "\n";
    for (std::size_t c = 0; c < columns.size(); ++c)
        out += (c ? "," : "") + columns[c];
    out += "\n";
    for (const auto& r : rows) {
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (c)
                out += ',';
            out += format_double(r[c]);
        }
        out += "\n";
    }
    return out;
}

void ResultTable::write_csv(const std::filesystem::path& path) const
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    f << to_csv();
    if (!f)
        throw std::runtime_error("write failed: " + path.string());
}

}  // namespace lcris
