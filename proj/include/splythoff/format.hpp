/*
 * Copyright 2026 The Splythoff Authors
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

#include <algorithm>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace splythoff {

/**
 * Serializable view of a table: an optional header row of letters (the word
 * heading the columns) followed by named integer rows.
 */
struct TextTable {
    std::string header_name;
    std::vector<std::uint32_t> header;
    std::vector<std::string> names;
    std::vector<std::vector<std::uint64_t>> rows;

    std::size_t columns() const
    {
        std::size_t n = header.size();
        for (const auto& r : rows) n = std::max(n, r.size());
        return n;
    }

    const std::vector<std::uint64_t>& row(const std::string& name) const
    {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return rows[i];
        throw invalid_parameter("no row named '" + name + "'");
    }
};

namespace detail {

template <class T>
void write_cells(std::ostream& os, std::span<const T> cells, std::size_t limit, char sep)
{
    for (std::size_t i = 0; i < cells.size() && i < limit; ++i) os << sep << +cells[i];
}

} // namespace detail

/// One line per row: name, then tab-separated cells. Header letters come first.
inline std::string to_tsv(const TextTable& t, std::size_t limit = SIZE_MAX)
{
    std::ostringstream os;
    if (!t.header.empty()) {
        os << t.header_name;
        detail::write_cells<std::uint32_t>(os, t.header, limit, '\t');
        os << '\n';
    }
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        os << t.names[i];
        detail::write_cells<std::uint64_t>(os, t.rows[i], limit, '\t');
        os << '\n';
    }
    return os.str();
}

/// CSV with a `row_name` first column and 1-based column indices as titles.
inline std::string to_csv(const TextTable& t, std::size_t limit = SIZE_MAX)
{
    std::ostringstream os;
    std::size_t n = std::min(limit, t.columns());
    os << "row_name";
    for (std::size_t c = 1; c <= n; ++c) os << ',' << c;
    os << '\n';
    if (!t.header.empty()) {
        os << t.header_name;
        detail::write_cells<std::uint32_t>(os, t.header, limit, ',');
        os << '\n';
    }
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        os << t.names[i];
        detail::write_cells<std::uint64_t>(os, t.rows[i], limit, ',');
        os << '\n';
    }
    return os.str();
}

/// OEIS b-file: line i is "i v_i", 1-indexed.
inline std::string to_bfile(std::span<const std::uint64_t> values)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) os << (i + 1) << ' ' << values[i] << '\n';
    return os.str();
}

} // namespace splythoff
