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
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "format.hpp"
#include "substitution.hpp"

namespace splythoff {

enum class TableKind { positions, difference, double_difference };

/**
 * Rows of letter positions of the k-bonacci word, or their successive
 * differences. All rows have the same length; the header holds the first
 * `columns()` letters of the word.
 *
 * positions:         X^0 .. X^{k-1}
 * difference:        D^j = X^{j+1} - X^j, j = 0 .. k-2
 * double_difference: dD^i = D^{i+1} - D^i, i = 0 .. k-3, then the sum row
 *                    S = D^0 + ... + D^{k-2}
 */
struct SequenceTable {
    TableKind kind = TableKind::positions;
    unsigned k = 0;
    Word header;
    std::vector<std::vector<std::uint64_t>> rows;

    std::size_t columns() const { return header.size(); }

    std::vector<std::string> row_names() const
    {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            switch (kind) {
            case TableKind::positions: names.push_back("X" + std::to_string(i)); break;
            case TableKind::difference: names.push_back("Delta" + std::to_string(i)); break;
            case TableKind::double_difference:
                names.push_back(i + 1 == rows.size() ? "Sigma" : "dDelta" + std::to_string(i));
                break;
            }
        }
        return names;
    }

    TextTable text() const
    {
        TextTable t;
        t.header_name = "omega" + std::to_string(k);
        t.header.assign(header.begin(), header.end());
        t.names = row_names();
        t.rows = rows;
        return t;
    }
};

/// Per-letter column increments of one table kind.
using StepVector = std::vector<std::uint64_t>;

inline void check_table_k(unsigned k)
{
    if (k < 3 || k > max_alphabet) throw invalid_parameter("tables need k in 3..16");
}

/**
 * [l^0(i), ..., l^{k-1}(i)] with l^j(i) = |theta^{j+1}(i)|, via the doubling
 * recurrence l^h(i) = 2 l^{h-1}(i) - [h + i == k - 1].
 */
inline StepVector step_lengths(unsigned k, Letter i)
{
    if (k < 2 || k > max_alphabet) throw invalid_parameter("k must be in 2..16");
    if (i >= k) throw invalid_letter("letter " + std::to_string(i) + " out of range for k=" + std::to_string(k));
    StepVector out(k);
    out[0] = unsigned{i} + 1 < k ? 2 : 1;
    for (unsigned h = 1; h < k; ++h) out[h] = 2 * out[h - 1] - (h + unsigned{i} == k - 1 ? 1 : 0);
    return out;
}

inline constexpr std::size_t default_column_cap = std::size_t{1} << 28;

/**
 * Positions table generated column by column: the first column holds
 * 1, 2, 4, ..., 2^{k-1} and column m+1 adds step_lengths of the m-th letter.
 */
inline SequenceTable positions_table(unsigned k, std::size_t n, std::size_t column_cap = default_column_cap)
{
    check_table_k(k);
    if (n < 1) throw invalid_parameter("need at least one column");
    if (n > column_cap) throw cap_exceeded("column count " + std::to_string(n) + " exceeds cap");

    SequenceTable t;
    t.kind = TableKind::positions;
    t.k = k;
    t.header = fixed_point_prefix(kbonacci_substitution(k), 0, n);

    std::vector<StepVector> steps;
    for (unsigned i = 0; i < k; ++i) steps.push_back(step_lengths(k, static_cast<Letter>(i)));

    t.rows.assign(k, std::vector<std::uint64_t>(n));
    for (unsigned j = 0; j < k; ++j) t.rows[j][0] = std::uint64_t{1} << j;
    for (std::size_t m = 1; m < n; ++m) {
        const StepVector& s = steps[t.header[m - 1]];
        for (unsigned j = 0; j < k; ++j) t.rows[j][m] = t.rows[j][m - 1] + s[j];
    }
    return t;
}

/// Same contract as positions_table, built by scanning the word for each letter.
inline SequenceTable positions_table_oracle(unsigned k, std::size_t n, std::size_t scan_cap = default_scan_cap)
{
    check_table_k(k);
    if (n < 1) throw invalid_parameter("need at least one column");
    SequenceTable t;
    t.kind = TableKind::positions;
    t.k = k;
    WordStream stream(kbonacci_substitution(k), 0);
    auto head = stream.prefix(n);
    t.header.assign(head.begin(), head.end());
    for (unsigned j = 0; j < k; ++j) t.rows.push_back(letter_positions(stream, static_cast<Letter>(j), n, scan_cap));
    return t;
}

inline SequenceTable difference_table(const SequenceTable& positions)
{
    if (positions.kind != TableKind::positions) throw invalid_parameter("expected a positions table");
    SequenceTable t;
    t.kind = TableKind::difference;
    t.k = positions.k;
    t.header = positions.header;
    for (std::size_t j = 0; j + 1 < positions.rows.size(); ++j) {
        const auto& lo = positions.rows[j];
        const auto& hi = positions.rows[j + 1];
        std::vector<std::uint64_t> row(lo.size());
        for (std::size_t m = 0; m < lo.size(); ++m) row[m] = hi[m] - lo[m];
        t.rows.push_back(std::move(row));
    }
    return t;
}

inline SequenceTable difference_table(unsigned k, std::size_t n) { return difference_table(positions_table(k, n)); }

inline SequenceTable double_difference_table(const SequenceTable& difference)
{
    if (difference.kind != TableKind::difference) throw invalid_parameter("expected a difference table");
    SequenceTable t;
    t.kind = TableKind::double_difference;
    t.k = difference.k;
    t.header = difference.header;
    const std::size_t n = difference.columns();
    for (std::size_t i = 0; i + 1 < difference.rows.size(); ++i) {
        std::vector<std::uint64_t> row(n);
        for (std::size_t m = 0; m < n; ++m) row[m] = difference.rows[i + 1][m] - difference.rows[i][m];
        t.rows.push_back(std::move(row));
    }
    std::vector<std::uint64_t> sum(n, 0);
    for (const auto& r : difference.rows)
        for (std::size_t m = 0; m < n; ++m) sum[m] += r[m];
    t.rows.push_back(std::move(sum));
    return t;
}

inline SequenceTable double_difference_table(unsigned k, std::size_t n)
{
    return double_difference_table(difference_table(k, n));
}

inline SequenceTable build_table(TableKind kind, unsigned k, std::size_t n)
{
    switch (kind) {
    case TableKind::positions: return positions_table(k, n);
    case TableKind::difference: return difference_table(k, n);
    case TableKind::double_difference: return double_difference_table(k, n);
    }
    throw invalid_parameter("unknown table kind");
}

/// Smallest power-of-two column count whose every row reaches `upto`.
inline SequenceTable table_covering(TableKind kind, unsigned k, std::uint64_t upto,
                                    std::size_t column_cap = default_column_cap)
{
    for (std::size_t n = 64;; n *= 2) {
        if (n > column_cap) throw cap_exceeded("table does not reach " + std::to_string(upto) + " within cap");
        SequenceTable t = build_table(kind, k, n);
        bool covered = std::all_of(t.rows.begin(), t.rows.end(), [&](const auto& r) { return r.back() >= upto; });
        if (covered) return t;
    }
}

// ---------------------------------------------------------------------------
// Set relations between rows. Rows are finite prefixes of infinite increasing
// sequences, so every check only asserts what the prefixes determine.

struct PartitionReport {
    enum class Violation { none, missing, duplicate };
    bool is_partition = true;
    std::optional<std::uint64_t> first_violation;
    Violation violation = Violation::none;
    std::uint64_t upto = 0;
};

namespace detail {

inline std::uint64_t horizon_of(std::span<const std::vector<std::uint64_t>> rows)
{
    std::uint64_t h = UINT64_MAX;
    for (const auto& r : rows) h = std::min<std::uint64_t>(h, r.empty() ? 0 : r.back());
    return h;
}

} // namespace detail

inline constexpr std::uint64_t partition_bitmap_limit = 100'000'000;

/**
 * Checks that every integer in 1..upto occurs exactly once across `rows`.
 * A missing value above the shortest row's last element cannot be decided
 * and raises insufficient_terms; a duplicate is always decisive.
 */
inline PartitionReport check_partition(std::span<const std::vector<std::uint64_t>> rows, std::uint64_t upto,
                                       std::uint64_t bitmap_limit = partition_bitmap_limit)
{
    PartitionReport rep;
    rep.upto = upto;
    const std::uint64_t horizon = detail::horizon_of(rows);
    for (const auto& r : rows)
        for (std::size_t i = 1; i < r.size(); ++i)
            if (r[i] <= r[i - 1]) throw invalid_parameter("rows must be strictly increasing");

    auto fail = [&](std::uint64_t v, PartitionReport::Violation kind) {
        rep.is_partition = false;
        rep.first_violation = v;
        rep.violation = kind;
        return rep;
    };
    auto undecided = [&](std::uint64_t v) {
        return insufficient_terms("cannot decide coverage of " + std::to_string(v) + ": rows only reach " +
                                  std::to_string(horizon));
    };

    if (upto <= bitmap_limit) {
        std::vector<std::uint8_t> count(upto + 1, 0);
        for (const auto& r : rows)
            for (std::uint64_t v : r) {
                if (v > upto) break;
                if (v == 0) throw invalid_parameter("rows must hold positive integers");
                if (count[v] < 2) ++count[v];
            }
        for (std::uint64_t v = 1; v <= upto; ++v) {
            if (count[v] >= 2) return fail(v, PartitionReport::Violation::duplicate);
            if (count[v] == 0) {
                if (v > horizon) throw undecided(v);
                return fail(v, PartitionReport::Violation::missing);
            }
        }
        return rep;
    }

    // k-way merge; memory independent of upto
    using Item = std::pair<std::uint64_t, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    std::vector<std::size_t> cursor(rows.size(), 0);
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!rows[i].empty()) heap.emplace(rows[i][0], i);
    std::uint64_t expect = 1;
    while (expect <= upto) {
        if (heap.empty()) throw undecided(expect);
        auto [v, i] = heap.top();
        heap.pop();
        if (++cursor[i] < rows[i].size()) heap.emplace(rows[i][cursor[i]], i);
        if (v < expect) return fail(v, PartitionReport::Violation::duplicate);
        if (v > expect) {
            if (expect > horizon) throw undecided(expect);
            return fail(expect, PartitionReport::Violation::missing);
        }
        ++expect;
    }
    return rep;
}

/// First value shared by two different rows, considering values <= upto.
inline std::optional<std::uint64_t> first_common_value(std::span<const std::vector<std::uint64_t>> rows,
                                                       std::uint64_t upto)
{
    std::vector<std::uint8_t> count(upto + 1, 0);
    for (const auto& r : rows)
        for (std::uint64_t v : r) {
            if (v > upto) break;
            if (count[v] < 2) ++count[v];
        }
    for (std::uint64_t v = 0; v <= upto; ++v)
        if (count[v] >= 2) return v;
    return std::nullopt;
}

struct ShiftRelationReport {
    bool holds = true;
    std::optional<std::uint64_t> counterexample;
    std::string detail;
    std::uint64_t horizon = 0;
};

/**
 * Checks upper - shift ⊆ lower, upper + shift ⊆ lower, and (if
 * require_cover) that the two shifted copies together cover lower, within
 * the range both prefixes determine.
 */
inline ShiftRelationReport check_shift_relation(const std::vector<std::uint64_t>& lower,
                                                const std::vector<std::uint64_t>& upper, std::uint64_t shift,
                                                bool require_cover = true)
{
    ShiftRelationReport rep;
    if (lower.empty() || upper.empty()) return rep;
    const std::uint64_t lower_max = lower.back();
    const std::uint64_t upper_max = upper.back();
    rep.horizon = upper_max > shift ? std::min(lower_max, upper_max - shift) : 0;

    auto in_lower = [&](std::uint64_t v) { return std::binary_search(lower.begin(), lower.end(), v); };
    auto in_upper = [&](std::uint64_t v) { return std::binary_search(upper.begin(), upper.end(), v); };
    auto fail = [&](std::uint64_t v, std::string what) {
        rep.holds = false;
        rep.counterexample = v;
        rep.detail = std::move(what);
        return rep;
    };

    for (std::uint64_t u : upper) {
        if (u <= shift) return fail(u, "upper - shift leaves the positive integers");
        if (u - shift <= lower_max && !in_lower(u - shift)) return fail(u - shift, "upper - shift not in lower");
        if (u + shift <= lower_max && !in_lower(u + shift)) return fail(u + shift, "upper + shift not in lower");
    }
    if (!require_cover) return rep;
    for (std::uint64_t l : lower) {
        if (l > rep.horizon) break;
        bool covered = in_upper(l + shift) || (l > shift && in_upper(l - shift));
        if (!covered) return fail(l, "lower element not a shift of upper");
    }
    return rep;
}

/// First column (0-based) where X^{k-1} != E + X^0 + ... + X^{k-2}.
inline std::optional<std::size_t> last_row_identity_mismatch(const SequenceTable& positions)
{
    if (positions.kind != TableKind::positions) throw invalid_parameter("expected a positions table");
    const std::size_t k = positions.rows.size();
    for (std::size_t m = 0; m < positions.columns(); ++m) {
        std::uint64_t sum = m + 1;
        for (std::size_t j = 0; j + 1 < k; ++j) sum += positions.rows[j][m];
        if (sum != positions.rows[k - 1][m]) return m;
    }
    return std::nullopt;
}

} // namespace splythoff
