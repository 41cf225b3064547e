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
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "sequences.hpp"
#include "substitution.hpp"

namespace splythoff {

/// Two-pile position stored as an unordered pair, a <= b.
struct Position {
    std::uint32_t a = 0;
    std::uint32_t b = 0;

    Position() = default;
    Position(std::uint32_t x, std::uint32_t y) : a(std::min(x, y)), b(std::max(x, y)) {}

    std::uint32_t delta() const { return b - a; }
    std::uint64_t sigma() const { return std::uint64_t{a} + b; }

    friend auto operator<=>(const Position&, const Position&) = default;
};

inline std::string to_string(Position p) { return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")"; }

enum class Family { wythoff, a_wythoff, splythoff, a_splythoff };

struct GameRules {
    Family family = Family::splythoff;
    std::uint32_t a = 1;

    GameRules() = default;
    GameRules(Family f, std::uint32_t param) : family(f), a(param)
    {
        if (a < 1) throw invalid_parameter("game parameter a must be >= 1");
        if ((f == Family::wythoff || f == Family::splythoff) && a != 1)
            throw invalid_parameter("base games take a = 1");
    }

    static GameRules wythoff() { return {Family::wythoff, 1}; }
    static GameRules splythoff() { return {Family::splythoff, 1}; }
    static GameRules a_wythoff(std::uint32_t a) { return {Family::a_wythoff, a}; }
    static GameRules a_splythoff(std::uint32_t a) { return {Family::a_splythoff, a}; }

    bool splits() const { return family == Family::splythoff || family == Family::a_splythoff; }

    std::string name() const
    {
        switch (family) {
        case Family::wythoff: return "wythoff";
        case Family::a_wythoff: return std::to_string(a) + "-wythoff";
        case Family::splythoff: return "splythoff";
        case Family::a_splythoff: return std::to_string(a) + "-splythoff";
        }
        return "?";
    }
};

/**
 * Calls fn(Position) for every successor of pos. Successors may repeat.
 *
 * single: take t >= 1 from one pile.
 * double: take x >= 1 and y >= 1 from the two piles with |x - y| < a.
 * split:  (split families) after a double that empties exactly one pile and
 *         leaves m >= 2, also reach every {c, m - c} with 1 <= c < m. The
 *         emptied pile must lose no more counters than the other one; for
 *         a = 1 this is automatic, and for a >= 2 it is the reading under
 *         which the solver reproduces the published P-position tables.
 */
template <class Fn>
void for_each_move(const GameRules& rules, Position pos, Fn&& fn)
{
    const std::uint32_t p = pos.a;
    const std::uint32_t q = pos.b;
    const std::int64_t spread = rules.a;
    for (std::uint32_t t = 1; t <= p; ++t) fn(Position(p - t, q));
    for (std::uint32_t t = 1; t <= q; ++t) fn(Position(p, q - t));
    for (std::int64_t x = 1; x <= p; ++x) {
        std::int64_t lo = std::max<std::int64_t>(1, x - spread + 1);
        std::int64_t hi = std::min<std::int64_t>(q, x + spread - 1);
        for (std::int64_t y = lo; y <= hi; ++y) {
            auto left = static_cast<std::uint32_t>(p - x);
            auto right = static_cast<std::uint32_t>(q - y);
            fn(Position(left, right));
            const bool emptied = left == 0 ? x <= y : right == 0 && y <= x;
            if (rules.splits() && (left == 0) != (right == 0) && emptied) {
                std::uint32_t m = left + right;
                for (std::uint32_t c = 1; 2 * c <= m; ++c) fn(Position(c, m - c));
            }
        }
    }
}

/// Sorted, de-duplicated successors.
inline std::vector<Position> legal_moves(const GameRules& rules, Position pos)
{
    std::vector<Position> out;
    for_each_move(rules, pos, [&](Position s) { out.push_back(s); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Sprague-Grundy values

/// values[m][n] for piles 0..size-1, row-major; symmetric.
struct SGGrid {
    std::uint32_t size = 0;
    std::vector<std::uint32_t> values;

    std::uint32_t at(std::uint32_t m, std::uint32_t n) const { return values[std::size_t{m} * size + n]; }
    std::uint32_t& at(std::uint32_t m, std::uint32_t n) { return values[std::size_t{m} * size + n]; }
    std::uint32_t at(Position p) const { return at(p.a, p.b); }

    friend bool operator==(const SGGrid&, const SGGrid&) = default;
};

inline constexpr std::uint64_t default_memory_cap = std::uint64_t{1} << 32;

namespace detail {

inline std::uint32_t sg_value(const GameRules& rules, const SGGrid& grid, Position pos,
                              std::vector<std::uint32_t>& scratch, std::vector<std::uint8_t>& flags)
{
    scratch.clear();
    for_each_move(rules, pos, [&](Position s) { scratch.push_back(grid.at(s)); });
    flags.assign(scratch.size() + 1, 0);
    for (std::uint32_t v : scratch)
        if (v < flags.size()) flags[v] = 1;
    std::uint32_t g = 0;
    while (flags[g]) ++g;
    return g;
}

} // namespace detail

/**
 * Retrograde sweep by increasing pile sum; every move lowers the sum, so each
 * level only reads finished levels. Cells within a level are independent and
 * are split across `threads` workers; the result does not depend on the
 * thread count.
 */
inline SGGrid sprague_grundy_grid(const GameRules& rules, std::uint32_t size, unsigned threads = 1,
                                  std::uint64_t memory_cap = default_memory_cap)
{
    if (size < 1) throw invalid_parameter("board size must be >= 1");
    if (std::uint64_t{size} * size * sizeof(std::uint32_t) > memory_cap)
        throw resource_error("SG grid of size " + std::to_string(size) + " exceeds memory cap");
    threads = std::max(1u, threads);

    SGGrid grid;
    grid.size = size;
    grid.values.assign(std::size_t{size} * size, 0);

    auto solve_range = [&](std::uint32_t s, std::uint32_t m_begin, std::uint32_t m_end) {
        std::vector<std::uint32_t> scratch;
        std::vector<std::uint8_t> flags;
        for (std::uint32_t m = m_begin; m < m_end; ++m) {
            std::uint32_t n = s - m;
            std::uint32_t g = detail::sg_value(rules, grid, Position(m, n), scratch, flags);
            grid.at(m, n) = g;
            grid.at(n, m) = g;
        }
    };

    for (std::uint32_t s = 0; s + 1 < 2 * size; ++s) {
        std::uint32_t m_begin = s >= size ? s - (size - 1) : 0;
        std::uint32_t m_end = s / 2 + 1;
        if (m_begin >= m_end) continue;
        std::uint32_t cells = m_end - m_begin;
        if (threads == 1 || cells < 64) {
            solve_range(s, m_begin, m_end);
            continue;
        }
        std::vector<std::thread> pool;
        std::uint32_t chunk = (cells + threads - 1) / threads;
        for (std::uint32_t lo = m_begin; lo < m_end; lo += chunk)
            pool.emplace_back(solve_range, s, lo, std::min(m_end, lo + chunk));
        for (auto& t : pool) t.join();
    }
    return grid;
}

// ---------------------------------------------------------------------------
// P-positions

/**
 * All P-positions with both piles < size, excluding (0,0), ordered by sum.
 *
 * Same sweep order as the SG grid, but instead of scanning each cell's moves
 * every newly found P-position marks its predecessors as N-positions. A cell
 * still unmarked when the sweep reaches it has no move to a P-position.
 */
inline std::vector<Position> p_positions_on_board(const GameRules& rules, std::uint32_t size,
                                                  std::uint64_t memory_cap = default_memory_cap)
{
    if (std::uint64_t{size} * size > memory_cap)
        throw resource_error("board of size " + std::to_string(size) + " exceeds memory cap");
    std::vector<std::uint8_t> winning(std::size_t{size} * size, 0);
    auto mark = [&](std::int64_t x, std::int64_t y) {
        if (x < size && y < size) {
            Position p(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y));
            winning[std::size_t{p.a} * size + p.b] = 1;
        }
    };
    const std::int64_t spread = rules.a;
    const std::int64_t n = size;

    std::vector<Position> out;
    for (std::uint32_t s = 0; s + 1 < 2 * size; ++s) {
        std::uint32_t m_begin = s >= size ? s - (size - 1) : 0;
        for (std::uint32_t m = m_begin; 2 * m <= s; ++m) {
            const std::uint32_t q = s - m;
            if (winning[std::size_t{m} * size + q]) continue;
            if (s > 0) out.emplace_back(m, q);

            for (auto [u, v] : {std::pair<std::int64_t, std::int64_t>{m, q}, {q, m}}) {
                for (std::int64_t t = 1; u + t < n; ++t) mark(u + t, v);
                for (std::int64_t x = 1; u + x < n; ++x)
                    for (std::int64_t y = std::max<std::int64_t>(1, x - spread + 1);
                         y <= x + spread - 1 && v + y < n; ++y)
                        mark(u + x, v + y);
            }
            if (rules.splits() && m >= 1) {
                // a double that empties a pile of x, takes y >= x from the
                // other and leaves m + q to split
                const std::int64_t rest = std::int64_t{m} + q;
                for (std::int64_t x = 1; x < n; ++x)
                    for (std::int64_t y = x;
                         y <= x + spread - 1 && rest + y < n; ++y)
                        mark(x, rest + y);
            }
        }
    }
    return out;
}

inline constexpr std::uint32_t default_board_cap = 16384;

/**
 * The first `count` non-zero P-positions ordered by smaller pile.
 *
 * The board doubles until the first `count` positions are provably
 * complete: no pile size occurs in two P-positions (a single move would
 * join them), so once every value 1..a_count occurs as a coordinate no
 * position with a smaller first pile can lie off the board.
 */
inline std::vector<Position> p_positions(const GameRules& rules, std::size_t count,
                                         std::uint32_t board_cap = default_board_cap)
{
    if (count == 0) return {};
    for (std::uint32_t size = 64;; size *= 2) {
        if (size > board_cap)
            throw cap_exceeded("could not certify " + std::to_string(count) + " P-positions on a board of " +
                               std::to_string(board_cap));
        std::vector<Position> all = p_positions_on_board(rules, size);
        std::sort(all.begin(), all.end());
        if (all.size() < count) continue;
        const std::uint32_t last = all[count - 1].a;
        std::vector<bool> seen(std::size_t{last} + 1, false);
        for (Position p : all) {
            if (p.a <= last) seen[p.a] = true;
            if (p.b <= last) seen[p.b] = true;
        }
        if (std::all_of(seen.begin() + 1, seen.end(), [](bool v) { return v; })) {
            all.resize(count);
            return all;
        }
    }
}

// ---------------------------------------------------------------------------
// N/P characterization for Splythoff

struct CharacterizationReport {
    bool holds = true;
    std::uint64_t positions_checked = 0;
    std::optional<Position> counterexample;
    std::string detail;
};

/**
 * Checks, for every 0 < m < n <= bound, the stagewise description of the
 * positions that move to one of the first k P-positions: (m, n) reaches
 * {P_1..P_k} exactly when {m, n} meets A_k ∪ B_k or {n - m, n + m} meets
 * Delta_k ∪ Sigma_k. This is equivalent to: the index of the earliest
 * reachable P-position equals the index of the earliest column whose entries
 * meet the position's coordinates, and P_j itself first meets column j.
 */
inline CharacterizationReport np_characterization_check(const GameRules& rules, std::uint32_t bound)
{
    if (rules.family != Family::splythoff) throw invalid_parameter("characterization applies to Splythoff only");
    CharacterizationReport rep;
    constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();

    const std::size_t columns = 2 * std::size_t{bound} + 2;
    MexTable t = splythoff_columns(columns);
    const auto& drow = t.row("Delta");
    const auto& arow = t.row("A");
    const auto& brow = t.row("B");
    const auto& srow = t.row("Sigma");
    const std::uint64_t limit = 2 * std::uint64_t{bound} + 1;
    std::vector<std::uint64_t> ab_index(limit + 1, none);
    std::vector<std::uint64_t> ds_index(limit + 1, none);
    std::vector<std::uint64_t> p_index(std::size_t{bound + 1} * (bound + 1), none);
    for (std::size_t i = 0; i < columns; ++i) {
        for (std::uint64_t v : {arow[i], brow[i]})
            if (v <= limit) ab_index[v] = i + 1;
        for (std::uint64_t v : {drow[i], srow[i]})
            if (v <= limit) ds_index[v] = i + 1;
        if (brow[i] <= bound) p_index[arow[i] * (bound + 1) + brow[i]] = i + 1;
    }

    SGGrid grid = sprague_grundy_grid(rules, bound + 1);
    auto fail = [&](Position p, std::string what) {
        rep.holds = false;
        rep.counterexample = p;
        rep.detail = std::move(what);
        return rep;
    };

    for (std::uint32_t m = 1; m <= bound; ++m)
        for (std::uint32_t n = m + 1; n <= bound; ++n) {
            ++rep.positions_checked;
            Position pos(m, n);
            const std::uint64_t own = p_index[std::size_t{m} * (bound + 1) + n];
            if ((grid.at(pos) == 0) != (own != none)) return fail(pos, "SG grid and mex rule disagree");

            std::uint64_t reach = none;
            for_each_move(rules, pos, [&](Position s) {
                if (s.sigma() > 0 && grid.at(s) == 0)
                    reach = std::min(reach, p_index[std::size_t{s.a} * (bound + 1) + s.b]);
            });
            std::uint64_t meet = std::min({ab_index[m], ab_index[n], ds_index[n - m], ds_index[m + n]});
            if (own != none) {
                if (reach != none) return fail(pos, "P-position has a move to a P-position");
                if (meet != own) return fail(pos, "P-position meets an earlier column");
            } else if (reach != meet) {
                return fail(pos, "first reachable P-position " + std::to_string(reach) +
                                     " differs from first meeting column " + std::to_string(meet));
            }
        }
    return rep;
}

// ---------------------------------------------------------------------------
// Line statistics of an SG grid

enum class LineAxis { row, column, diagonal, reflected_diagonal };

struct LineReport {
    std::vector<std::uint32_t> values;         // the scanned line, in order
    std::vector<std::uint32_t> multiplicity;   // counts of 0..prefix_cap
    std::vector<std::uint32_t> missing;        // values <= prefix_cap never seen
    struct Duplicate {
        std::uint32_t value;
        std::size_t first;
        std::size_t second;
    };
    std::vector<Duplicate> duplicates;         // values <= prefix_cap seen twice

    bool contains(std::uint32_t v) const { return v < multiplicity.size() && multiplicity[v] > 0; }
};

/**
 * Scans one line of the grid. row/column fix a pile; diagonal `index` is the
 * cells (t, t + index); reflected_diagonal adds the anti-diagonal segment
 * (t, index - t), 0 < t <= index, which the diagonal would trace after
 * bouncing off the empty pile.
 */
inline LineReport sg_permutation_check(const SGGrid& grid, LineAxis axis, std::uint32_t index,
                                       std::uint32_t prefix_cap)
{
    if (index >= grid.size) throw invalid_parameter("line index outside the board");
    LineReport rep;
    const std::uint32_t n = grid.size;
    switch (axis) {
    case LineAxis::row:
        for (std::uint32_t t = 0; t < n; ++t) rep.values.push_back(grid.at(index, t));
        break;
    case LineAxis::column:
        for (std::uint32_t t = 0; t < n; ++t) rep.values.push_back(grid.at(t, index));
        break;
    case LineAxis::reflected_diagonal:
        for (std::uint32_t t = index; t >= 1; --t) rep.values.push_back(grid.at(t, index - t));
        [[fallthrough]];
    case LineAxis::diagonal:
        for (std::uint32_t t = 0; t + index < n; ++t) rep.values.push_back(grid.at(t, t + index));
        break;
    }
    rep.multiplicity.assign(std::size_t{prefix_cap} + 1, 0);
    std::vector<std::size_t> first(std::size_t{prefix_cap} + 1, 0);
    for (std::size_t i = 0; i < rep.values.size(); ++i) {
        std::uint32_t v = rep.values[i];
        if (v > prefix_cap) continue;
        if (rep.multiplicity[v] == 0) first[v] = i;
        else if (rep.multiplicity[v] == 1) rep.duplicates.push_back({v, first[v], i});
        ++rep.multiplicity[v];
    }
    for (std::uint32_t v = 0; v <= prefix_cap; ++v)
        if (rep.multiplicity[v] == 0) rep.missing.push_back(v);
    return rep;
}

// ---------------------------------------------------------------------------
// Step codes

struct StepCode {
    Position first;
    std::vector<std::pair<std::int64_t, std::int64_t>> alphabet;  // in order of first appearance
    std::vector<std::uint32_t> code;

    std::string code_string() const
    {
        std::string out;
        for (std::uint32_t c : code) {
            if (c >= 16) throw invalid_parameter("step alphabet too large for a digit string");
            out.push_back(letter_char(static_cast<Letter>(c)));
        }
        return out;
    }
};

inline StepCode step_code(std::span<const Position> positions)
{
    if (positions.size() < 2) throw invalid_parameter("step code needs at least two positions");
    StepCode sc;
    sc.first = positions.front();
    for (std::size_t i = 1; i < positions.size(); ++i) {
        std::pair<std::int64_t, std::int64_t> step{std::int64_t{positions[i].a} - positions[i - 1].a,
                                                   std::int64_t{positions[i].b} - positions[i - 1].b};
        auto it = std::find(sc.alphabet.begin(), sc.alphabet.end(), step);
        if (it == sc.alphabet.end()) {
            sc.alphabet.push_back(step);
            it = sc.alphabet.end() - 1;
        }
        sc.code.push_back(static_cast<std::uint32_t>(it - sc.alphabet.begin()));
    }
    return sc;
}

inline StepCode step_code(const GameRules& rules, std::size_t n)
{
    std::vector<Position> ps = p_positions(rules, n);
    return step_code(ps);
}

/// Rows A and B of a P-position list.
inline TextTable pile_table(std::span<const Position> ps)
{
    TextTable t;
    t.names = {"A", "B"};
    t.rows.assign(2, {});
    for (Position p : ps) {
        t.rows[0].push_back(p.a);
        t.rows[1].push_back(p.b);
    }
    return t;
}

/// First n P-positions headed by the step code; header letter i codes the
/// step from column i to column i + 1.
inline TextTable step_code_table(const GameRules& rules, std::size_t n)
{
    std::vector<Position> ps = p_positions(rules, n + 1);
    StepCode sc = step_code(ps);
    ps.pop_back();
    TextTable t = pile_table(ps);
    t.header_name = "code";
    t.header = sc.code;
    return t;
}

/// Rebuilds the positions from the first one and the coded steps.
inline std::vector<Position> decode(const StepCode& sc)
{
    std::vector<Position> out{sc.first};
    std::int64_t a = sc.first.a;
    std::int64_t b = sc.first.b;
    for (std::uint32_t c : sc.code) {
        a += sc.alphabet.at(c).first;
        b += sc.alphabet.at(c).second;
        out.emplace_back(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
    }
    return out;
}

struct FixpointReport {
    std::size_t consistent_prefix_length = 0;
    std::size_t word_length = 0;
    bool first_letter_ok = false;

    bool fully_consistent() const { return first_letter_ok && consistent_prefix_length == word_length; }
};

/// Longest prefix of `word` that agrees with the fixed point of `sub` seeded by word[0].
template <class T>
FixpointReport check_substitution_fixpoint(std::span<const T> word, const Substitution& sub)
{
    FixpointReport rep;
    rep.word_length = word.size();
    if (word.empty()) {
        rep.first_letter_ok = true;
        return rep;
    }
    if (word[0] >= sub.alphabet_size()) return rep;
    const auto seed = static_cast<Letter>(word[0]);
    if (sub.image(seed).front() != seed) return rep;
    rep.first_letter_ok = true;
    WordStream stream(sub, seed);
    std::span<const Letter> fp;
    try {
        fp = stream.prefix(word.size());
    } catch (const no_fixed_point&) {
        fp = stream.prefix(1);
    }
    std::size_t i = 0;
    while (i < fp.size() && static_cast<std::uint64_t>(word[i]) == fp[i]) ++i;
    rep.consistent_prefix_length = i;
    return rep;
}

inline FixpointReport check_substitution_fixpoint(const Word& word, const Substitution& sub)
{
    return check_substitution_fixpoint(std::span<const Letter>(word), sub);
}

inline FixpointReport check_substitution_fixpoint(const std::vector<std::uint32_t>& word, const Substitution& sub)
{
    return check_substitution_fixpoint(std::span<const std::uint32_t>(word), sub);
}

// ---------------------------------------------------------------------------
// Grid export

/**
 * One line per second pile size n, listing values (m, n) for m = 0..N-1.
 * With printed_orientation the lines run from n = N-1 down to 0, as in the
 * printed table.
 */
inline std::string sg_to_csv(const SGGrid& grid, bool printed_orientation = false)
{
    std::ostringstream os;
    for (std::uint32_t i = 0; i < grid.size; ++i) {
        const std::uint32_t n = printed_orientation ? grid.size - 1 - i : i;
        for (std::uint32_t m = 0; m < grid.size; ++m) os << (m ? "," : "") << grid.at(m, n);
        os << '\n';
    }
    return os.str();
}

namespace detail {

inline void put_u32(std::string& out, std::uint32_t v)
{
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

inline std::uint32_t get_u32(std::string_view in, std::size_t at)
{
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= std::uint32_t{static_cast<unsigned char>(in[at + i])} << (8 * i);
    return v;
}

} // namespace detail

/// "SGG1", little-endian u32 N, then N*N little-endian u32 values, row-major.
inline std::string sg_to_binary(const SGGrid& grid)
{
    std::string out = "SGG1";
    out.reserve(8 + grid.values.size() * 4);
    detail::put_u32(out, grid.size);
    for (std::uint32_t v : grid.values) detail::put_u32(out, v);
    return out;
}

inline SGGrid sg_from_binary(std::string_view bytes)
{
    if (bytes.size() < 8 || bytes.substr(0, 4) != "SGG1") throw invalid_parameter("not an SGG1 dump");
    SGGrid grid;
    grid.size = detail::get_u32(bytes, 4);
    const std::uint64_t cells = std::uint64_t{grid.size} * grid.size;
    if (bytes.size() != 8 + 4 * cells) throw invalid_parameter("SGG1 dump has the wrong length");
    grid.values.resize(cells);
    for (std::uint64_t i = 0; i < cells; ++i) grid.values[i] = detail::get_u32(bytes, 8 + 4 * i);
    return grid;
}

} // namespace splythoff
