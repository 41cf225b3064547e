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

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "games.hpp"
#include "reference.hpp"
#include "sequences.hpp"
#include "substitution.hpp"
#include "tables.hpp"

namespace splythoff {

/// Outcome of one named check. A failure always carries a counterexample.
struct VerificationReport {
    std::string check;
    std::vector<std::pair<std::string, std::int64_t>> params;
    bool passed = true;
    std::string counterexample;
    std::string detail;
    double seconds = 0;

    void fail(std::string where, std::string why = {})
    {
        if (!passed) return;  // keep the first counterexample
        passed = false;
        counterexample = std::move(where);
        detail = std::move(why);
    }
};

namespace detail {

inline VerificationReport timed(std::string name, std::vector<std::pair<std::string, std::int64_t>> params,
                                const std::function<void(VerificationReport&)>& body)
{
    VerificationReport rep;
    rep.check = std::move(name);
    rep.params = std::move(params);
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(rep);
    } catch (const std::exception& e) {
        rep.fail("exception", e.what());
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

inline std::string cell(const std::string& row, std::size_t col, std::uint64_t got, std::uint64_t want)
{
    return row + "[" + std::to_string(col + 1) + "]: got " + std::to_string(got) + ", expected " +
           std::to_string(want);
}

/// Compares rows elementwise on their common length; reports the first mismatch.
inline void compare_rows(VerificationReport& rep, const std::string& name, const std::vector<std::uint64_t>& got,
                         const std::vector<std::uint64_t>& want, std::size_t n)
{
    if (got.size() < n || want.size() < n) {
        rep.fail(name, "row shorter than " + std::to_string(n));
        return;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (got[i] != want[i]) {
            rep.fail(cell(name, i, got[i], want[i]));
            return;
        }
}

inline std::vector<std::uint64_t> pile_row(std::span<const Position> ps, bool larger)
{
    std::vector<std::uint64_t> out;
    out.reserve(ps.size());
    for (Position p : ps) out.push_back(larger ? p.b : p.a);
    return out;
}

} // namespace detail

/**
 * Three-way agreement on the first n Splythoff P-positions: the retrograde
 * solver, the mex rule, and (y_i - x_i, z_i - y_i) from the letter positions
 * of the Tribonacci word.
 */
inline VerificationReport verify_three_way(std::size_t n = 1000)
{
    return detail::timed("three-way", {{"n", static_cast<std::int64_t>(n)}}, [&](VerificationReport& rep) {
        std::vector<Position> solved = p_positions(GameRules::splythoff(), n);
        MexTable mex = splythoff_columns(n);
        WordStream w(kbonacci_substitution(3), 0);
        auto x = letter_positions(w, 0, n);
        auto y = letter_positions(w, 1, n);
        auto z = letter_positions(w, 2, n);
        std::vector<std::uint64_t> a(n), b(n);
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = y[i] - x[i];
            b[i] = z[i] - y[i];
        }
        detail::compare_rows(rep, "solver A vs mex", detail::pile_row(solved, false), mex.row("A"), n);
        detail::compare_rows(rep, "solver B vs mex", detail::pile_row(solved, true), mex.row("B"), n);
        detail::compare_rows(rep, "y-x vs mex A", a, mex.row("A"), n);
        detail::compare_rows(rep, "z-y vs mex B", b, mex.row("B"), n);
    });
}

/// The 0/1 word with a 1 at every element of the B row.
inline Word nu_word(const MexTable& splythoff, std::size_t length)
{
    const auto& b = splythoff.row("B");
    if (b.empty() || splythoff.row("A").back() < length)
        throw insufficient_terms("A row does not reach the requested length");
    Word out(length, 0);
    for (std::uint64_t v : b)
        if (v <= length) out[v - 1] = 1;
    return out;
}

/// Deleting every 2 from the Tribonacci word gives the B-indicator word.
inline VerificationReport verify_coding(std::size_t letters = 100'000)
{
    return detail::timed("coding", {{"letters", static_cast<std::int64_t>(letters)}}, [&](VerificationReport& rep) {
        Word omega = fixed_point_prefix(kbonacci_substitution(3), 0, letters);
        Word coded = apply_coding(Coding::deletion(3, 2), omega);
        Word nu = nu_word(splythoff_columns(coded.size() + 1), coded.size());
        for (std::size_t i = 0; i < coded.size(); ++i)
            if (coded[i] != nu[i]) {
                rep.fail("letter " + std::to_string(i + 1), "coded " + std::to_string(coded[i]) + ", nu " +
                                                                std::to_string(nu[i]));
                return;
            }
    });
}

/// Difference rows, and double-difference rows with the sum row, partition 1..upto.
inline VerificationReport verify_partitions(unsigned k, std::uint64_t upto = 100'000)
{
    return detail::timed("partitions", {{"k", k}, {"upto", static_cast<std::int64_t>(upto)}},
                         [&](VerificationReport& rep) {
                             for (TableKind kind : {TableKind::difference, TableKind::double_difference}) {
                                 SequenceTable t = table_covering(kind, k, upto);
                                 PartitionReport p = check_partition(t.rows, upto);
                                 if (!p.is_partition)
                                     rep.fail(std::to_string(*p.first_violation),
                                              std::string(kind == TableKind::difference ? "difference"
                                                                                        : "double-difference") +
                                                  (p.violation == PartitionReport::Violation::missing ? " rows miss it"
                                                                                                      : " rows repeat it"));
                             }
                         });
}

/// The k = 4 mex generator reproduces all three tables; X3 = E + X0 + X1 + X2.
inline VerificationReport verify_k4_mex(std::size_t n = 10'000)
{
    return detail::timed("k4-mex", {{"n", static_cast<std::int64_t>(n)}}, [&](VerificationReport& rep) {
        MexTable q = quadribonacci_columns(n);
        SequenceTable x = positions_table(4, n);
        SequenceTable d = difference_table(x);
        SequenceTable dd = double_difference_table(d);
        for (unsigned j = 0; j < 4; ++j)
            detail::compare_rows(rep, "x" + std::to_string(j), q.row("x" + std::to_string(j)), x.rows[j], n);
        for (unsigned j = 0; j < 3; ++j)
            detail::compare_rows(rep, "a" + std::to_string(j), q.row("a" + std::to_string(j)), d.rows[j], n);
        detail::compare_rows(rep, "b0", q.row("b0"), dd.rows[0], n);
        detail::compare_rows(rep, "b1", q.row("b1"), dd.rows[1], n);
        detail::compare_rows(rep, "b2", q.row("b2"), dd.rows[2], n);
        if (auto m = last_row_identity_mismatch(x)) rep.fail("column " + std::to_string(*m + 1), "X3 != E + X0 + X1 + X2");
    });
}

inline VerificationReport verify_row_identity(unsigned k, std::size_t n = 10'000)
{
    return detail::timed("row-identity", {{"k", k}, {"n", static_cast<std::int64_t>(n)}}, [&](VerificationReport& rep) {
        if (auto m = last_row_identity_mismatch(positions_table(k, n)))
            rep.fail("column " + std::to_string(*m + 1), "last row != E + sum of the other rows");
    });
}

/**
 * The 18x18 Splythoff grid against the published table, and the cells that
 * differ from Wythoff's grid against the italic cells.
 */
inline VerificationReport verify_sg_table()
{
    return detail::timed("sg-table", {{"N", reference::sg_table_size}}, [&](VerificationReport& rep) {
        const std::uint32_t n = reference::sg_table_size;
        SGGrid s = sprague_grundy_grid(GameRules::splythoff(), n);
        SGGrid w = sprague_grundy_grid(GameRules::wythoff(), n);
        std::vector<std::string> italic_mismatch;
        for (std::uint32_t r = 0; r < n; ++r)
            for (std::uint32_t c = 0; c < n; ++c) {
                const std::uint32_t m = n - 1 - r;
                const std::string at = "(" + std::to_string(m) + "," + std::to_string(c) + ")";
                if (s.at(m, c) != reference::sg_table[r][c])
                    rep.fail(at, "value " + std::to_string(s.at(m, c)) + ", published " +
                                     std::to_string(reference::sg_table[r][c]));
                const bool differs = s.at(m, c) != w.at(m, c);
                if (differs != (reference::sg_italic[r][c] != 0))
                    italic_mismatch.push_back(at + (differs ? " differs from Wythoff but is upright"
                                                            : " equals Wythoff but is italic"));
            }
        if (rep.passed && !italic_mismatch.empty()) {
            std::string all;
            for (const auto& s2 : italic_mismatch) all += (all.empty() ? "" : "; ") + s2;
            rep.fail(italic_mismatch.front(), "values match; italic cells disagree: " + all);
        }
    });
}

inline VerificationReport verify_characterization(std::uint32_t bound = 300)
{
    return detail::timed("characterization", {{"bound", bound}}, [&](VerificationReport& rep) {
        CharacterizationReport c = np_characterization_check(GameRules::splythoff(), bound);
        if (!c.holds) rep.fail(to_string(*c.counterexample), c.detail);
    });
}

/**
 * Structural facts on the k-bonacci tables and words: separators and
 * palindromic neighbourhoods in the word, the +/- 2^j shift relations
 * between consecutive rows, disjointness, minimal steps, the word lengths
 * |theta^j(0)| = 2^j, and the move property for Splythoff moves with a + b <= 60.
 */
inline VerificationReport verify_structure(unsigned k, std::size_t n = 20'000)
{
    return detail::timed("structure", {{"k", k}, {"n", static_cast<std::int64_t>(n)}}, [&](VerificationReport& rep) {
        check_table_k(k);
        const Substitution sub = kbonacci_substitution(k);
        {
            Word w{0};
            for (unsigned j = 0; j < k; ++j) {
                if (w.size() != (std::size_t{1} << j)) rep.fail("|theta^" + std::to_string(j) + "(0)|");
                w = sub.expand(w);
            }
        }
        std::vector<Word> pw;
        for (unsigned j = 0; j < k; ++j) {
            pw.push_back(prefix_word(k, j));
            if (!std::equal(pw[j].begin(), pw[j].end(), pw[j].rbegin())) rep.fail("w_" + std::to_string(j), "not a palindrome");
            if (j > 0) {
                Word next = pw[j - 1];
                next.push_back(static_cast<Letter>(j - 1));
                next.insert(next.end(), pw[j - 1].begin(), pw[j - 1].end());
                if (next != pw[j]) rep.fail("w_" + std::to_string(j), "w_{j} != w_{j-1} (j-1) w_{j-1}");
            }
        }
        const std::size_t len = std::max<std::size_t>(n, (std::size_t{1} << k) * 100);
        Word omega = fixed_point_prefix(sub, 0, len);
        for (std::size_t i = 1; i + 1 < omega.size(); ++i) {
            const Letter j = omega[i];
            if (j == 0) continue;
            if (omega[i - 1] != 0 || omega[i + 1] != 0) rep.fail("letter " + std::to_string(i + 1), "non-zero letter not between zeros");
            const Word& wj = pw[j];
            if (i >= wj.size() && i + wj.size() < omega.size()) {
                bool before = std::equal(wj.begin(), wj.end(), omega.begin() + static_cast<std::ptrdiff_t>(i - wj.size()));
                bool after = std::equal(wj.begin(), wj.end(), omega.begin() + static_cast<std::ptrdiff_t>(i + 1));
                if (!before || !after) rep.fail("letter " + std::to_string(i + 1), "not surrounded by w_j");
            }
        }

        SequenceTable x = positions_table(k, n);
        SequenceTable d = difference_table(x);
        SequenceTable dd = double_difference_table(d);
        auto shift = [&](const std::string& what, const std::vector<std::uint64_t>& lower,
                         const std::vector<std::uint64_t>& upper, std::uint64_t s, bool cover) {
            ShiftRelationReport r = check_shift_relation(lower, upper, s, cover);
            if (!r.holds) rep.fail(what + " at " + std::to_string(*r.counterexample), r.detail);
        };
        for (unsigned j = 0; j + 1 < k; ++j)
            shift("positions row " + std::to_string(j), x.rows[j], x.rows[j + 1], std::uint64_t{1} << j, true);
        for (unsigned j = 0; j + 2 < k; ++j)
            shift("difference row " + std::to_string(j), d.rows[j], d.rows[j + 1], std::uint64_t{1} << j, true);
        for (unsigned j = 0; j + 3 < k; ++j)
            shift("double-difference row " + std::to_string(j), dd.rows[j], dd.rows[j + 1], std::uint64_t{1} << j, true);
        // the sum row shifted by 2^{k-3} lands in the last difference row, which it does not cover
        shift("sum row", dd.rows[k - 3], dd.rows[k - 2], std::uint64_t{1} << (k - 3), false);

        const std::uint64_t horizon = 100'000;
        SequenceTable dc = table_covering(TableKind::difference, k, horizon);
        if (auto v = first_common_value(dc.rows, horizon)) rep.fail(std::to_string(*v), "difference rows overlap");
        SequenceTable ddc = table_covering(TableKind::double_difference, k, horizon);
        std::vector<std::vector<std::uint64_t>> drows(ddc.rows.begin(), ddc.rows.end() - 1);
        if (auto v = first_common_value(drows, horizon)) rep.fail(std::to_string(*v), "double-difference rows overlap");

        // minimal step in X^j is 2^j, taken exactly at columns headed k-1
        for (unsigned j = 0; j < k; ++j)
            for (std::size_t m = 0; m + 1 < x.columns(); ++m) {
                std::uint64_t step = x.rows[j][m + 1] - x.rows[j][m];
                bool minimal = step == (std::uint64_t{1} << j);
                if (step < (std::uint64_t{1} << j) || minimal != (x.header[m] == k - 1)) {
                    rep.fail("X" + std::to_string(j) + " column " + std::to_string(m + 1), "minimal step misplaced");
                    break;
                }
            }

        // every Splythoff move keeps a coordinate, the difference, or the sum
        const GameRules rules = GameRules::splythoff();
        for (std::uint32_t s = 0; s <= 60; ++s)
            for (std::uint32_t a = 0; 2 * a <= s; ++a) {
                Position from(a, s - a);
                for_each_move(rules, from, [&](Position to) {
                    bool shared = from.a == to.a || from.a == to.b || from.b == to.a || from.b == to.b ||
                                  from.delta() == to.delta() || from.delta() == to.sigma() ||
                                  from.sigma() == to.delta() || from.sigma() == to.sigma();
                    if (!shared) rep.fail(to_string(from) + " -> " + to_string(to), "move shares no value");
                });
            }
    });
}

/**
 * Skolem-Fraenkel conditions and complementarity for every (a, b) with
 * a <= max_a and 0 < b <= a, and agreement of the a-Wythoff solver with the
 * homogeneous pair for a <= solver_max_a.
 */
inline VerificationReport verify_beatty(std::int64_t max_a = 5, std::uint64_t upto = 100'000,
                                        std::uint32_t solver_max_a = 4, std::size_t solver_n = 500)
{
    return detail::timed("beatty", {{"max_a", max_a}, {"upto", static_cast<std::int64_t>(upto)},
                                    {"solver_n", static_cast<std::int64_t>(solver_n)}},
                         [&](VerificationReport& rep) {
                             for (std::int64_t a = 1; a <= max_a; ++a)
                                 for (std::int64_t b = 1; b <= a; ++b) {
                                     const std::string at = "a=" + std::to_string(a) + " b=" + std::to_string(b);
                                     BeattyPair pair = wythoff_ab_params(a, b);
                                     if (!skolem_fraenkel_check(pair)) rep.fail(at, "Skolem-Fraenkel conditions fail");
                                     MexTable t = pair.rows(static_cast<std::size_t>(upto));
                                     PartitionReport p = check_partition(t.rows, upto);
                                     if (!p.is_partition) rep.fail(at + " value " + std::to_string(*p.first_violation),
                                                                   "A and B do not partition");
                                 }
                             for (std::uint32_t a = 1; a <= solver_max_a; ++a) {
                                 GameRules rules = a == 1 ? GameRules::wythoff() : GameRules::a_wythoff(a);
                                 std::vector<Position> ps = p_positions(rules, solver_n);
                                 MexTable t = wythoff_ab_params(a, a).rows(solver_n);
                                 const std::string at = "a=" + std::to_string(a) + " ";
                                 detail::compare_rows(rep, at + "A", detail::pile_row(ps, false), t.row("A"), solver_n);
                                 detail::compare_rows(rep, at + "B", detail::pile_row(ps, true), t.row("B"), solver_n);
                             }
                         });
}

/**
 * Evidence for the permutation observations on a size x size Splythoff grid:
 * no row or column repeats a value <= cap, diagonal (n, n+3) has no 0 and
 * (n, n+4) has no 1.
 */
inline VerificationReport verify_sg_evidence(std::uint32_t size = 512, std::uint32_t cap = 100, unsigned threads = 1)
{
    return detail::timed("sg-evidence", {{"N", size}, {"cap", cap}}, [&](VerificationReport& rep) {
        SGGrid g = sprague_grundy_grid(GameRules::splythoff(), size, threads);
        for (std::uint32_t i = 0; i < size; ++i) {
            LineReport r = sg_permutation_check(g, LineAxis::row, i, cap);
            if (!r.duplicates.empty())
                rep.fail("row " + std::to_string(i) + " value " + std::to_string(r.duplicates.front().value),
                         "repeated at columns " + std::to_string(r.duplicates.front().first) + " and " +
                             std::to_string(r.duplicates.front().second));
            LineReport c = sg_permutation_check(g, LineAxis::column, i, cap);
            if (!c.duplicates.empty()) rep.fail("column " + std::to_string(i), "repeated value");
        }
        if (size > 3 && sg_permutation_check(g, LineAxis::diagonal, 3, 1).contains(0))
            rep.fail("diagonal 3", "contains 0");
        if (size > 4 && sg_permutation_check(g, LineAxis::diagonal, 4, 1).contains(1))
            rep.fail("diagonal 4", "contains 1");
    });
}

/**
 * a-Splythoff step codes: a = 2 follows the Tribonacci word with steps
 * (1,5), (2,4), (1,3); a = 3 follows 0 -> 01, 1 -> 2, 2 -> 01; a = 4
 * starts with the published code.
 */
inline VerificationReport verify_experiments(std::size_t n = 501)
{
    return detail::timed("experiments", {{"n", static_cast<std::int64_t>(n)}}, [&](VerificationReport& rep) {
        StepCode two = step_code(GameRules::a_splythoff(2), n);
        const std::vector<std::pair<std::int64_t, std::int64_t>> tri_steps{{1, 5}, {2, 4}, {1, 3}};
        if (two.alphabet != tri_steps) rep.fail("a=2 alphabet", std::to_string(two.alphabet.size()) + " steps");
        FixpointReport f2 = check_substitution_fixpoint(two.code, kbonacci_substitution(3));
        if (!f2.fully_consistent())
            rep.fail("a=2 letter " + std::to_string(f2.consistent_prefix_length + 1), "leaves the Tribonacci word");

        StepCode three = step_code(GameRules::a_splythoff(3), n);
        FixpointReport f3 = check_substitution_fixpoint(three.code, Substitution::parse("0:01,1:2,2:01"));
        if (!f3.fully_consistent())
            rep.fail("a=3 letter " + std::to_string(f3.consistent_prefix_length + 1), "leaves the fixed point");

        const std::string want = reference::four_splythoff_code;
        StepCode four = step_code(GameRules::a_splythoff(4), want.size() + 1);
        std::string got;
        for (std::uint32_t c : four.code) got += c < 10 ? static_cast<char>('0' + c) : '?';
        if (got != want) {
            std::size_t i = 0;
            while (got[i] == want[i]) ++i;
            rep.fail("a=4 letter " + std::to_string(i + 1), "computed " + got + ", published " + want);
        }
    });
}

} // namespace splythoff
