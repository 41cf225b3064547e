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

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "splythoff/format.hpp"
#include "splythoff/games.hpp"
#include "splythoff/reference.hpp"
#include "test_util.hpp"

using namespace splythoff;
using Row = std::vector<std::uint64_t>;

namespace {

// Oracle: move rules written out on ordered piles with plain recursion.
struct BruteSG {
    unsigned spread;
    bool splits;
    std::map<std::pair<int, int>, int> memo;

    std::set<std::pair<int, int>> options(int m, int n) const
    {
        std::set<std::pair<int, int>> out;
        for (int t = 1; t <= m; ++t) out.insert({m - t, n});
        for (int t = 1; t <= n; ++t) out.insert({m, n - t});
        for (int x = 1; x <= m; ++x)
            for (int y = 1; y <= n; ++y) {
                if (std::abs(x - y) >= static_cast<int>(spread)) continue;
                int l = m - x, r = n - y;
                out.insert({l, r});
                bool one_empty = (l == 0) != (r == 0);
                int lost_by_emptied = l == 0 ? x : y;
                int lost_by_other = l == 0 ? y : x;
                if (splits && one_empty && lost_by_emptied <= lost_by_other)
                    for (int c = 1; c < l + r; ++c) out.insert({c, l + r - c});
            }
        return out;
    }

    int operator()(int m, int n)
    {
        auto key = std::pair{m, n};
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::set<int> seen;
        for (auto [u, v] : options(m, n)) seen.insert((*this)(u, v));
        int g = 0;
        while (seen.count(g)) ++g;
        return memo[key] = g;
    }
};

std::vector<GameRules> all_families()
{
    std::vector<GameRules> out{GameRules::wythoff(), GameRules::splythoff()};
    for (std::uint32_t a = 2; a <= 4; ++a) {
        out.push_back(GameRules::a_wythoff(a));
        out.push_back(GameRules::a_splythoff(a));
    }
    return out;
}

TextTable splythoff_solver_table(std::size_t n)
{
    std::vector<Position> ps = p_positions(GameRules::splythoff(), n);
    TextTable t;
    t.names = {"Delta", "A", "B", "Sigma"};
    t.rows.assign(4, {});
    for (Position p : ps) {
        t.rows[0].push_back(p.delta());
        t.rows[1].push_back(p.a);
        t.rows[2].push_back(p.b);
        t.rows[3].push_back(p.sigma());
    }
    return t;
}

} // namespace

TEST(Rules, Families)
{
    EXPECT_FALSE(GameRules::wythoff().splits());
    EXPECT_TRUE(GameRules::splythoff().splits());
    EXPECT_TRUE(GameRules::a_splythoff(3).splits());
    EXPECT_FALSE(GameRules::a_wythoff(3).splits());
    EXPECT_EQ(Position(7, 4), Position(4, 7));
    EXPECT_EQ(to_string(Position(7, 4)), "(4,7)");
}

TEST(Moves, Examples)
{
    auto has = [](const std::vector<Position>& v, Position p) { return std::find(v.begin(), v.end(), p) != v.end(); };
    auto s47 = legal_moves(GameRules::splythoff(), {4, 7});
    EXPECT_TRUE(has(s47, {1, 2}));
    EXPECT_FALSE(has(legal_moves(GameRules::wythoff(), {4, 7}), {1, 2}));
    EXPECT_FALSE(has(legal_moves(GameRules::splythoff(), {3, 5}), {0, 0}));
    EXPECT_TRUE(legal_moves(GameRules::splythoff(), {0, 0}).empty());
    // a = 2: taking 3 and 2 from (3,9) empties the pile that lost more, so 7 may not be split
    auto s39 = legal_moves(GameRules::a_splythoff(2), {3, 9});
    EXPECT_FALSE(has(s39, {2, 5}));
    EXPECT_TRUE(has(s39, {2, 4}));
    EXPECT_TRUE(std::is_sorted(s47.begin(), s47.end()));
    EXPECT_EQ(std::adjacent_find(s47.begin(), s47.end()), s47.end());
}

TEST(Moves, MatchOracleEverywhere)
{
    for (const GameRules& rules : all_families()) {
        BruteSG oracle{rules.a, rules.splits(), {}};
        for (int m = 0; m < 14; ++m)
            for (int n = m; n < 14; ++n) {
                std::set<Position> want;
                for (auto [u, v] : oracle.options(m, n)) want.insert(Position(u, v));
                auto got = legal_moves(rules, Position(m, n));
                ASSERT_EQ(std::set<Position>(got.begin(), got.end()), want) << rules.name() << " " << m << "," << n;
            }
    }
}

TEST(SGGrid, MatchesBruteForce)
{
    for (const GameRules& rules : all_families()) {
        BruteSG oracle{rules.a, rules.splits(), {}};
        SGGrid g = sprague_grundy_grid(rules, 22);
        for (std::uint32_t m = 0; m < 22; ++m)
            for (std::uint32_t n = 0; n < 22; ++n)
                ASSERT_EQ(g.at(m, n), static_cast<std::uint32_t>(oracle(m, n))) << rules.name() << " " << m << "," << n;
    }
}

TEST(SGGrid, KnownValues)
{
    SGGrid g = sprague_grundy_grid(GameRules::splythoff(), 64);
    for (std::uint32_t k = 0; k < 64; ++k) {
        EXPECT_EQ(g.at(0, k), k);
        EXPECT_EQ(g.at(k, 0), k);
    }
    EXPECT_EQ(g.at(1, 1), 2u);
    EXPECT_EQ(g.at(1, 2), 0u);
    EXPECT_EQ(g.at(3, 5), 0u);
    EXPECT_THROW(sprague_grundy_grid(GameRules::splythoff(), 0), invalid_parameter);
    EXPECT_THROW(sprague_grundy_grid(GameRules::splythoff(), 1 << 20), resource_error);
}

TEST(SGGrid, ThreadCountDoesNotMatter)
{
    SGGrid one = sprague_grundy_grid(GameRules::splythoff(), 160, 1);
    SGGrid four = sprague_grundy_grid(GameRules::splythoff(), 160, 4);
    EXPECT_EQ(one.values, four.values);
}

TEST(SGGrid, PublishedTableValues)
{
    const std::uint32_t n = reference::sg_table_size;
    SGGrid s = sprague_grundy_grid(GameRules::splythoff(), n);
    std::ostringstream os;
    for (std::uint32_t r = 0; r < n; ++r) {
        for (std::uint32_t c = 0; c < n; ++c) os << (c ? "\t" : "") << s.at(n - 1 - r, c);
        os << '\n';
    }
    EXPECT_EQ(os.str(), read_golden("sg_splythoff_18.tsv"));
}

TEST(SGGrid, ItalicCellsDisagreeAtTwoMisprints)
{
    // italic marks the cells that differ from Wythoff's grid; the published
    // marks are wrong at (5,10), which equals Wythoff, and (5,16), which does not
    const std::uint32_t n = reference::sg_table_size;
    SGGrid s = sprague_grundy_grid(GameRules::splythoff(), n);
    SGGrid w = sprague_grundy_grid(GameRules::wythoff(), n);
    std::set<std::pair<std::uint32_t, std::uint32_t>> wrong;
    for (std::uint32_t r = 0; r < n; ++r)
        for (std::uint32_t c = 0; c < n; ++c) {
            const std::uint32_t m = n - 1 - r;
            if ((s.at(m, c) != w.at(m, c)) != (reference::sg_italic[r][c] != 0)) wrong.insert({m, c});
        }
    EXPECT_EQ(wrong, (std::set<std::pair<std::uint32_t, std::uint32_t>>{{5, 10}, {5, 16}}));
    EXPECT_EQ(s.at(5, 10), w.at(5, 10));
    EXPECT_NE(s.at(5, 16), w.at(5, 16));
}

TEST(PPositions, ReverseMarkingMatchesZeros)
{
    for (const GameRules& rules : all_families()) {
        const std::uint32_t n = 90;
        SGGrid g = sprague_grundy_grid(rules, n);
        std::set<Position> zeros;
        for (std::uint32_t m = 0; m < n; ++m)
            for (std::uint32_t q = m; q < n; ++q)
                if (g.at(m, q) == 0 && q > 0) zeros.insert(Position(m, q));
        auto marked = p_positions_on_board(rules, n);
        EXPECT_EQ(std::set<Position>(marked.begin(), marked.end()), zeros) << rules.name();
        for (std::size_t i = 1; i < marked.size(); ++i) ASSERT_LE(marked[i - 1].sigma(), marked[i].sigma());
    }
}

TEST(PPositions, BoardRegrowthIsComplete)
{
    for (const GameRules& rules : all_families()) {
        auto small = p_positions(rules, 150);
        auto big = p_positions_on_board(rules, 4096);
        std::sort(big.begin(), big.end());
        big.resize(150);
        EXPECT_EQ(small, big) << rules.name();
    }
    EXPECT_TRUE(p_positions(GameRules::splythoff(), 0).empty());
    EXPECT_THROW(p_positions(GameRules::splythoff(), 5000, 128), cap_exceeded);
}

TEST(PPositions, PublishedTables)
{
    EXPECT_EQ(to_tsv(pile_table(p_positions(GameRules::wythoff(), 12))), read_golden("table1_wythoff.tsv"));
    EXPECT_EQ(to_tsv(pile_table(p_positions(GameRules::a_wythoff(2), 12))), read_golden("table2_2wythoff.tsv"));
    EXPECT_EQ(to_tsv(splythoff_solver_table(12)), read_golden("table4_splythoff.tsv"));
    EXPECT_EQ(to_tsv(step_code_table(GameRules::a_splythoff(2), 17)), read_golden("table8_2splythoff.tsv"));
    EXPECT_EQ(to_tsv(step_code_table(GameRules::a_splythoff(3), 16)), read_golden("table9_3splythoff.tsv"));
    EXPECT_EQ(to_tsv(step_code_table(GameRules::a_splythoff(4), 17)), read_golden("table10_4splythoff.tsv"));
}

TEST(PPositions, SolverAgreesWithMexColumns)
{
    TextTable t = splythoff_solver_table(2000);
    MexTable mex = splythoff_columns(2000);
    for (const char* name : {"Delta", "A", "B", "Sigma"}) EXPECT_EQ(t.row(name), mex.row(name)) << name;
}

TEST(Characterization, HoldsForSplythoff)
{
    CharacterizationReport r = np_characterization_check(GameRules::splythoff(), 150);
    EXPECT_TRUE(r.holds) << r.detail;
    EXPECT_GT(r.positions_checked, 0u);
}

TEST(Lines, PermutationObservations)
{
    SGGrid g = sprague_grundy_grid(GameRules::splythoff(), 200);
    for (std::uint32_t i = 0; i < 200; i += 7) {
        EXPECT_TRUE(sg_permutation_check(g, LineAxis::row, i, 60).duplicates.empty()) << i;
        EXPECT_TRUE(sg_permutation_check(g, LineAxis::column, i, 60).duplicates.empty()) << i;
    }
    LineReport row0 = sg_permutation_check(g, LineAxis::row, 0, 199);
    EXPECT_TRUE(row0.missing.empty());
    EXPECT_FALSE(sg_permutation_check(g, LineAxis::diagonal, 3, 5).contains(0));
    EXPECT_FALSE(sg_permutation_check(g, LineAxis::diagonal, 4, 5).contains(1));
    EXPECT_TRUE(sg_permutation_check(g, LineAxis::diagonal, 1, 5).contains(0));
    LineReport refl = sg_permutation_check(g, LineAxis::reflected_diagonal, 3, 5);
    EXPECT_EQ(refl.values.size(), 3u + 197u);
    EXPECT_EQ(refl.values[0], g.at(3, 0));
    EXPECT_THROW(sg_permutation_check(g, LineAxis::row, 200, 5), invalid_parameter);
}

TEST(Lines, DuplicatesAreReported)
{
    SGGrid g;
    g.size = 3;
    g.values = {0, 1, 1, 1, 2, 0, 1, 0, 2};
    LineReport r = sg_permutation_check(g, LineAxis::row, 0, 3);
    ASSERT_EQ(r.duplicates.size(), 1u);
    EXPECT_EQ(r.duplicates[0].value, 1u);
    EXPECT_EQ(r.duplicates[0].first, 1u);
    EXPECT_EQ(r.duplicates[0].second, 2u);
    EXPECT_EQ(r.missing, (std::vector<std::uint32_t>{2, 3}));
}

TEST(StepCodes, EncodeDecode)
{
    std::vector<Position> ps{{1, 2}, {3, 5}, {4, 7}, {6, 10}};
    StepCode sc = step_code(ps);
    EXPECT_EQ(sc.code, (std::vector<std::uint32_t>{0, 1, 0}));
    EXPECT_EQ(sc.alphabet, (std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 3}, {1, 2}}));
    EXPECT_EQ(sc.code_string(), "010");
    EXPECT_EQ(decode(sc), ps);
    EXPECT_THROW(step_code(std::vector<Position>{{1, 2}}), invalid_parameter);

    StepCode four = step_code(GameRules::a_splythoff(4), 200);
    EXPECT_EQ(decode(four), p_positions(GameRules::a_splythoff(4), 200));
}

TEST(StepCodes, SmallSpreadsFollowSubstitutions)
{
    StepCode two = step_code(GameRules::a_splythoff(2), 400);
    EXPECT_EQ(two.first, Position(1, 3));
    EXPECT_EQ(two.alphabet, (std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 5}, {2, 4}, {1, 3}}));
    EXPECT_TRUE(check_substitution_fixpoint(two.code, kbonacci_substitution(3)).fully_consistent());

    StepCode three = step_code(GameRules::a_splythoff(3), 400);
    EXPECT_TRUE(check_substitution_fixpoint(three.code, Substitution::parse("0:01,1:2,2:01")).fully_consistent());
    EXPECT_FALSE(check_substitution_fixpoint(three.code, kbonacci_substitution(3)).fully_consistent());
}

TEST(StepCodes, FourSplythoffDiffersFromPublishedAtLetter18)
{
    StepCode four = step_code(GameRules::a_splythoff(4), 31);
    const std::string published = reference::four_splythoff_code;
    std::string got = four.code_string();
    ASSERT_EQ(got.size(), published.size());
    EXPECT_EQ(got.substr(0, 17), published.substr(0, 17));
    EXPECT_EQ(got[17], '5');
    EXPECT_EQ(published[17], '3');
    EXPECT_EQ(got.substr(18), published.substr(18));
    auto ps = decode(four);
    EXPECT_EQ(ps[18], Position(22, 136));
}

TEST(Fixpoint, Reports)
{
    Substitution fib = kbonacci_substitution(2);
    auto r = check_substitution_fixpoint(parse_word("01001011"), fib);
    EXPECT_TRUE(r.first_letter_ok);
    EXPECT_EQ(r.consistent_prefix_length, 7u);
    EXPECT_EQ(r.word_length, 8u);
    EXPECT_FALSE(r.fully_consistent());
    EXPECT_FALSE(check_substitution_fixpoint(parse_word("10"), fib).first_letter_ok);
    EXPECT_TRUE(check_substitution_fixpoint(Word{}, fib).fully_consistent());
    EXPECT_TRUE(check_substitution_fixpoint(std::vector<std::uint32_t>{0, 1, 0, 0, 1}, fib).fully_consistent());
    EXPECT_FALSE(check_substitution_fixpoint(std::vector<std::uint32_t>{7}, fib).first_letter_ok);
}

TEST(Export, CsvOrientation)
{
    SGGrid g = sprague_grundy_grid(GameRules::wythoff(), 3);
    EXPECT_EQ(sg_to_csv(g), "0,1,2\n1,2,0\n2,0,1\n");
    EXPECT_EQ(sg_to_csv(g, true), "2,0,1\n1,2,0\n0,1,2\n");
}

TEST(Export, BinaryRoundTrip)
{
    SGGrid g = sprague_grundy_grid(GameRules::a_splythoff(3), 40);
    std::string bytes = sg_to_binary(g);
    EXPECT_EQ(bytes.substr(0, 4), "SGG1");
    EXPECT_EQ(bytes.size(), 8u + 4u * 40u * 40u);
    EXPECT_EQ(static_cast<unsigned char>(bytes[4]), 40u);
    SGGrid back = sg_from_binary(bytes);
    EXPECT_EQ(back.size, g.size);
    EXPECT_EQ(back.values, g.values);
    EXPECT_THROW(sg_from_binary("SGG2xxxx"), invalid_parameter);
    EXPECT_THROW(sg_from_binary(bytes.substr(0, bytes.size() - 1)), invalid_parameter);
}
