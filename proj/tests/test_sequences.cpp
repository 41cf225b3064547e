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

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <random>
#include <set>

#include "splythoff/format.hpp"
#include "splythoff/mex.hpp"
#include "splythoff/quadratic.hpp"
#include "splythoff/sequences.hpp"
#include "splythoff/tables.hpp"
#include "test_util.hpp"

using namespace splythoff;
using Row = std::vector<std::uint64_t>;
using big = boost::multiprecision::cpp_bin_float_100;

namespace {

// Oracle: floor of (p + q sqrt d)/r in 100-digit floating point.
std::int64_t float_floor(std::int64_t p, std::int64_t q, std::int64_t d, std::int64_t r)
{
    big v = (big(p) + big(q) * boost::multiprecision::sqrt(big(d))) / big(r);
    return static_cast<std::int64_t>(boost::multiprecision::floor(v));
}

// Oracle: isqrt by Newton iteration on unsigned 64-bit values.
std::uint64_t isqrt(std::uint64_t n)
{
    std::uint64_t x = n, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

// floor(k * (2 - a + sqrt(a^2 + 4)) / 2) without any field arithmetic.
std::uint64_t awythoff_lower(std::uint64_t a, std::uint64_t k)
{
    std::int64_t base = static_cast<std::int64_t>(k) * (2 - static_cast<std::int64_t>(a));
    std::int64_t root = static_cast<std::int64_t>(isqrt(k * k * (a * a + 4)));
    std::int64_t s = base + root;
    return static_cast<std::uint64_t>(s >= 0 ? s / 2 : -((-s + 1) / 2));
}

// Oracle: mex rules with ordered sets.
std::uint64_t set_mex(const std::set<std::uint64_t>& s)
{
    std::uint64_t m = 1;
    while (s.count(m)) ++m;
    return m;
}

} // namespace

TEST(Mex, Basics)
{
    Row none;
    EXPECT_EQ(mex(none), 0u);
    EXPECT_EQ(mex(none, MexDomain::positive), 1u);
    Row s{1, 2, 4};
    EXPECT_EQ(mex(s, MexDomain::positive), 3u);
    EXPECT_EQ(mex(s), 0u);
    Row table4{1, 2, 3, 8};
    EXPECT_EQ(mex(table4, MexDomain::positive), 4u);
}

TEST(Mex, TrackerMatchesSet)
{
    std::mt19937_64 rng(7);
    MexTracker t;
    std::set<std::uint64_t> s;
    for (int i = 0; i < 2000; ++i) {
        std::uint64_t v = 1 + rng() % 500;
        t.insert(v);
        s.insert(v);
        ASSERT_EQ(t.next(), set_mex(s));
        ASSERT_TRUE(t.contains(v));
    }
}

TEST(WythoffColumns, Table1)
{
    MexTable t = wythoff_columns(12);
    EXPECT_EQ(t.row("A"), (Row{1, 3, 4, 6, 8, 9, 11, 12, 14, 16, 17, 19}));
    EXPECT_EQ(t.row("B"), (Row{2, 5, 7, 10, 13, 15, 18, 20, 23, 26, 28, 31}));
    EXPECT_EQ(to_tsv(t.text()), read_golden("table1_wythoff.tsv"));
    MexTable one = wythoff_columns(1);
    EXPECT_EQ(one.row("A"), Row{1});
    EXPECT_EQ(one.row("B"), Row{2});
}

TEST(WythoffColumns, MatchesGoldenRatioFloors)
{
    MexTable t = wythoff_columns(1000);
    for (std::uint64_t k = 1; k <= 1000; ++k) {
        ASSERT_EQ(t.row("A")[k - 1], awythoff_lower(1, k));
        ASSERT_EQ(t.row("B")[k - 1], awythoff_lower(1, k) + k);
    }
}

TEST(SplythoffColumns, Table4)
{
    MexTable t = splythoff_columns(12);
    EXPECT_EQ(t.row("Delta"), (Row{1, 2, 4, 5, 6, 7, 9, 10, 11, 13, 14, 15}));
    EXPECT_EQ(t.row("A"), (Row{1, 3, 4, 6, 7, 9, 10, 12, 14, 15, 17, 18}));
    EXPECT_EQ(t.row("B"), (Row{2, 5, 8, 11, 13, 16, 19, 22, 25, 28, 31, 33}));
    EXPECT_EQ(t.row("Sigma"), (Row{3, 8, 12, 17, 20, 25, 29, 34, 39, 43, 48, 51}));
    EXPECT_EQ(to_tsv(t.text()), read_golden("table4_splythoff.tsv"));
    MexTable one = splythoff_columns(1);
    EXPECT_EQ((Row{one.rows[0][0], one.rows[1][0], one.rows[2][0], one.rows[3][0]}), (Row{1, 1, 2, 3}));
}

TEST(SplythoffColumns, MatchesSetOracle)
{
    std::set<std::uint64_t> ab, ds;
    MexTable t = splythoff_columns(3000);
    for (std::size_t i = 0; i < 3000; ++i) {
        std::uint64_t d = set_mex(ds), a = set_mex(ab), b = a + d, s = a + b;
        ASSERT_EQ(t.row("Delta")[i], d);
        ASSERT_EQ(t.row("A")[i], a);
        ASSERT_EQ(t.row("B")[i], b);
        ASSERT_EQ(t.row("Sigma")[i], s);
        ab.insert({a, b});
        ds.insert({d, s});
    }
}

TEST(SplythoffColumns, PartitionsAndIdentities)
{
    MexTable t = splythoff_columns(100'000);
    std::vector<Row> ab{t.row("A"), t.row("B")};
    std::vector<Row> ds{t.row("Delta"), t.row("Sigma")};
    EXPECT_TRUE(check_partition(ab, 100'000).is_partition);
    EXPECT_TRUE(check_partition(ds, 100'000).is_partition);
    for (std::size_t i = 0; i < t.columns(); ++i) {
        ASSERT_EQ(t.row("B")[i], t.row("A")[i] + t.row("Delta")[i]);
        ASSERT_EQ(t.row("Sigma")[i], t.row("A")[i] + t.row("B")[i]);
        if (i) {
            ASSERT_GT(t.row("Delta")[i], t.row("Delta")[i - 1]);
        }
    }
}

TEST(SplythoffColumns, EqualTribonacciTables)
{
    MexTable t = splythoff_columns(1000);
    SequenceTable d = difference_table(3, 1000);
    SequenceTable dd = double_difference_table(d);
    EXPECT_EQ(t.row("A"), d.rows[0]);
    EXPECT_EQ(t.row("B"), d.rows[1]);
    EXPECT_EQ(t.row("Delta"), dd.rows[0]);
    EXPECT_EQ(t.row("Sigma"), dd.rows[1]);
}

TEST(Quadribonacci, ReproducesTables5To7)
{
    const std::size_t n = 10'000;
    MexTable q = quadribonacci_columns(n);
    SequenceTable x = positions_table(4, n);
    SequenceTable d = difference_table(x);
    SequenceTable dd = double_difference_table(d);
    for (unsigned j = 0; j < 4; ++j) EXPECT_EQ(q.row("x" + std::to_string(j)), x.rows[j]);
    for (unsigned j = 0; j < 3; ++j) EXPECT_EQ(q.row("a" + std::to_string(j)), d.rows[j]);
    EXPECT_EQ(q.row("b0"), dd.rows[0]);
    EXPECT_EQ(q.row("b1"), dd.rows[1]);
    EXPECT_EQ(q.row("b2"), dd.rows[2]);
    for (std::size_t i = 0; i < n; ++i)
        ASSERT_EQ(q.row("x3")[i], q.row("x0")[i] + q.row("x1")[i] + q.row("x2")[i] + i + 1);
}

TEST(Quadribonacci, PublishedPrefixes)
{
    MexTable q = quadribonacci_columns(16);
    EXPECT_EQ(Row(q.row("x0").begin(), q.row("x0").begin() + 4), (Row{1, 3, 5, 7}));
    EXPECT_EQ(Row(q.row("x3").begin(), q.row("x3").begin() + 4), (Row{8, 23, 37, 52}));
    EXPECT_EQ(Row(q.row("a0").begin(), q.row("a0").begin() + 5), (Row{1, 3, 5, 7, 8}));
    EXPECT_EQ(Row(q.row("a1").begin(), q.row("a1").begin() + 5), (Row{2, 6, 9, 13, 16}));
    EXPECT_EQ(Row(q.row("b0").begin(), q.row("b0").begin() + 5), (Row{1, 3, 4, 6, 8}));
    EXPECT_EQ(Row(q.row("b2").begin(), q.row("b2").begin() + 5), (Row{7, 20, 32, 45, 55}));
}

TEST(Quadratic, CanonicalForm)
{
    Quadratic a(2, 2, 8, 4);  // (2 + 2 sqrt 8)/4 = (1 + 2 sqrt 2)/2
    EXPECT_EQ(a.p(), 1);
    EXPECT_EQ(a.q(), 2);
    EXPECT_EQ(a.d(), 2);
    EXPECT_EQ(a.r(), 2);
    Quadratic neg(1, 1, 5, -2);
    EXPECT_EQ(neg.r(), 2);
    EXPECT_EQ(neg.p(), -1);
    EXPECT_THROW(Quadratic(1, 1, 4, 1), invalid_parameter);
    EXPECT_THROW(Quadratic(1, 1, 5, 0), invalid_parameter);
    EXPECT_TRUE(Quadratic::rational(6, 4) == Quadratic::rational(3, 2));
}

TEST(Quadratic, ArithmeticIdentities)
{
    Quadratic phi = Quadratic::golden_ratio();
    Quadratic one = Quadratic::rational(1);
    EXPECT_EQ(phi * phi, phi + 1);
    EXPECT_EQ(phi.inverse(), phi - 1);
    EXPECT_EQ(phi.inverse() + (phi * phi).inverse(), one);
    Quadratic r2(0, 1, 2, 1);
    EXPECT_EQ(r2.inverse() + (r2 + 2).inverse(), one);
    EXPECT_LT(phi, Quadratic::rational(2));
    EXPECT_GT(phi, Quadratic::rational(1));
    EXPECT_EQ((-phi).floor(), -2);
    EXPECT_EQ(phi.ceil(), 2);
    EXPECT_THROW(phi + Quadratic(0, 1, 2, 1), invalid_parameter);
    EXPECT_THROW(Quadratic::rational(0).inverse(), std::domain_error);
}

TEST(Quadratic, FloorMatchesHighPrecision)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20000; ++i) {
        std::int64_t p = static_cast<std::int64_t>(rng() % 2'000'001) - 1'000'000;
        std::int64_t q = static_cast<std::int64_t>(rng() % 20'001) - 10'000;
        std::int64_t d = 2 + static_cast<std::int64_t>(rng() % 1000);
        std::int64_t r = 1 + static_cast<std::int64_t>(rng() % 1000);
        std::int64_t s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(d)));
        if (s * s == d || (s + 1) * (s + 1) == d) continue;
        Quadratic x(p, q, d, r);
        ASSERT_EQ(x.floor(), float_floor(p, q, d, r)) << p << " " << q << " " << d << " " << r;
    }
}

TEST(Quadratic, FloorNearIntegers)
{
    // (p + q sqrt d) / r very close to an integer: convergents of sqrt 2
    std::int64_t a = 1, b = 1;
    for (int i = 0; i < 25; ++i) {
        Quadratic x(-a, b, 2, 1);  // b sqrt 2 - a, tiny and alternating in sign
        ASSERT_EQ(x.floor(), float_floor(-a, b, 2, 1));
        std::int64_t na = a + 2 * b, nb = a + b;
        a = na;
        b = nb;
    }
}

TEST(Beatty, FloorExamples)
{
    Quadratic phi = Quadratic::golden_ratio();
    Quadratic zero = Quadratic::rational(0);
    EXPECT_EQ(beatty_sequence(phi, zero, 12), (Row{1, 3, 4, 6, 8, 9, 11, 12, 14, 16, 17, 19}));
    EXPECT_EQ(beatty_sequence(Quadratic(0, 1, 2, 1), zero, 5), (Row{1, 2, 4, 5, 7}));
    EXPECT_EQ(beatty_floor(phi, zero, 0), 0);
    EXPECT_THROW(beatty_floor(Quadratic::rational(3, 2), zero, 1), invalid_parameter);
}

TEST(Beatty, MonotoneAndExact)
{
    Quadratic alpha(3, 1, 7, 5);
    Quadratic gamma(-1, 2, 7, 9);
    std::int64_t prev = beatty_floor(alpha, gamma, 0);
    for (std::int64_t k = 1; k < 2000; ++k) {
        std::int64_t v = beatty_floor(alpha, gamma, k);
        ASSERT_GE(v, prev);
        ASSERT_EQ(v, float_floor(3 * 9 * k - 5, 9 * k + 10, 7, 45));
        prev = v;
    }
}

TEST(SkolemFraenkel, Examples)
{
    Quadratic phi = Quadratic::golden_ratio();
    Quadratic zero = Quadratic::rational(0);
    EXPECT_TRUE(skolem_fraenkel_check({phi, phi * phi, zero, zero}));
    Quadratic r2(0, 1, 2, 1);
    EXPECT_TRUE(skolem_fraenkel_check({r2, r2 + 2, zero, zero}));
    EXPECT_FALSE(skolem_fraenkel_check({phi, phi * phi, Quadratic::rational(1), zero}));
    EXPECT_FALSE(skolem_fraenkel_check({phi, phi + 2, zero, zero}));
}

TEST(WythoffAB, PublishedTables)
{
    MexTable one = wythoff_ab_params(1, 1).rows(12);
    EXPECT_EQ(to_tsv(one.text()), read_golden("table1_wythoff.tsv"));
    EXPECT_EQ(wythoff_ab_params(1, 1).alpha, Quadratic::golden_ratio());
    EXPECT_EQ(wythoff_ab_params(1, 1).gamma, Quadratic::rational(0));
    MexTable two = wythoff_ab_params(2, 2).rows(12);
    EXPECT_EQ(to_tsv(two.text()), read_golden("table2_2wythoff.tsv"));
    MexTable three = wythoff_ab_params(1, 2).rows(12);
    EXPECT_EQ(to_tsv(three.text()), read_golden("table3_beatty_1_2.tsv"));
    for (std::size_t k = 0; k < 12; ++k) EXPECT_EQ(three.row("B")[k] - three.row("A")[k], k + 2);
    EXPECT_THROW(wythoff_ab_params(0, 1), invalid_parameter);
    EXPECT_THROW(wythoff_ab_params(2, 0), invalid_parameter);
    EXPECT_THROW(wythoff_ab_params(2, 4), invalid_parameter);
}

TEST(WythoffAB, ComplementaryForSmallParameters)
{
    for (std::int64_t a = 1; a <= 5; ++a)
        for (std::int64_t b = 1; b <= a; ++b) {
            BeattyPair p = wythoff_ab_params(a, b);
            EXPECT_TRUE(skolem_fraenkel_check(p)) << a << "," << b;
            EXPECT_EQ(p.beta - p.alpha, Quadratic::rational(a));
            MexTable t = p.rows(100'000);
            EXPECT_TRUE(check_partition(t.rows, 100'000).is_partition) << a << "," << b;
            for (std::int64_t k = 1; k <= 50; ++k)
                ASSERT_EQ(static_cast<std::int64_t>(p.upper(k) - p.lower(k)), (k - 1) * a + b);
        }
    for (std::uint64_t a = 1; a <= 5; ++a) {
        BeattyPair p = wythoff_ab_params(static_cast<std::int64_t>(a), static_cast<std::int64_t>(a));
        for (std::uint64_t k = 1; k <= 1000; ++k) ASSERT_EQ(p.lower(static_cast<std::int64_t>(k)), awythoff_lower(a, k));
    }
}

TEST(Sturmian, FibonacciWord)
{
    Quadratic phi = Quadratic::golden_ratio();
    Quadratic rho = (phi * phi).inverse();  // 1/phi^2
    Word u = sturmian_word(rho, rho, 200);
    Word fib = fixed_point_prefix(kbonacci_substitution(2), 0, 200);
    EXPECT_EQ(u, fib);
    EXPECT_TRUE(sturmian_word(rho, Quadratic::rational(0), 0).empty());
}

TEST(Sturmian, OnesAtGoldenFloors)
{
    Quadratic phi = Quadratic::golden_ratio();
    Word u = sturmian_word(phi - 1, Quadratic::rational(0), 500);
    std::set<std::uint64_t> ones;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i]) ones.insert(i + 1);
    std::set<std::uint64_t> want;
    for (std::uint64_t k = 1; awythoff_lower(1, k) + 1 <= 500; ++k) want.insert(awythoff_lower(1, k) + 1);
    EXPECT_EQ(ones, want);
}

TEST(Sturmian, ZeroLocationsMatchScan)
{
    Quadratic phi = Quadratic::golden_ratio();
    for (auto [rho, x] : {std::pair{phi - 1, Quadratic::rational(0)}, std::pair{(phi * phi).inverse(), (phi * phi).inverse()},
                          std::pair{Quadratic(0, 1, 2, 2), Quadratic::rational(1, 3)}}) {
        Word u = sturmian_word(rho, x, 3000);
        Row zeros;
        for (std::size_t i = 0; i < u.size(); ++i)
            if (u[i] == 0) zeros.push_back(i + 1);
        Row got = sturmian_zero_locations(rho, x, zeros.size());
        EXPECT_EQ(got, zeros);
    }
    EXPECT_THROW(sturmian_word(Quadratic::rational(1, 2), Quadratic::rational(0), 3), invalid_parameter);
    EXPECT_THROW(sturmian_word(phi, Quadratic::rational(0), 3), invalid_parameter);
    EXPECT_THROW(sturmian_word(phi - 1, Quadratic::rational(1), 3), invalid_parameter);
}
