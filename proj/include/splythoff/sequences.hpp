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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "format.hpp"
#include "mex.hpp"
#include "quadratic.hpp"
#include "substitution.hpp"
#include "tables.hpp"

namespace splythoff {

/// Named, equal-length, strictly increasing rows produced by a mex recursion.
struct MexTable {
    std::vector<std::string> names;
    std::vector<std::vector<std::uint64_t>> rows;

    std::size_t columns() const { return rows.empty() ? 0 : rows.front().size(); }

    const std::vector<std::uint64_t>& row(const std::string& name) const
    {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return rows[i];
        throw invalid_parameter("no row named '" + name + "'");
    }

    TextTable text() const
    {
        TextTable t;
        t.names = names;
        t.rows = rows;
        return t;
    }
};

/// Wythoff's recursion: a_{i+1} = mex(A_i ∪ B_i), b_{i+1} = a_{i+1} + (i+1).
inline MexTable wythoff_columns(std::size_t n)
{
    if (n < 1) throw invalid_parameter("need at least one column");
    MexTable t{{"A", "B"}, {std::vector<std::uint64_t>(n), std::vector<std::uint64_t>(n)}};
    MexTracker seen;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t a = seen.next();
        std::uint64_t b = a + i + 1;
        seen.insert(a);
        seen.insert(b);
        t.rows[0][i] = a;
        t.rows[1][i] = b;
    }
    return t;
}

/**
 * Columns (delta, a, b, sigma) of the non-zero Splythoff P-positions:
 *   delta = mex(Delta ∪ Sigma), a = mex(A ∪ B), b = a + delta, sigma = a + b,
 * with mex taken over {1, 2, ...}.
 */
inline MexTable splythoff_columns(std::size_t n)
{
    if (n < 1) throw invalid_parameter("need at least one column");
    MexTable t{{"Delta", "A", "B", "Sigma"}, std::vector<std::vector<std::uint64_t>>(4, std::vector<std::uint64_t>(n))};
    MexTracker ab;
    MexTracker ds;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t delta = ds.next();
        std::uint64_t a = ab.next();
        std::uint64_t b = a + delta;
        std::uint64_t sigma = a + b;
        ab.insert(a);
        ab.insert(b);
        ds.insert(delta);
        ds.insert(sigma);
        t.rows[0][i] = delta;
        t.rows[1][i] = a;
        t.rows[2][i] = b;
        t.rows[3][i] = sigma;
    }
    return t;
}

/**
 * Simultaneous mex generation of the three Quadribonacci tables.
 *
 * Rows: x0..x3 (positions), a0..a2 (differences), b0, b1 (double
 * differences) and b2 (the sum a0 + a1 + a2). Three rows come from a mex:
 * a0 over the difference rows, b0 over the double-difference rows including
 * the sum, x0 over the positions rows; the rest follow by addition, with
 * x3 = x0 + x1 + x2 + column index.
 */
inline MexTable quadribonacci_columns(std::size_t n)
{
    if (n < 1) throw invalid_parameter("need at least one column");
    const std::vector<std::string> names{"a0", "b0", "x0", "a1", "x1", "x2", "x3", "a2", "b2", "b1"};
    MexTable t{names, std::vector<std::vector<std::uint64_t>>(names.size(), std::vector<std::uint64_t>(n))};
    MexTracker diff;
    MexTracker ddiff;
    MexTracker pos;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t a0 = diff.next();
        std::uint64_t b0 = ddiff.next();
        std::uint64_t x0 = pos.next();
        std::uint64_t a1 = a0 + b0;
        std::uint64_t x1 = x0 + a0;
        std::uint64_t x2 = x1 + a1;
        std::uint64_t x3 = x0 + x1 + x2 + (i + 1);
        std::uint64_t a2 = x3 - x2;
        if (a2 <= a1) throw std::logic_error("double-difference row became non-positive");
        std::uint64_t b1 = a2 - a1;
        std::uint64_t b2 = a0 + a1 + a2;
        for (std::uint64_t v : {a0, a1, a2}) diff.insert(v);
        for (std::uint64_t v : {b0, b1, b2}) ddiff.insert(v);
        for (std::uint64_t v : {x0, x1, x2, x3}) pos.insert(v);
        const std::uint64_t col[] = {a0, b0, x0, a1, x1, x2, x3, a2, b2, b1};
        for (std::size_t r = 0; r < names.size(); ++r) t.rows[r][i] = col[r];
    }
    return t;
}

// ---------------------------------------------------------------------------
// Beatty sequences

using Quadratic = QuadraticIrrational;

/// floor(kk * alpha + gamma), exactly.
inline std::int64_t beatty_floor(const Quadratic& alpha, const Quadratic& gamma, std::int64_t kk)
{
    if (alpha.is_rational()) throw invalid_parameter("alpha must be irrational");
    return (kk * alpha + gamma).floor();
}

inline std::vector<std::uint64_t> beatty_sequence(const Quadratic& alpha, const Quadratic& gamma, std::size_t n)
{
    std::vector<std::uint64_t> out(n);
    for (std::size_t k = 1; k <= n; ++k) {
        std::int64_t v = beatty_floor(alpha, gamma, static_cast<std::int64_t>(k));
        if (v < 0) throw invalid_parameter("Beatty sequence has negative terms");
        out[k - 1] = static_cast<std::uint64_t>(v);
    }
    return out;
}

/**
 * Non-homogeneous Beatty pair A_k = floor(k alpha + gamma),
 * B_k = floor(k beta + delta), k = 1, 2, ...
 */
struct BeattyPair {
    Quadratic alpha;
    Quadratic beta;
    Quadratic gamma;
    Quadratic delta;

    std::uint64_t lower(std::int64_t k) const { return static_cast<std::uint64_t>(beatty_floor(alpha, gamma, k)); }
    std::uint64_t upper(std::int64_t k) const { return static_cast<std::uint64_t>(beatty_floor(beta, delta, k)); }

    MexTable rows(std::size_t n) const
    {
        return MexTable{{"A", "B"}, {beatty_sequence(alpha, gamma, n), beatty_sequence(beta, delta, n)}};
    }
};

/// The k >= 1 with k*alpha + gamma an integer, if any.
inline std::optional<std::int64_t> integer_hit(const Quadratic& alpha, const Quadratic& gamma)
{
    if (alpha.is_rational()) return std::nullopt;
    // irrational part of k*alpha + gamma vanishes iff k = -(q_g / r_g) / (q_a / r_a)
    Quadratic k = Quadratic::rational(-gamma.q(), gamma.r()) / Quadratic::rational(alpha.q(), alpha.r());
    if (!k.is_integer() || k.p() < 1) return std::nullopt;
    if ((k.p() * alpha + gamma).is_integer()) return k.p();
    return std::nullopt;
}

/**
 * Exact complementarity conditions for a pair indexed from k = 1:
 *   1/alpha + 1/beta = 1   and   gamma/alpha + delta/beta = floor(alpha + gamma) - 1,
 * with floor(alpha + gamma) = 1 so that the pair covers {1, 2, ...}.
 * Pairs where some k*alpha + gamma or k*beta + delta is an integer are
 * rejected as degenerate.
 */
inline bool skolem_fraenkel_check(const BeattyPair& pair)
{
    const auto one = Quadratic::rational(1);
    if (pair.alpha.is_rational() || pair.beta.is_rational()) return false;
    if (pair.alpha <= one || pair.beta <= one) return false;
    if (pair.alpha.inverse() + pair.beta.inverse() != one) return false;
    Quadratic first = pair.alpha + pair.gamma;
    if (first.is_integer()) return false;
    if (integer_hit(pair.alpha, pair.gamma) || integer_hit(pair.beta, pair.delta)) return false;
    std::int64_t f = first.floor();
    Quadratic lhs = pair.gamma / pair.alpha + pair.delta / pair.beta;
    return lhs == Quadratic::rational(f - 1) && f == 1;
}

inline constexpr std::uint64_t beatty_validation_range = 10'000;

/**
 * The pair with beta - alpha = a whose differences run b, a + b, 2a + b, ...
 * (B_k - A_k = (k - 1) a + b for k >= 1). b = a gives the homogeneous
 * a-Wythoff pair; b ranges over 1 .. a + 1.
 *
 * alpha is the positive root of alpha^2 + (a - 2) alpha - a = 0, and with
 * c = b - a the offsets are gamma = -c / beta, delta = gamma + c.
 */
inline BeattyPair wythoff_ab_params(std::int64_t a, std::int64_t b)
{
    if (a < 1 || a > 1'000'000) throw invalid_parameter("a must be a positive integer");
    if (b < 1 || b > a + 1) throw invalid_parameter("b must satisfy 0 < b <= a + 1");
    BeattyPair pair;
    pair.alpha = Quadratic(2 - a, 1, a * a + 4, 2);
    pair.beta = pair.alpha + a;
    const std::int64_t c = b - a;
    pair.gamma = -(Quadratic::rational(c) / pair.beta);
    pair.delta = pair.gamma + c;

    // brute-force complementarity before handing the pair out
    const std::size_t n = static_cast<std::size_t>(beatty_validation_range);
    MexTable t = pair.rows(n);
    PartitionReport rep = check_partition(t.rows, beatty_validation_range);
    if (!rep.is_partition)
        throw std::logic_error("derived Beatty pair for a=" + std::to_string(a) + " b=" + std::to_string(b) +
                               " is not complementary at " + std::to_string(*rep.first_violation));
    return pair;
}

// ---------------------------------------------------------------------------
// Mechanical (Sturmian) words

inline void check_sturmian_args(const Quadratic& rho, const Quadratic& x)
{
    if (rho.is_rational()) throw invalid_parameter("rho must be irrational");
    if (rho.sign() <= 0 || rho >= Quadratic::rational(1)) throw invalid_parameter("rho must lie in (0,1)");
    if (x.sign() < 0 || x >= Quadratic::rational(1)) throw invalid_parameter("x must lie in [0,1)");
}

/// u_1 .. u_n with u_k = floor(k rho + x) - floor((k-1) rho + x).
inline Word sturmian_word(const Quadratic& rho, const Quadratic& x, std::size_t n)
{
    check_sturmian_args(rho, x);
    Word out(n);
    std::int64_t prev = x.floor();
    for (std::size_t k = 1; k <= n; ++k) {
        std::int64_t cur = (static_cast<std::int64_t>(k) * rho + x).floor();
        out[k - 1] = static_cast<Letter>(cur - prev);
        prev = cur;
    }
    return out;
}

/// 1-based positions of the first n zeros of sturmian_word(rho, x, .):
/// the j-th zero sits at floor((j - 1 + x) / (1 - rho)) + 1.
inline std::vector<std::uint64_t> sturmian_zero_locations(const Quadratic& rho, const Quadratic& x, std::size_t n)
{
    check_sturmian_args(rho, x);
    Quadratic inv = (Quadratic::rational(1) - rho).inverse();
    std::vector<std::uint64_t> out(n);
    for (std::size_t j = 1; j <= n; ++j)
        out[j - 1] = static_cast<std::uint64_t>(((x + static_cast<std::int64_t>(j - 1)) * inv).floor() + 1);
    return out;
}

} // namespace splythoff
