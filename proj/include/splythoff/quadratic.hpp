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

#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace splythoff {

namespace detail {

using i128 = __int128;

inline i128 abs128(i128 v) { return v < 0 ? -v : v; }

inline i128 gcd128(i128 a, i128 b)
{
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// floor(sqrt(n)) for n >= 0
inline i128 isqrt128(i128 n)
{
    if (n < 0) throw std::domain_error("isqrt of negative value");
    i128 x = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
    while (x > 0 && x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

inline i128 floor_div(i128 a, i128 b)
{
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline std::int64_t narrow(i128 v)
{
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("quadratic irrational component overflow");
    return static_cast<std::int64_t>(v);
}

} // namespace detail

/**
 * Exact element (p + q*sqrt(d)) / r of a real quadratic field.
 *
 * Canonical form: r > 0, gcd(p, q, r) = 1, d squarefree. Rationals are
 * represented with q = 0 and d = 1; a perfect-square d with q != 0 is
 * rejected rather than folded, since callers use this type where
 * irrationality matters.
 */
class QuadraticIrrational {
public:
    QuadraticIrrational() = default;

    QuadraticIrrational(std::int64_t p, std::int64_t q, std::int64_t d, std::int64_t r)
    {
        if (d <= 0) throw invalid_parameter("radicand must be positive");
        if (r == 0) throw invalid_parameter("denominator must be non-zero");
        assign(p, q, d, r, true);
    }

    static QuadraticIrrational rational(std::int64_t p, std::int64_t r = 1) { return {p, 0, 1, r}; }

    /// (1 + sqrt 5) / 2
    static QuadraticIrrational golden_ratio() { return {1, 1, 5, 2}; }

    std::int64_t p() const { return p_; }
    std::int64_t q() const { return q_; }
    std::int64_t d() const { return d_; }
    std::int64_t r() const { return r_; }
    bool is_rational() const { return q_ == 0; }

    int sign() const
    {
        using detail::i128;
        if (q_ == 0) return (p_ > 0) - (p_ < 0);
        if (p_ >= 0 && q_ > 0) return 1;
        if (p_ <= 0 && q_ < 0) return -1;
        i128 pp = static_cast<i128>(p_) * p_;
        i128 qqd = static_cast<i128>(q_) * q_ * d_;
        if (p_ > 0) return pp > qqd ? 1 : -1;
        return qqd > pp ? 1 : -1;
    }

    std::int64_t floor() const
    {
        using namespace detail;
        i128 s = 0;
        if (q_ != 0) {
            i128 root = isqrt128(static_cast<i128>(q_) * q_ * d_);
            // q^2 d is not a square, so q*sqrt(d) is never an integer
            s = q_ > 0 ? root : -root - 1;
        }
        // floor((p + x) / r) == floor((p + floor(x)) / r) for integer p and r > 0
        return narrow(floor_div(static_cast<i128>(p_) + s, r_));
    }

    std::int64_t ceil() const { return -(-*this).floor(); }

    bool is_integer() const { return q_ == 0 && r_ == 1; }

    double to_double() const
    {
        return (static_cast<double>(p_) + static_cast<double>(q_) * std::sqrt(static_cast<double>(d_))) /
               static_cast<double>(r_);
    }

    QuadraticIrrational inverse() const
    {
        using detail::i128;
        if (p_ == 0 && q_ == 0) throw std::domain_error("inverse of zero");
        i128 norm = static_cast<i128>(p_) * p_ - static_cast<i128>(q_) * q_ * d_;
        QuadraticIrrational out;
        out.assign128(static_cast<i128>(r_) * p_, -static_cast<i128>(r_) * q_, d_, norm);
        return out;
    }

    QuadraticIrrational operator-() const
    {
        QuadraticIrrational out = *this;
        out.p_ = -p_;
        out.q_ = -q_;
        return out;
    }

    friend QuadraticIrrational operator+(const QuadraticIrrational& x, const QuadraticIrrational& y)
    {
        using detail::i128;
        std::int64_t d = common_radicand(x, y);
        QuadraticIrrational out;
        out.assign128(static_cast<i128>(x.p_) * y.r_ + static_cast<i128>(y.p_) * x.r_,
                      static_cast<i128>(x.q_) * y.r_ + static_cast<i128>(y.q_) * x.r_, d,
                      static_cast<i128>(x.r_) * y.r_);
        return out;
    }

    friend QuadraticIrrational operator-(const QuadraticIrrational& x, const QuadraticIrrational& y)
    {
        return x + (-y);
    }

    friend QuadraticIrrational operator*(const QuadraticIrrational& x, const QuadraticIrrational& y)
    {
        using detail::i128;
        std::int64_t d = common_radicand(x, y);
        QuadraticIrrational out;
        out.assign128(static_cast<i128>(x.p_) * y.p_ + static_cast<i128>(x.q_) * y.q_ * d,
                      static_cast<i128>(x.p_) * y.q_ + static_cast<i128>(x.q_) * y.p_, d,
                      static_cast<i128>(x.r_) * y.r_);
        return out;
    }

    friend QuadraticIrrational operator/(const QuadraticIrrational& x, const QuadraticIrrational& y)
    {
        return x * y.inverse();
    }

    friend QuadraticIrrational operator+(const QuadraticIrrational& x, std::int64_t n) { return x + rational(n); }
    friend QuadraticIrrational operator-(const QuadraticIrrational& x, std::int64_t n) { return x - rational(n); }
    friend QuadraticIrrational operator*(std::int64_t n, const QuadraticIrrational& x) { return rational(n) * x; }

    friend bool operator==(const QuadraticIrrational&, const QuadraticIrrational&) = default;

    friend std::strong_ordering operator<=>(const QuadraticIrrational& x, const QuadraticIrrational& y)
    {
        int s = (x - y).sign();
        return s < 0 ? std::strong_ordering::less
                     : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string to_string() const
    {
        std::string out = "(" + std::to_string(p_);
        if (q_ != 0) out += (q_ < 0 ? "-" : "+") + std::to_string(q_ < 0 ? -q_ : q_) + "*sqrt(" + std::to_string(d_) + ")";
        return out + ")/" + std::to_string(r_);
    }

private:
    static std::int64_t common_radicand(const QuadraticIrrational& x, const QuadraticIrrational& y)
    {
        if (x.q_ == 0) return y.d_;
        if (y.q_ == 0) return x.d_;
        if (x.d_ != y.d_) throw invalid_parameter("operands lie in different quadratic fields");
        return x.d_;
    }

    void assign(std::int64_t p, std::int64_t q, std::int64_t d, std::int64_t r, bool reduce_radicand)
    {
        using detail::i128;
        i128 qq = q;
        i128 dd = d;
        if (reduce_radicand) {
            for (i128 f = 2; f * f <= dd; ++f)
                while (dd % (f * f) == 0) {
                    dd /= f * f;
                    qq *= f;
                }
            if (dd == 1 && qq != 0) throw invalid_parameter("radicand " + std::to_string(d) + " is a perfect square");
        }
        assign128(p, qq, static_cast<std::int64_t>(dd), r);
    }

    void assign128(detail::i128 p, detail::i128 q, std::int64_t d, detail::i128 r)
    {
        using namespace detail;
        if (r == 0) throw std::domain_error("zero denominator");
        if (r < 0) {
            p = -p;
            q = -q;
            r = -r;
        }
        i128 g = gcd128(gcd128(p, q), r);
        if (g > 1) {
            p /= g;
            q /= g;
            r /= g;
        }
        p_ = narrow(p);
        q_ = narrow(q);
        r_ = narrow(r);
        d_ = q_ == 0 ? 1 : d;
    }

    std::int64_t p_ = 0;
    std::int64_t q_ = 0;
    std::int64_t d_ = 1;
    std::int64_t r_ = 1;
};

} // namespace splythoff
