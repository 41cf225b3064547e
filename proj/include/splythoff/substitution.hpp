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
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace splythoff {

using Letter = std::uint8_t;
using Word = std::vector<Letter>;

inline constexpr std::size_t max_alphabet = 16;

// Digits for letters 0..9, then a..f.
inline char letter_char(Letter l)
{
    return static_cast<char>(l < 10 ? '0' + l : 'a' + (l - 10));
}

inline std::string to_string(std::span<const Letter> word)
{
    std::string out;
    out.reserve(word.size());
    for (Letter l : word) out.push_back(letter_char(l));
    return out;
}

inline Word parse_word(std::string_view text)
{
    Word out;
    out.reserve(text.size());
    for (char c : text) {
        if (c >= '0' && c <= '9') out.push_back(static_cast<Letter>(c - '0'));
        else if (c >= 'a' && c <= 'f') out.push_back(static_cast<Letter>(c - 'a' + 10));
        else throw invalid_letter(std::string("not a letter: '") + c + "'");
    }
    return out;
}

/**
 * A letter-to-word rewriting rule over the alphabet {0, ..., size-1}.
 *
 * Every image is non-empty and uses only letters of the same alphabet.
 * Immutable after construction.
 */
class Substitution {
public:
    explicit Substitution(std::vector<Word> images) : images_(std::move(images))
    {
        if (images_.empty() || images_.size() > max_alphabet)
            throw invalid_parameter("substitution alphabet size must be in 1..16");
        for (const Word& img : images_) {
            if (img.empty()) throw invalid_parameter("substitution images must be non-empty");
            for (Letter l : img)
                if (l >= images_.size())
                    throw invalid_letter("image letter " + std::to_string(l) + " has no rule");
        }
    }

    /// Parses "0:01,1:2,2:01". Rules must cover 0..size-1 exactly once.
    static Substitution parse(std::string_view spec)
    {
        std::vector<std::pair<Letter, Word>> rules;
        std::size_t pos = 0;
        while (pos <= spec.size()) {
            std::size_t comma = spec.find(',', pos);
            if (comma == std::string_view::npos) comma = spec.size();
            std::string_view item = spec.substr(pos, comma - pos);
            std::size_t colon = item.find(':');
            if (colon == std::string_view::npos || colon == 0)
                throw invalid_parameter("expected letter:image, got '" + std::string(item) + "'");
            Word key = parse_word(item.substr(0, colon));
            if (key.size() != 1) throw invalid_parameter("rule key must be a single letter");
            rules.emplace_back(key[0], parse_word(item.substr(colon + 1)));
            pos = comma + 1;
        }
        std::vector<Word> images(rules.size());
        std::vector<bool> seen(rules.size(), false);
        for (auto& [key, img] : rules) {
            if (key >= rules.size() || seen[key])
                throw invalid_parameter("rules must cover letters 0.." + std::to_string(rules.size() - 1) +
                                        " exactly once");
            seen[key] = true;
            images[key] = std::move(img);
        }
        return Substitution(std::move(images));
    }

    std::size_t alphabet_size() const { return images_.size(); }
    const Word& image(Letter l) const
    {
        if (l >= images_.size()) throw invalid_letter("letter " + std::to_string(l) + " out of range");
        return images_[l];
    }
    const std::vector<Word>& images() const { return images_; }

    Word expand(std::span<const Letter> word) const
    {
        Word out;
        out.reserve(word.size() * 2);
        for (Letter l : word) {
            const Word& img = image(l);
            out.insert(out.end(), img.begin(), img.end());
        }
        return out;
    }

    std::string to_spec() const
    {
        std::string out;
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (i) out += ',';
            out += letter_char(static_cast<Letter>(i));
            out += ':';
            out += to_string(images_[i]);
        }
        return out;
    }

    friend bool operator==(const Substitution&, const Substitution&) = default;

private:
    std::vector<Word> images_;
};

/// The k-bonacci substitution: j -> 0(j+1) for j < k-1, and k-1 -> 0.
inline Substitution kbonacci_substitution(unsigned k)
{
    if (k < 2 || k > max_alphabet) throw invalid_parameter("k must be in 2..16");
    std::vector<Word> images(k);
    for (unsigned j = 0; j + 1 < k; ++j) images[j] = {0, static_cast<Letter>(j + 1)};
    images[k - 1] = {0};
    return Substitution(std::move(images));
}

inline Word expand(const Substitution& sub, std::span<const Letter> word) { return sub.expand(word); }

/**
 * A letter-to-word map applied once. Images may be empty, which deletes the
 * letter.
 */
class Coding {
public:
    Coding(std::vector<Word> images, std::size_t output_alphabet)
        : images_(std::move(images)), output_alphabet_(output_alphabet)
    {
        if (images_.empty() || images_.size() > max_alphabet)
            throw invalid_parameter("coding alphabet size must be in 1..16");
        for (const Word& img : images_)
            for (Letter l : img)
                if (l >= output_alphabet_) throw invalid_letter("coding image letter out of range");
    }

    static Coding identity(std::size_t size)
    {
        std::vector<Word> images(size);
        for (std::size_t i = 0; i < size; ++i) images[i] = {static_cast<Letter>(i)};
        return Coding(std::move(images), size);
    }

    /// Deletes every occurrence of `letter`, keeping the others unchanged.
    static Coding deletion(std::size_t size, Letter letter)
    {
        Coding c = identity(size);
        if (letter >= size) throw invalid_letter("deleted letter out of range");
        c.images_[letter].clear();
        return c;
    }

    /// Parses "0:0,1:1,2:" (an empty image deletes the letter). The output
    /// alphabet is the smallest one holding every image letter.
    static Coding parse(std::string_view spec)
    {
        std::vector<Word> images;
        std::vector<bool> seen;
        std::size_t pos = 0;
        while (pos <= spec.size()) {
            std::size_t comma = spec.find(',', pos);
            if (comma == std::string_view::npos) comma = spec.size();
            std::string_view item = spec.substr(pos, comma - pos);
            std::size_t colon = item.find(':');
            if (colon == std::string_view::npos) throw invalid_parameter("expected letter:image, got '" + std::string(item) + "'");
            Word key = parse_word(item.substr(0, colon));
            if (key.size() != 1) throw invalid_parameter("rule key must be a single letter");
            if (key[0] >= images.size()) {
                images.resize(key[0] + 1);
                seen.resize(key[0] + 1, false);
            }
            if (seen[key[0]]) throw invalid_parameter("letter " + std::to_string(key[0]) + " has two rules");
            seen[key[0]] = true;
            images[key[0]] = parse_word(item.substr(colon + 1));
            pos = comma + 1;
        }
        if (std::find(seen.begin(), seen.end(), false) != seen.end())
            throw invalid_parameter("coding rules must cover letters 0.." + std::to_string(images.size() - 1));
        std::size_t out = 1;
        for (const Word& img : images)
            for (Letter l : img) out = std::max<std::size_t>(out, l + 1);
        return Coding(std::move(images), out);
    }

    std::size_t alphabet_size() const { return images_.size(); }
    std::size_t output_alphabet_size() const { return output_alphabet_; }
    const Word& image(Letter l) const
    {
        if (l >= images_.size()) throw invalid_letter("letter " + std::to_string(l) + " out of range");
        return images_[l];
    }

private:
    std::vector<Word> images_;
    std::size_t output_alphabet_;
};

inline Word apply_coding(const Coding& coding, std::span<const Letter> word)
{
    Word out;
    out.reserve(word.size());
    for (Letter l : word) {
        const Word& img = coding.image(l);
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

/**
 * Lazily extended prefix of the fixed point of `sub` starting at `seed`.
 *
 * The fixed point u satisfies u = sub(u) = sub(u_1) sub(u_2) ..., so the
 * prefix grows by appending the image of the next unread letter. Single
 * writer; copy the prefix out to share it between threads.
 */
class WordStream {
public:
    WordStream(Substitution sub, Letter seed) : sub_(std::move(sub)), seed_(seed)
    {
        const Word& img = sub_.image(seed_);
        if (img.front() != seed_)
            throw no_fixed_point("image of seed " + std::to_string(seed_) + " does not start with it");
        prefix_.push_back(seed_);
        if (img.size() > 1) {
            prefix_.assign(img.begin(), img.end());
            cursor_ = 1;
        }
    }

    const Substitution& substitution() const { return sub_; }
    Letter seed() const { return seed_; }

    /// Grows the prefix to at least n letters.
    void ensure(std::size_t n)
    {
        if (prefix_.size() >= n) return;
        if (sub_.image(seed_).size() == 1)
            throw no_fixed_point("image of seed is the seed itself; fixed point has length 1");
        prefix_.reserve(n + 2 * max_alphabet);
        while (prefix_.size() < n) {
            const Word& img = sub_.image(prefix_[cursor_]);
            prefix_.insert(prefix_.end(), img.begin(), img.end());
            ++cursor_;
        }
    }

    /// Letter at 1-based index i.
    Letter at(std::size_t i)
    {
        ensure(i);
        return prefix_[i - 1];
    }

    std::span<const Letter> prefix(std::size_t n)
    {
        ensure(n);
        return std::span<const Letter>(prefix_).first(n);
    }

    std::size_t materialized() const { return prefix_.size(); }

private:
    Substitution sub_;
    Letter seed_;
    Word prefix_;
    std::size_t cursor_ = 0;
};

inline Word fixed_point_prefix(const Substitution& sub, Letter seed, std::size_t n)
{
    WordStream stream(sub, seed);
    auto p = stream.prefix(n);
    return Word(p.begin(), p.end());
}

/// w_j, the prefix of j in theta_k^j(0); |w_j| = 2^j - 1.
inline Word prefix_word(unsigned k, unsigned j)
{
    Substitution sub = kbonacci_substitution(k);
    if (j >= k) throw invalid_parameter("j must be in 0..k-1");
    Word w{0};
    for (unsigned i = 0; i < j; ++i) w = sub.expand(w);
    w.pop_back();
    return w;
}

inline constexpr std::size_t default_scan_cap = std::size_t{1} << 31;

/// First n 1-based positions of `letter` in the stream.
inline std::vector<std::uint64_t> letter_positions(WordStream& stream, Letter letter, std::size_t n,
                                                   std::size_t scan_cap = default_scan_cap)
{
    if (letter >= stream.substitution().alphabet_size()) throw invalid_letter("letter out of range");
    std::vector<std::uint64_t> out;
    out.reserve(n);
    std::size_t i = 0;
    std::size_t chunk = std::max<std::size_t>(1024, 4 * n);
    while (out.size() < n) {
        if (i >= scan_cap)
            throw cap_exceeded("letter " + std::to_string(letter) + " not found " + std::to_string(n) +
                               " times within " + std::to_string(scan_cap) + " letters");
        std::size_t upto = std::min(scan_cap, i + chunk);
        auto p = stream.prefix(upto);
        for (; i < upto && out.size() < n; ++i)
            if (p[i] == letter) out.push_back(i + 1);
        chunk *= 2;
    }
    return out;
}

} // namespace splythoff
