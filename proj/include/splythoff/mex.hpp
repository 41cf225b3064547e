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
#include <vector>

namespace splythoff {

enum class MexDomain { naturals, positive };

/// Least element of N (or N+ = {1,2,...}) absent from `values`.
inline std::uint64_t mex(std::span<const std::uint64_t> values, MexDomain domain = MexDomain::naturals)
{
    std::uint64_t base = domain == MexDomain::positive ? 1 : 0;
    std::vector<bool> seen(values.size() + 1, false);
    for (std::uint64_t v : values)
        if (v >= base && v - base < seen.size()) seen[v - base] = true;
    std::uint64_t i = 0;
    while (seen[i]) ++i;
    return base + i;
}

/**
 * Incremental mex over a growing set: a membership bitmap plus a cursor at
 * the smallest value not yet seen. The cursor only moves forward, so a run of
 * n insertions and queries costs O(n + largest value).
 */
class MexTracker {
public:
    explicit MexTracker(MexDomain domain = MexDomain::positive)
        : base_(domain == MexDomain::positive ? 1 : 0), cursor_(base_)
    {
    }

    void insert(std::uint64_t v)
    {
        if (v < base_) return;
        std::uint64_t i = v - base_;
        if (i >= seen_.size()) seen_.resize(std::max<std::uint64_t>(i + 1, 2 * seen_.size()), false);
        seen_[i] = true;
    }

    bool contains(std::uint64_t v) const
    {
        return v >= base_ && v - base_ < seen_.size() && seen_[v - base_];
    }

    std::uint64_t next()
    {
        while (contains(cursor_)) ++cursor_;
        return cursor_;
    }

private:
    std::uint64_t base_;
    std::uint64_t cursor_;
    std::vector<bool> seen_;
};

} // namespace splythoff
