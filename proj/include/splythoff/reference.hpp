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

#include <array>
#include <cstdint>

// Published data the verification suite compares against. The same values are
// kept as text under tests/golden; a unit test keeps the two copies in sync.

namespace splythoff::reference {

inline constexpr std::uint32_t sg_table_size = 18;

/// Splythoff SG values as printed: first line is m = 17, last is m = 0;
/// columns run n = 0..17.
inline constexpr std::array<std::array<std::uint32_t, 18>, 18> sg_table{{
    {17, 13, 18, 20, 12, 11, 15, 22, 14,  4,  1, 19, 16, 10,  7, 24, 25, 21},
    {16, 17, 15, 19, 20, 14, 21, 12, 22,  0,  5,  8,  6, 24, 10,  9, 13, 25},
    {15, 16, 14, 18, 19, 17, 20, 21, 12,  2,  4, 22, 23,  7,  8, 11,  9, 24},
    {14, 15, 16, 17, 18, 13, 12, 19,  1,  3, 20, 21, 22, 23,  9,  8, 10,  7},
    {13, 14, 12, 11,  8, 16, 17,  0,  9,  5,  6, 18, 21, 19, 23,  7, 24, 10},
    {12,  9, 13,  7, 11, 15, 14,  2, 18,  8, 19, 20, 10, 21, 22, 23,  6, 16},
    {11, 12, 10, 13, 14,  9,  0, 16, 17,  6,  7, 15, 20, 18, 21, 22,  8, 19},
    {10, 11,  9,  8, 13, 12,  2, 15, 16, 17, 14,  7, 19,  6, 20,  4,  5,  1},
    { 9, 10, 11, 12,  1,  7, 13, 14, 15, 16, 17,  6,  8,  5,  3,  2,  0,  4},
    { 8,  6,  7, 10,  0,  2,  5,  3,  4, 15, 16, 17, 18,  9,  1, 12, 22, 14},
    { 7,  8,  6,  9, 10,  1,  4,  5,  3, 14, 15, 16,  2,  0, 19, 21, 12, 22},
    { 6,  7,  8,  1,  9, 10,  3,  4,  5, 13,  2,  0, 14, 17, 12, 20, 21, 15},
    { 5,  3,  4,  0,  6,  8, 10,  1,  2,  7, 12,  9, 15, 16, 13, 17, 14, 11},
    { 4,  5,  3,  2,  7,  6,  9, 10,  0,  1, 13, 14, 11,  8, 18, 19, 20, 12},
    { 3,  4,  5,  6,  2,  0,  1,  9, 10, 12,  8, 13,  7, 11, 17, 18, 19, 20},
    { 2,  0,  1,  5,  3,  4,  8,  6,  7, 11,  9, 10, 13, 12, 16, 14, 15, 18},
    { 1,  2,  0,  4,  5,  3,  7,  8,  6, 10, 11, 12,  9, 14, 15, 16, 17, 13},
    { 0,  1,  2,  3,  4,  5,  6,  7,  8,  9, 10, 11, 12, 13, 14, 15, 16, 17}
}};

/// 1 where the printed value is set in italics (differs from Wythoff).
inline constexpr std::array<std::array<std::uint8_t, 18>, 18> sg_italic{{
    { 0,  1,  1,  1,  1,  0,  1,  1,  1,  1,  1,  1,  1,  1,  1,  0,  0,  0},
    { 0,  0,  0,  1,  1,  1,  1,  1,  1,  1,  1,  1,  0,  1,  1,  0,  0,  0},
    { 0,  0,  1,  0,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  0,  0},
    { 0,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1},
    { 0,  0,  0,  0,  1,  1,  0,  1,  1,  0,  0,  1,  1,  1,  1,  1,  1,  1},
    { 0,  1,  1,  1,  0,  1,  1,  1,  0,  1,  1,  1,  0,  1,  1,  1,  0,  1},
    { 0,  1,  0,  1,  1,  1,  1,  1,  0,  0,  1,  0,  1,  1,  1,  1,  1,  1},
    { 0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  1,  1,  0,  1,  1,  1,  1},
    { 0,  0,  0,  0,  1,  0,  0,  0,  0,  0,  0,  0,  1,  0,  1,  1,  1,  1},
    { 0,  0,  0,  0,  1,  0,  0,  0,  0,  0,  0,  0,  0,  1,  1,  1,  1,  1},
    { 0,  0,  0,  0,  1,  0,  0,  0,  0,  0,  0,  1,  1,  1,  1,  1,  1,  1},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  1,  1,  0,  1,  1,  1,  1},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  1,  1,  1,  1,  1,  0,  0},
    { 0,  0,  0,  0,  0,  0,  0,  1,  1,  1,  0,  1,  0,  1,  1,  1,  1,  1},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  1,  0,  1,  0,  1,  1},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  1,  1,  0,  1},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  1,  0,  1,  0,  0,  1},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0}
}};

/// Code word of 4-Splythoff steps as quoted in the text.
inline constexpr const char* four_splythoff_code = "012302010420121013002312011132";

} // namespace splythoff::reference
