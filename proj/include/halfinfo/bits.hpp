// Copyright 2026 The halfinfo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace halfinfo {

/// Fixed-width bit string. Character 0 of the text form is the most
/// significant bit, matching ket notation (|01> has bits == 1).
struct BitString {
  std::uint64_t bits = 0;
  int width = 0;

  /// Throws std::invalid_argument on characters other than '0'/'1' or
  /// strings longer than 64.
  static BitString parse(std::string_view text);

  std::string str() const;
  /// Bit at position i counted from the left.
  int at(int i) const { return static_cast<int>((bits >> (width - 1 - i)) & 1u); }
  BitString complement() const;

  friend bool operator==(const BitString&, const BitString&) = default;
  friend auto operator<=>(const BitString&, const BitString&) = default;
};

/// Bitwise dot product modulo 2.
inline int dot_mod2(std::uint64_t x, std::uint64_t y) { return __builtin_popcountll(x & y) & 1; }

std::string to_bits(std::uint64_t value, int width);

}  // namespace halfinfo
