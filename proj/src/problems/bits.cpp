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

#include "halfinfo/bits.hpp"

#include <stdexcept>
#include <string>

namespace halfinfo {

BitString BitString::parse(std::string_view text) {
  if (text.size() > 64) throw std::invalid_argument("bit string longer than 64 bits");
  BitString out;
  out.width = static_cast<int>(text.size());
  for (const char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("not a bit string: '" + std::string(text) + "'");
    out.bits = (out.bits << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return out;
}

std::string to_bits(std::uint64_t value, int width) {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int i = 0; i < width; ++i) {
    if ((value >> (width - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

std::string BitString::str() const { return to_bits(bits, width); }

BitString BitString::complement() const {
  const std::uint64_t mask = width == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
  return {~bits & mask, width};
}

}  // namespace halfinfo
