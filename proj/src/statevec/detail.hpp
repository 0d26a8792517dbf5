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

#include <functional>

#include "halfinfo/statevec.hpp"

namespace halfinfo::detail {

// Register widths without the validation RegisterLayout performs; nB = 0 is
// used for a single A (x) V block.
struct Bits {
  int nB;
  int nA;
  int nV;

  static Bits of(const RegisterLayout& l) { return {l.nB(), l.nA(), l.nV()}; }
  static Bits block_of(const RegisterLayout& l) { return {0, l.nA(), l.nV()}; }

  int width(RegisterSet s) const {
    return (s.contains(Register::B) ? nB : 0) + (s.contains(Register::A) ? nA : 0) +
           (s.contains(Register::V) ? nV : 0);
  }
  int total() const { return nB + nA + nV; }

  BasisIndex extract(RegisterSet s, BasisIndex full) const {
    const BasisIndex v = full & ((BasisIndex{1} << nV) - 1);
    const BasisIndex a = (full >> nV) & ((BasisIndex{1} << nA) - 1);
    const BasisIndex b = full >> (nA + nV);
    BasisIndex r = 0;
    if (s.contains(Register::B)) r = (r << nB) | b;
    if (s.contains(Register::A)) r = (r << nA) | a;
    if (s.contains(Register::V)) r = (r << nV) | v;
    return r;
  }

  BasisIndex join(RegisterSet s, BasisIndex sub, BasisIndex rest) const {
    BasisIndex parts[3] = {0, 0, 0};  // b, a, v
    const auto take = [&](RegisterSet set, BasisIndex idx) {
      if (set.contains(Register::V)) {
        parts[2] = idx & ((BasisIndex{1} << nV) - 1);
        idx >>= nV;
      }
      if (set.contains(Register::A)) {
        parts[1] = idx & ((BasisIndex{1} << nA) - 1);
        idx >>= nA;
      }
      if (set.contains(Register::B)) parts[0] = idx;
    };
    take(s, sub);
    take(s.complement(), rest);
    return (parts[0] << (nA + nV)) | (parts[1] << nV) | parts[2];
  }
};

// Applies `fn` to every slice of `vec` along the registers of `target`.
// The slice is gathered into a contiguous vector, transformed in place and
// scattered back.
inline void for_each_slice(CVector& vec, const Bits& bits, RegisterSet target,
                           const std::function<void(CVector&)>& fn) {
  const int t = bits.width(target);
  const int rest_width = bits.total() - t;
  const BasisIndex tdim = BasisIndex{1} << t;
  const BasisIndex rdim = BasisIndex{1} << rest_width;
  CVector slice(static_cast<Eigen::Index>(tdim));
  for (BasisIndex r = 0; r < rdim; ++r) {
    bool nonzero = false;
    for (BasisIndex i = 0; i < tdim; ++i) {
      slice[static_cast<Eigen::Index>(i)] = vec[static_cast<Eigen::Index>(bits.join(target, i, r))];
      nonzero = nonzero || slice[static_cast<Eigen::Index>(i)] != Complex{};
    }
    if (!nonzero) continue;
    fn(slice);
    for (BasisIndex i = 0; i < tdim; ++i) {
      vec[static_cast<Eigen::Index>(bits.join(target, i, r))] = slice[static_cast<Eigen::Index>(i)];
    }
  }
}

CVector to_dense(const RegisterLayout& layout, const PhaseTaggedState::Branch& branch);
PhaseTaggedState::Branch to_branch(const RegisterLayout& layout, const CVector& dense);

// Applies `fn` slice-wise on `target`, working block by block when B is not
// touched and through a dense full vector otherwise.
void transform_branch(const RegisterLayout& layout, PhaseTaggedState::Branch& branch, RegisterSet target,
                      const std::function<void(CVector&)>& fn);

void prune(PhaseTaggedState::Branch& branch);
double branch_norm_squared(const PhaseTaggedState::Branch& branch);

}  // namespace halfinfo::detail
