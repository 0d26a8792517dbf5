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

#include <stdexcept>
#include <string>

#include "detail.hpp"
#include "halfinfo/statevec.hpp"

namespace halfinfo {

std::string RegisterSet::str() const {
  std::string s;
  if (contains(Register::B)) s += 'B';
  if (contains(Register::A)) s += 'A';
  if (contains(Register::V)) s += 'V';
  return s.empty() ? "-" : s;
}

RegisterLayout::RegisterLayout(int nB, int nA, int nV) : nB_(nB), nA_(nA), nV_(nV) {
  if (nB < 1 || nA < 1 || nV < 0) {
    throw std::invalid_argument("register layout needs nB >= 1, nA >= 1, nV >= 0");
  }
  if (nB + nA + nV > 24) {
    throw std::invalid_argument("register layout of " + std::to_string(nB + nA + nV) +
                                " qubits exceeds the 2^24 amplitude budget");
  }
}

int RegisterLayout::qubits(Register r) const {
  switch (r) {
    case Register::B:
      return nB_;
    case Register::A:
      return nA_;
    case Register::V:
      return nV_;
  }
  return 0;
}

int RegisterLayout::qubits(RegisterSet s) const { return detail::Bits::of(*this).width(s); }

BasisIndex RegisterLayout::extract(RegisterSet s, BasisIndex full) const {
  return detail::Bits::of(*this).extract(s, full);
}

BasisIndex RegisterLayout::join(RegisterSet s, BasisIndex sub, BasisIndex rest) const {
  return detail::Bits::of(*this).join(s, sub, rest);
}

}  // namespace halfinfo
