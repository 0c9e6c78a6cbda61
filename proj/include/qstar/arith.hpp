// Copyright 2026 The qstar Authors
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

#ifndef QSTAR_ARITH_HPP_
#define QSTAR_ARITH_HPP_

#include <cstdint>

namespace qstar {

  // Overflow-checked arithmetic on std::uint64_t; throws OverflowError.
  std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
  std::uint64_t checked_factorial(std::uint64_t k);

}  // namespace qstar

#endif  // QSTAR_ARITH_HPP_
