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

#ifndef QSTAR_TESTS_FIXTURES_HPP_
#define QSTAR_TESTS_FIXTURES_HPP_

// The six-point example: X = {1, ..., 6}, blocks {1,2,3} | {4,5} | {6}, and
// its 36 elements alpha_1, ..., alpha_36 written as one image per block.

#include <array>
#include <cstddef>
#include <vector>

#include "qstar/partitioned_set.hpp"
#include "qstar/transformation.hpp"

namespace qstar::test {

  inline PartitionedSet p6() {
    return make_partitioned_set(6, {{0, 1, 2}, {3, 4}, {5}});
  }

  // 1-based tuples, alpha_1 first
  inline constexpr std::array<std::array<point_type, 3>, 36> alpha_tuples{{
      {1, 4, 6}, {2, 4, 6}, {3, 4, 6}, {1, 5, 6}, {2, 5, 6}, {3, 5, 6},
      {4, 1, 6}, {4, 2, 6}, {4, 3, 6}, {5, 1, 6}, {5, 2, 6}, {5, 3, 6},
      {4, 6, 1}, {4, 6, 2}, {4, 6, 3}, {5, 6, 1}, {5, 6, 2}, {5, 6, 3},
      {6, 1, 4}, {6, 2, 4}, {6, 3, 4}, {6, 1, 5}, {6, 2, 5}, {6, 3, 5},
      {1, 6, 4}, {2, 6, 4}, {3, 6, 4}, {1, 6, 5}, {2, 6, 5}, {3, 6, 5},
      {6, 4, 1}, {6, 4, 2}, {6, 4, 3}, {6, 5, 1}, {6, 5, 2}, {6, 5, 3},
  }};

  //! alpha(i) for 1 <= i <= 36.
  inline Transformation alpha(std::size_t i) {
    auto const&             t = alpha_tuples.at(i - 1);
    std::vector<point_type> tuple{t[0] - 1, t[1] - 1, t[2] - 1};
    return from_q_tuple(p6(), tuple);
  }

  inline std::vector<Transformation> alphas(std::vector<std::size_t> const& idx) {
    std::vector<Transformation> out;
    for (auto i : idx) {
      out.push_back(alpha(i));
    }
    return out;
  }

  inline std::vector<Transformation> alpha_range(std::size_t lo, std::size_t hi) {
    std::vector<Transformation> out;
    for (auto i = lo; i <= hi; ++i) {
      out.push_back(alpha(i));
    }
    return out;
  }

}  // namespace qstar::test

#endif  // QSTAR_TESTS_FIXTURES_HPP_
