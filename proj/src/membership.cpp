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

#include "qstar/membership.hpp"

#include <string>
#include <vector>

#include "qstar/exception.hpp"

namespace qstar {

  namespace {
    void check_degree(PartitionedSet const& p, Transformation const& a) {
      if (p.degree() != a.degree()) {
        throw DimensionError("map of degree " + std::to_string(a.degree())
                             + " on a partitioned set of degree "
                             + std::to_string(p.degree()));
      }
    }

    // target[i] = the block that block i maps into, or split when
    // block i is split across several blocks
    constexpr std::size_t split = static_cast<std::size_t>(-1);

    std::vector<std::size_t> block_targets(PartitionedSet const& p,
                                           Transformation const& a) {
      std::vector<std::size_t> target(p.block_count());
      for (std::size_t i = 0; i < p.block_count(); ++i) {
        auto b    = p.block(i);
        target[i] = p.block_of(a[b.front()]);
        for (point_type x : b) {
          if (p.block_of(a[x]) != target[i]) {
            target[i] = split;
            break;
          }
        }
      }
      return target;
    }
  }  // namespace

  bool in_te(PartitionedSet const& p, Transformation const& a) {
    check_degree(p, a);
    for (std::size_t t : block_targets(p, a)) {
      if (t == split) {
        return false;
      }
    }
    return true;
  }

  bool in_te_star(PartitionedSet const& p, Transformation const& a) {
    check_degree(p, a);
    std::vector<bool> used(p.block_count(), false);
    for (std::size_t t : block_targets(p, a)) {
      if (t == split || used[t]) {
        return false;
      }
      used[t] = true;
    }
    return true;
  }

  bool in_te_star_pairwise(PartitionedSet const& p, Transformation const& a) {
    check_degree(p, a);
    for (point_type x = 0; x < p.degree(); ++x) {
      for (point_type y = 0; y < p.degree(); ++y) {
        bool related       = p.block_of(x) == p.block_of(y);
        bool image_related = p.block_of(a[x]) == p.block_of(a[y]);
        if (related != image_related) {
          return false;
        }
      }
    }
    return true;
  }

  bool in_q(PartitionedSet const& p, Transformation const& a) {
    check_degree(p, a);
    std::vector<bool> met(p.block_count(), false);
    for (auto const& b : p.blocks()) {
      for (point_type x : b) {
        if (a[x] != a[b.front()]) {
          return false;
        }
      }
      met[p.block_of(a[b.front()])] = true;
    }
    for (bool m : met) {
      if (!m) {
        return false;
      }
    }
    auto im = image(a);
    if (!is_cross_section(p, im)) {
      throw ConsistencyError("image of " + to_string(a)
                             + " is not a cross-section");
    }
    return true;
  }

  bool is_idempotent_q(PartitionedSet const& p, Transformation const& a) {
    if (!in_q(p, a)) {
      throw ContractError("is_idempotent_q: " + to_string(a) + " is not in Q");
    }
    bool blockwise = true;
    for (std::size_t i = 0; i < p.block_count() && blockwise; ++i) {
      blockwise = p.block_of(a[p.representative(i)]) == i;
    }
    bool algebraic = a * a == a;
    if (blockwise != algebraic) {
      throw ConsistencyError("idempotent tests disagree on " + to_string(a));
    }
    return blockwise;
  }

}  // namespace qstar
