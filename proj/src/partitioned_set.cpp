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

#include "qstar/partitioned_set.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "qstar/arith.hpp"
#include "qstar/exception.hpp"

namespace qstar {

  std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
      throw OverflowError("integer overflow computing " + std::to_string(a)
                          + " * " + std::to_string(b));
    }
    return a * b;
  }

  std::uint64_t checked_factorial(std::uint64_t k) {
    std::uint64_t result = 1;
    for (std::uint64_t i = 2; i <= k; ++i) {
      result = checked_mul(result, i);
    }
    return result;
  }

  PartitionedSet::PartitionedSet(std::size_t                          n,
                                 std::vector<std::vector<point_type>> blocks)
      : _blocks(std::move(blocks)), _block_of() {
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    if (n == 0) {
      throw ValidationError("the ground set must be nonempty");
    }
    _block_of.assign(n, unset);
    for (std::size_t i = 0; i < _blocks.size(); ++i) {
      auto& b = _blocks[i];
      if (b.empty()) {
        throw ValidationError("block " + std::to_string(i) + " is empty");
      }
      std::sort(b.begin(), b.end());
      for (point_type x : b) {
        if (x >= n) {
          throw ValidationError("point " + std::to_string(x) + " in block "
                                + std::to_string(i) + " is out of range [0, "
                                + std::to_string(n) + ")");
        }
        if (_block_of[x] != unset) {
          throw ValidationError("point " + std::to_string(x)
                                + " occurs in blocks "
                                + std::to_string(_block_of[x]) + " and "
                                + std::to_string(i));
        }
        _block_of[x] = i;
      }
    }
    auto gap = std::find(_block_of.begin(), _block_of.end(), unset);
    if (gap != _block_of.end()) {
      throw ValidationError("point "
                            + std::to_string(gap - _block_of.begin())
                            + " is not covered by any block");
    }
  }

  std::size_t PartitionedSet::block_of(point_type x) const {
    if (x >= _block_of.size()) {
      throw ValidationError("point " + std::to_string(x)
                            + " is out of range [0, "
                            + std::to_string(_block_of.size()) + ")");
    }
    return _block_of[x];
  }

  std::uint64_t PartitionedSet::cross_section_count() const {
    std::uint64_t m = 1;
    for (auto const& b : _blocks) {
      m = checked_mul(m, b.size());
    }
    return m;
  }

  std::vector<std::size_t> PartitionedSet::block_sizes() const {
    std::vector<std::size_t> out;
    out.reserve(_blocks.size());
    for (auto const& b : _blocks) {
      out.push_back(b.size());
    }
    return out;
  }

  PartitionedSet make_partitioned_set(std::size_t                          n,
                                      std::vector<std::vector<point_type>> blocks) {
    return PartitionedSet(n, std::move(blocks));
  }

  PartitionedSet identity_relation(std::size_t n) {
    std::vector<std::vector<point_type>> blocks(n);
    for (std::size_t i = 0; i < n; ++i) {
      blocks[i] = {static_cast<point_type>(i)};
    }
    return PartitionedSet(n, std::move(blocks));
  }

  PartitionedSet from_block_sizes(std::span<std::size_t const> sizes) {
    std::vector<std::vector<point_type>> blocks;
    point_type                           next = 0;
    for (std::size_t s : sizes) {
      std::vector<point_type> b(s);
      for (auto& x : b) {
        x = next++;
      }
      blocks.push_back(std::move(b));
    }
    return PartitionedSet(next, std::move(blocks));
  }

  bool is_cross_section(PartitionedSet const& p, std::span<point_type const> s) {
    std::vector<point_type> pts(s.begin(), s.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<std::size_t> hits(p.block_count(), 0);
    for (point_type x : pts) {
      ++hits[p.block_of(x)];
    }
    return std::all_of(
        hits.begin(), hits.end(), [](std::size_t h) { return h == 1; });
  }

}  // namespace qstar
