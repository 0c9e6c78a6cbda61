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

#ifndef QSTAR_ISO_HPP_
#define QSTAR_ISO_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "qstar/engine.hpp"
#include "qstar/partitioned_set.hpp"

namespace qstar {

  //! (number of blocks, product of block sizes). Two partitioned sets have
  //! isomorphic Q exactly when their keys agree.
  struct IsoClassKey {
    std::size_t   k = 0;
    std::uint64_t m = 0;

    auto operator<=>(IsoClassKey const&) const = default;
  };

  IsoClassKey iso_class_key(PartitionedSet const& p);

  bool q_isomorphic(PartitionedSet const& p1, PartitionedSet const& p2);

  //! The same question answered through the right-group decomposition:
  //! group parts isomorphic (by search) and equally many idempotents.
  bool q_isomorphic_by_decomposition(PartitionedSet const& p1,
                                     PartitionedSet const& p2,
                                     Bounds const&         bounds = {});

  //! An explicit isomorphism enumerate_q(p1) -> enumerate_q(p2).
  struct QIsomorphism {
    SemigroupSet             domain;
    SemigroupSet             codomain;
    std::vector<std::size_t> image;  // domain index -> codomain index
    //! block_map[i] is the block of p2 matched with block i of p1.
    std::vector<std::size_t> block_map;
    //! true when all |Q|^2 products were checked, false when sampled.
    bool exhaustive = false;
    std::size_t pairs_checked = 0;
  };

  //! Builds the isomorphism from a block bijection (blocks matched in
  //! size-then-index order) on the group parts and the order-preserving
  //! bijection of idempotents, then checks it is a bijective homomorphism:
  //! on all pairs when |Q| <= exhaustive_limit, otherwise on \p samples
  //! random pairs drawn with \p seed.
  //!
  //! Throws ContractError when the keys differ and ConsistencyError when
  //! verification fails.
  QIsomorphism build_isomorphism(PartitionedSet const& p1,
                                 PartitionedSet const& p2,
                                 Bounds const&         bounds           = {},
                                 std::size_t           exhaustive_limit = 200,
                                 std::size_t           samples          = 20'000,
                                 std::uint64_t         seed             = 0);

  //! Integer partitions of n as non-increasing block-size lists, in reverse
  //! lexicographic order ({n} first, {1, ..., 1} last).
  std::vector<std::vector<std::size_t>> integer_partitions(std::size_t n);

  //! All integer partitions of n grouped by key. Requires 1 <= n <= 12.
  std::map<IsoClassKey, std::vector<std::vector<std::size_t>>>
  classify_partitions(std::size_t n);

}  // namespace qstar

#endif  // QSTAR_ISO_HPP_
