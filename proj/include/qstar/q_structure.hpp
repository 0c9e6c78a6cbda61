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

#ifndef QSTAR_Q_STRUCTURE_HPP_
#define QSTAR_Q_STRUCTURE_HPP_

// Structure of Q: the maps that collapse every block to a point and whose
// image meets every block. Q is a right group, isomorphic to the direct
// product of the symmetric group on the blocks and the right zero semigroup
// of its idempotents.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qstar/engine.hpp"
#include "qstar/partitioned_set.hpp"
#include "qstar/transformation.hpp"

namespace qstar {

  //! k! * m, overflow-checked.
  std::uint64_t cardinality_q(PartitionedSet const& p);

  //! Q is a group exactly when every block is a singleton.
  bool is_group_q(PartitionedSet const& p);

  //! All of Q, built from (block permutation) x (cross-section) rather than
  //! by filtering all n^n maps. Every member is checked with in_q, and
  //! closedness is checked when |Q| <= closed_check_limit.
  SemigroupSet enumerate_q(PartitionedSet const& p,
                           std::size_t           max_size = Bounds{}.max_closure,
                           std::size_t           closed_check_limit = 1000);

  //! One idempotent per cross-section, in canonical order; there are m.
  std::vector<Transformation> idempotents_q(PartitionedSet const& p,
                                            std::size_t max_size
                                            = Bounds{}.max_closure);

  //! The element of Q sending every point of block i to section[perm[i]],
  //! where section[j] is a point of block j.
  Transformation q_element(PartitionedSet const&           p,
                           std::span<std::size_t const>    perm,
                           std::span<point_type const>     section);

  //! perm[i] = index of the block that block i is mapped into. Multiplicative:
  //! block_permutation(ab) = block_permutation(a) followed by
  //! block_permutation(b). Requires a in Q.
  std::vector<std::size_t> block_permutation(PartitionedSet const& p,
                                             Transformation const& a);

  //! The image of a in Q, indexed by block: section[i] is the unique image
  //! point in block i.
  std::vector<point_type> image_section(PartitionedSet const& p,
                                        Transformation const& a);

  //! The idempotent of Q with the same image as \p a (the identity of a's
  //! H-class).
  Transformation idempotent_of(PartitionedSet const& p, Transformation const& a);

  //! All elements of Q with the same image as \p a, built from the k! block
  //! permutations. Throws ContractError unless a is in Q.
  GroupTable h_class(PartitionedSet const& p,
                     Transformation const& a,
                     std::size_t max_order = Bounds{}.max_group_order);

  //! Q = H_e * E(Q) for the canonically least idempotent e.
  struct RightGroupDecomposition {
    Transformation              base_idempotent;
    GroupTable                  group_part;
    std::vector<Transformation> idempotent_part;

    //! The pairing (a, f) -> af on indices of group_part and idempotent_part.
    [[nodiscard]] Transformation pair(std::size_t a, std::size_t f) const {
      return group_part.element(a) * idempotent_part[f];
    }
  };

  //! Builds the decomposition and checks that the pairing is a bijection onto
  //! enumerate_q(p); ConsistencyError otherwise.
  RightGroupDecomposition decompose(PartitionedSet const& p,
                                    Bounds const&         bounds = {});

  //! Inverse of the pairing: x = pair(first, second).
  std::pair<std::size_t, std::size_t>
  split(PartitionedSet const& p, RightGroupDecomposition const& d,
        Transformation const& x);

}  // namespace qstar

#endif  // QSTAR_Q_STRUCTURE_HPP_
