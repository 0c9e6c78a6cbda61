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

#ifndef QSTAR_RANK_HPP_
#define QSTAR_RANK_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qstar/engine.hpp"
#include "qstar/partitioned_set.hpp"
#include "qstar/transformation.hpp"

namespace qstar {

  //! Minimum size of a generating set of Q.
  //!
  //! max{2, m} when some block has two or more points. When every block is a
  //! singleton Q is the symmetric group S_k, whose rank is 1 for k <= 2
  //! (S_2 is cyclic) and 2 otherwise.
  std::uint64_t rank_q(PartitionedSet const& p);

  //! The canonically least idempotent: each block maps to its least point.
  Transformation base_idempotent(PartitionedSet const& p);

  //! A minimal generating set of the H-class of base_idempotent(p): for k >= 3
  //! the block transposition (0 1) and the block cycle i -> i + 1 (mod k),
  //! for k = 2 the transposition, for k = 1 the idempotent itself.
  std::vector<Transformation> symmetric_part_generators(PartitionedSet const& p);

  struct GeneratingSetReport {
    std::vector<Transformation> generators;
    std::uint64_t               claimed_rank = 0;
    //! (g, g phi) for each group generator g.
    std::vector<std::pair<Transformation, Transformation>> phi;
    //! Idempotents outside the image of phi, each contributing e f.
    std::vector<Transformation> leftover;
    //! True when phi is an injection (|G| <= m), false for a surjection.
    bool injective = true;
  };

  //! A generating set of Q of size rank_q(p).
  //!
  //! Pairs each group generator g with an idempotent g phi (order-respecting
  //! injection, or surjection when there are more generators than
  //! idempotents) and emits g (g phi), plus e f for every idempotent f missed
  //! by phi. The result is always checked against closure before it is
  //! returned; a mismatch throws ConsistencyError.
  GeneratingSetReport minimal_generating_set(PartitionedSet const& p,
                                             Bounds const&         bounds = {});

  //! True iff every H-class of Q contains one of \p gens. Throws
  //! ContractError if gens do not generate Q.
  bool generating_set_hits_every_hclass(std::span<Transformation const> gens,
                                        PartitionedSet const&           p,
                                        Bounds const& bounds = {});

  //! Non-generation certificate from the block-permutation homomorphism.
  //!
  //! The block permutations of \p gens generate a subgroup of S_k of order
  //! generated_order. If it is smaller than k!, \p gens cannot generate Q and
  //! witness is an element of Q outside the subsemigroup they generate.
  struct BlockPermutationCertificate {
    std::uint64_t                 generated_order = 0;
    std::uint64_t                 full_order      = 0;
    std::optional<Transformation> witness;

    [[nodiscard]] bool generates_all() const noexcept {
      return generated_order == full_order;
    }
  };

  BlockPermutationCertificate
  block_permutation_certificate(PartitionedSet const&           p,
                                std::span<Transformation const> gens,
                                Bounds const&                   bounds = {});

}  // namespace qstar

#endif  // QSTAR_RANK_HPP_
