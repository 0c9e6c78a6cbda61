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

#ifndef QSTAR_MAXIMAL_HPP_
#define QSTAR_MAXIMAL_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qstar/engine.hpp"
#include "qstar/partitioned_set.hpp"
#include "qstar/transformation.hpp"

namespace qstar {

  enum class MaximalKind {
    //! H * E(Q) for a maximal subgroup H of the group part.
    group,
    //! H_e * (E(Q) \ {f}) for an idempotent f.
    right_zero
  };

  struct MaximalSubsemigroup {
    MaximalKind  kind;
    SemigroupSet elements;
    //! group kind: the maximal subgroup of the group part.
    std::vector<Transformation> subgroup;
    //! right_zero kind: the omitted idempotent.
    std::optional<Transformation> omitted_idempotent;
  };

  struct MaximalCounts {
    std::uint64_t s_k   = 0;  // maximal subgroups of S_k
    std::uint64_t m     = 0;
    std::uint64_t total = 0;

    bool operator==(MaximalCounts const&) const = default;
  };

  struct MaximalSubsemigroupReport {
    std::vector<MaximalSubsemigroup> group_type;
    std::vector<MaximalSubsemigroup> right_zero_type;
    MaximalCounts                    counts;
    //! Whether every entry was checked with is_maximal_subsemigroup.
    bool verified = false;
  };

  //! All maximal subsemigroups of Q, group type first (in subgroup lattice
  //! order) and then right-zero type (in omitted-idempotent order).
  //!
  //! Requires m >= 2; when m = 1, Q is the group S_k and this throws
  //! UnsupportedCaseError. Entries are verified maximal when
  //! |Q| <= verify_limit.
  MaximalSubsemigroupReport
  maximal_subsemigroups_q(PartitionedSet const& p,
                          Bounds const&         bounds       = {},
                          std::size_t           verify_limit = 200);

  //! (s_k, m, s_k + m) with s_k computed from a fresh S_k table.
  MaximalCounts count_maximal(PartitionedSet const& p, Bounds const& bounds = {});

  //! Practical cap on the number of subsets the oracle will visit.
  inline constexpr std::size_t oracle_subsemigroup_limit = 1 << 22;

  //! Every maximal subsemigroup of \p s, found without using any structure
  //! theory. For each x it searches the maximal closed subsets of s \ {x}
  //! by branching on products that leave the current subset, then keeps the
  //! candidates that every further element closes up to s.
  //!
  //! Requires |s| <= 40; throws ResourceError above that or after visiting
  //! oracle_subsemigroup_limit subsets. Output sorted by element lists.
  std::vector<SemigroupSet> exhaustive_maximal_oracle(SemigroupSet const& s);

}  // namespace qstar

#endif  // QSTAR_MAXIMAL_HPP_
