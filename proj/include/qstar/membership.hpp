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

#ifndef QSTAR_MEMBERSHIP_HPP_
#define QSTAR_MEMBERSHIP_HPP_

#include "qstar/partitioned_set.hpp"
#include "qstar/transformation.hpp"

namespace qstar {

  // All predicates throw DimensionError when the map and the partition have
  // different degrees.

  //! E-related points have E-related images: every block maps into a block.
  bool in_te(PartitionedSet const& p, Transformation const& a);

  //! Points are E-related iff their images are: every block maps into one
  //! block and distinct blocks map into distinct blocks.
  bool in_te_star(PartitionedSet const& p, Transformation const& a);

  //! The quadratic pairwise form of in_te_star, checked over all pairs.
  bool in_te_star_pairwise(PartitionedSet const& p, Transformation const& a);

  //! Every block has a one-point image and every block meets the image.
  //! A true result implies the image is a cross-section (checked).
  bool in_q(PartitionedSet const& p, Transformation const& a);

  //! For a in Q: a is idempotent iff every block maps into itself.
  //!
  //! Both that test and a * a == a are evaluated; ConsistencyError if they
  //! disagree, ContractError if a is not in Q.
  bool is_idempotent_q(PartitionedSet const& p, Transformation const& a);

}  // namespace qstar

#endif  // QSTAR_MEMBERSHIP_HPP_
