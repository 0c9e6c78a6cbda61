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

#ifndef QSTAR_IO_HPP_
#define QSTAR_IO_HPP_

// Text and JSON forms. Every external form uses 1-based point labels.

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"

#include "qstar/engine.hpp"
#include "qstar/partitioned_set.hpp"
#include "qstar/transformation.hpp"

namespace qstar {

  using json = nlohmann::ordered_json;

  //! "1,2,3|4,5|6"; the ground set is {1, ..., total number of points}.
  PartitionedSet parse_partition(std::string_view text);
  std::string    to_compact(PartitionedSet const& p);

  //! {"n": 6, "blocks": [[1,2,3],[4,5],[6]]}
  json           to_json(PartitionedSet const& p);
  PartitionedSet partition_from_json(json const& j);

  //! "1,1,1,4,4,6"
  Transformation parse_map(std::string_view text);

  //! {"images": [...]}
  json to_json(Transformation const& a);

  //! Accepts {"images": [...]} or, given a partition, {"q": [...]}.
  Transformation transformation_from_json(json const&           j,
                                          PartitionedSet const* p = nullptr);

  //! Sorted array of image sequences.
  json         to_json(SemigroupSet const& s);
  SemigroupSet semigroup_from_json(json const& j);

  //! An exact count: a JSON number up to 2^53 - 1, a decimal string above.
  json exact_count(std::uint64_t v);

}  // namespace qstar

#endif  // QSTAR_IO_HPP_
