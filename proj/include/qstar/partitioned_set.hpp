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

#ifndef QSTAR_PARTITIONED_SET_HPP_
#define QSTAR_PARTITIONED_SET_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qstar {

  //! Type of the points of a ground set; points are 0, ..., n - 1.
  using point_type = std::uint32_t;

  //! A finite set {0, ..., n - 1} together with an equivalence relation,
  //! stored as an ordered list of blocks.
  //!
  //! Block order is significant: block indices appear in Q-shorthand tuples
  //! and in every derived enumeration order. Points inside a block are kept
  //! sorted. Instances are immutable after construction.
  class PartitionedSet {
   public:
    //! Validates that \p blocks partition {0, ..., n - 1}.
    //!
    //! Throws ValidationError naming the offending point or block on overlap,
    //! gap, empty block or out-of-range point.
    PartitionedSet(std::size_t n, std::vector<std::vector<point_type>> blocks);

    [[nodiscard]] std::size_t degree() const noexcept {
      return _block_of.size();
    }

    [[nodiscard]] std::size_t block_count() const noexcept {
      return _blocks.size();
    }

    [[nodiscard]] std::span<point_type const> block(std::size_t i) const {
      return _blocks.at(i);
    }

    [[nodiscard]] std::vector<std::vector<point_type>> const&
    blocks() const noexcept {
      return _blocks;
    }

    //! Index of the block containing \p x; throws ValidationError when x is
    //! out of range.
    [[nodiscard]] std::size_t block_of(point_type x) const;

    //! Least point of block \p i.
    [[nodiscard]] point_type representative(std::size_t i) const {
      return _blocks.at(i).front();
    }

    //! Product of the block sizes, i.e. the number of cross-sections.
    //! Throws OverflowError if it does not fit in 64 bits.
    [[nodiscard]] std::uint64_t cross_section_count() const;

    [[nodiscard]] std::vector<std::size_t> block_sizes() const;

    //! True iff every block is a singleton (the identity relation).
    [[nodiscard]] bool is_identity_relation() const noexcept {
      return _blocks.size() == _block_of.size();
    }

    bool operator==(PartitionedSet const&) const = default;

   private:
    std::vector<std::vector<point_type>> _blocks;
    std::vector<std::size_t>             _block_of;
  };

  PartitionedSet make_partitioned_set(std::size_t                          n,
                                      std::vector<std::vector<point_type>> blocks);

  //! Singleton blocks {0}, {1}, ..., {n - 1}.
  PartitionedSet identity_relation(std::size_t n);

  //! Consecutive blocks with the given sizes: sizes {3, 2, 1} gives
  //! {0,1,2} | {3,4} | {5}.
  PartitionedSet from_block_sizes(std::span<std::size_t const> sizes);

  //! True iff \p s meets every block in exactly one point. Duplicate entries
  //! in \p s are ignored; out-of-range points throw ValidationError.
  bool is_cross_section(PartitionedSet const& p, std::span<point_type const> s);

}  // namespace qstar

#endif  // QSTAR_PARTITIONED_SET_HPP_
