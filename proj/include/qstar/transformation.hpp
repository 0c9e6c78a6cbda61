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

#ifndef QSTAR_TRANSFORMATION_HPP_
#define QSTAR_TRANSFORMATION_HPP_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qstar/partitioned_set.hpp"

namespace qstar {

  //! A total map of {0, ..., n - 1} into itself.
  //!
  //! Maps act on the right: `a[x]` is the image of x under a, and the product
  //! `a * b` applies a first and then b. Transformations are totally ordered
  //! lexicographically by their image sequence; this is the canonical order
  //! used for deduplication and all output.
  class Transformation {
   public:
    Transformation() = default;

    //! Throws ValidationError if some image is >= images.size().
    explicit Transformation(std::vector<point_type> images);

    static Transformation identity(std::size_t n);
    static Transformation constant(std::size_t n, point_type c);

    [[nodiscard]] std::size_t degree() const noexcept {
      return _images.size();
    }

    [[nodiscard]] point_type operator[](point_type x) const {
      return _images[x];
    }

    [[nodiscard]] std::span<point_type const> images() const noexcept {
      return _images;
    }

    auto operator<=>(Transformation const&) const = default;
    bool operator==(Transformation const&) const  = default;

   private:
    std::vector<point_type> _images;
  };

  struct TransformationHash {
    std::size_t operator()(Transformation const& t) const noexcept;
  };

  //! The product ab: x(ab) = (xa)b. Throws DimensionError on degree mismatch.
  Transformation compose(Transformation const& a, Transformation const& b);

  inline Transformation operator*(Transformation const& a,
                                  Transformation const& b) {
    return compose(a, b);
  }

  //! Image set, sorted ascending.
  std::vector<point_type> image(Transformation const& a);

  //! The partition of the domain into fibres of a map.
  //!
  //! classes[i] is the fibre of class_image[i]; classes are ordered by their
  //! least element and points inside a class are sorted.
  struct KernelPartition {
    std::vector<std::vector<point_type>> classes;
    std::vector<point_type>              class_image;

    bool operator==(KernelPartition const&) const = default;
  };

  KernelPartition kernel_partition(Transformation const& a);

  //! The map sending every point of block i of \p p to tuple[i].
  Transformation from_q_tuple(PartitionedSet const&        p,
                              std::span<point_type const>  tuple);

  //! Inverse of from_q_tuple; throws ContractError if \p a is not constant on
  //! every block of \p p.
  std::vector<point_type> q_tuple(PartitionedSet const& p, Transformation const& a);

  //! "[2,2,2,5,5,6]" with 1-based labels.
  std::string to_string(Transformation const& a);

  //! "(1,4,6)" with 1-based labels; requires a constant on blocks.
  std::string to_q_string(PartitionedSet const& p, Transformation const& a);

}  // namespace qstar

#endif  // QSTAR_TRANSFORMATION_HPP_
