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

#ifndef QSTAR_ENGINE_HPP_
#define QSTAR_ENGINE_HPP_

// Brute-force machinery: closure, Green's R, right-group tests, subgroup
// lattices of small groups, maximality, and small-group isomorphism. Nothing
// in here knows anything about partitions; the structural modules are
// checked against it.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qstar/transformation.hpp"

namespace qstar {

  //! Size bounds shared by the engine and the modules built on top of it.
  struct Bounds {
    std::size_t max_closure     = 100'000;
    std::size_t max_group_order = 120;
  };

  //! A finite composition-closed set of transformations of one degree.
  //!
  //! Elements are distinct and sorted in the canonical order. The generators
  //! (if any) record how the set was produced.
  class SemigroupSet {
   public:
    //! Sorts and deduplicates \p elements, then checks closure under
    //! composition; throws ContractError if not closed or empty.
    static SemigroupSet from_elements(std::vector<Transformation> elements);

    //! As from_elements but without the quadratic closedness check; the
    //! caller guarantees closure.
    static SemigroupSet trusted(std::vector<Transformation> sorted_elements,
                                std::vector<Transformation> generators = {});

    [[nodiscard]] std::size_t size() const noexcept {
      return _elements.size();
    }

    [[nodiscard]] std::size_t degree() const noexcept {
      return _elements.front().degree();
    }

    [[nodiscard]] std::vector<Transformation> const& elements() const noexcept {
      return _elements;
    }

    [[nodiscard]] std::vector<Transformation> const&
    generators() const noexcept {
      return _generators;
    }

    [[nodiscard]] Transformation const& operator[](std::size_t i) const {
      return _elements[i];
    }

    [[nodiscard]] bool contains(Transformation const& a) const;

    //! Position of \p a in elements(), if present.
    [[nodiscard]] std::optional<std::size_t>
    index_of(Transformation const& a) const;

    //! Same elements; generators are ignored.
    bool operator==(SemigroupSet const& that) const {
      return _elements == that._elements;
    }

   private:
    SemigroupSet() = default;

    std::vector<Transformation> _elements;
    std::vector<Transformation> _generators;
  };

  //! The subsemigroup generated by \p gens.
  //!
  //! Throws ContractError for empty or mixed-degree input, ResourceError
  //! when the result would exceed \p max_size elements.
  SemigroupSet closure(std::span<Transformation const> gens,
                       std::size_t max_size = Bounds{}.max_closure);

  //! True iff every product of two elements of \p elements lies in it.
  bool is_closed(std::span<Transformation const> elements);

  //! Multiplication table of a SemigroupSet on element indices.
  class CayleyTable {
   public:
    explicit CayleyTable(SemigroupSet const& s);

    [[nodiscard]] std::size_t size() const noexcept {
      return _n;
    }

    [[nodiscard]] std::size_t product(std::size_t i, std::size_t j) const {
      return _table[i * _n + j];
    }

    //! Subsets of at most 64 elements as bitmasks over element indices.
    using mask_type = std::uint64_t;

    //! Smallest closed superset of \p closed_set ∪ {x}; \p closed_set must
    //! itself be closed (0 is). Requires size() <= 64.
    [[nodiscard]] mask_type close_with(mask_type closed_set, std::size_t x) const;

    //! Subsemigroup generated by \p gens (0 for the empty set).
    [[nodiscard]] mask_type close(mask_type gens) const;

    [[nodiscard]] mask_type full() const noexcept;

   private:
    std::size_t              _n;
    std::vector<std::size_t> _table;
  };

  //! Indices of at most \p max_size elements of \p s that generate s, if
  //! such a subset exists. Exhaustive depth-first search over subsets with
  //! incremental closure; requires |s| <= 64.
  std::optional<std::vector<std::size_t>>
  find_generating_subset(SemigroupSet const& s, std::size_t max_size);

  //! Green's R in the full transformation semigroup, via kernels.
  bool green_r_related(Transformation const& a, Transformation const& b);

  //! Green's R computed inside \p s from principal right ideals aS^1, bS^1.
  //! Throws ContractError unless a, b are in s.
  bool green_r_definitional(Transformation const& a,
                            Transformation const& b,
                            SemigroupSet const&   s);

  //! For all a, b in s there is exactly one x in s with ax = b.
  bool is_right_group(SemigroupSet const& s);
  bool is_regular_semigroup(SemigroupSet const& s);
  bool is_left_cancellative(SemigroupSet const& s);

  //! Every element has some b in s with aba = a. Throws ContractError if
  //! a is not in s.
  bool is_regular_element(Transformation const& a, SemigroupSet const& s);

  //! A finite group of transformations with its multiplication table.
  class GroupTable {
   public:
    //! Verifies closure, a two-sided identity and inverses; throws
    //! ContractError otherwise and ResourceError above \p max_order.
    static GroupTable from_elements(std::vector<Transformation> elements,
                                    std::size_t max_order
                                    = Bounds{}.max_group_order);

    [[nodiscard]] std::size_t order() const noexcept {
      return _elements.size();
    }

    [[nodiscard]] std::vector<Transformation> const& elements() const noexcept {
      return _elements;
    }

    [[nodiscard]] Transformation const& element(std::size_t i) const {
      return _elements[i];
    }

    [[nodiscard]] std::size_t identity() const noexcept {
      return _identity;
    }

    [[nodiscard]] std::size_t inverse(std::size_t i) const {
      return _inverse[i];
    }

    [[nodiscard]] std::size_t product(std::size_t i, std::size_t j) const {
      return _table[i * order() + j];
    }

    [[nodiscard]] std::size_t element_order(std::size_t i) const;

    [[nodiscard]] std::optional<std::size_t>
    index_of(Transformation const& a) const;

    [[nodiscard]] std::size_t max_order() const noexcept {
      return _max_order;
    }

   private:
    GroupTable() = default;

    std::vector<Transformation> _elements;
    std::vector<std::size_t>    _table;
    std::vector<std::size_t>    _inverse;
    std::size_t                 _identity  = 0;
    std::size_t                 _max_order = 0;
  };

  //! A subgroup as a sorted list of element indices of its GroupTable.
  using Subgroup = std::vector<std::size_t>;

  //! Subgroup generated by the given element indices.
  Subgroup subgroup_closure(GroupTable const& g, std::span<std::size_t const> gens);

  //! All subgroups, sorted by order and then lexicographically.
  //!
  //! Starts from the cyclic subgroups and joins with cyclic subgroups until
  //! nothing new appears. Throws ResourceError above the table's bound.
  std::vector<Subgroup> subgroup_lattice(GroupTable const& g);

  //! Proper subgroups contained in no other proper subgroup, in lattice order.
  std::vector<Subgroup> maximal_subgroups(GroupTable const& g);

  //! True iff \p t is a maximal subsemigroup of \p s. Throws ContractError
  //! unless t is a proper subset of s.
  bool is_maximal_subsemigroup(SemigroupSet const& t, SemigroupSet const& s);

  //! An isomorphism from \p g1 to \p g2 as a map on element indices, if one
  //! exists.
  std::optional<std::vector<std::size_t>>
  find_group_isomorphism(GroupTable const& g1, GroupTable const& g2);

  bool groups_isomorphic(GroupTable const& g1, GroupTable const& g2);

  //! The symmetric group on {0, ..., k - 1}, built directly as permutations.
  GroupTable symmetric_group(std::size_t k,
                             std::size_t max_order = Bounds{}.max_group_order);

}  // namespace qstar

#endif  // QSTAR_ENGINE_HPP_
