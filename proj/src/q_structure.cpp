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

#include "qstar/q_structure.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qstar/arith.hpp"
#include "qstar/exception.hpp"
#include "qstar/membership.hpp"

namespace qstar {

  std::uint64_t cardinality_q(PartitionedSet const& p) {
    return checked_mul(checked_factorial(p.block_count()),
                       p.cross_section_count());
  }

  bool is_group_q(PartitionedSet const& p) {
    return p.is_identity_relation();
  }

  Transformation q_element(PartitionedSet const&        p,
                           std::span<std::size_t const> perm,
                           std::span<point_type const>  section) {
    std::vector<point_type> im(p.degree());
    for (std::size_t i = 0; i < p.block_count(); ++i) {
      for (point_type x : p.block(i)) {
        im[x] = section[perm[i]];
      }
    }
    return Transformation(std::move(im));
  }

  namespace {
    std::vector<std::size_t> identity_permutation(std::size_t k) {
      std::vector<std::size_t> perm(k);
      std::iota(perm.begin(), perm.end(), 0);
      return perm;
    }

    // Calls f(section) for every cross-section, block 0 varying slowest.
    template <typename Func>
    void for_each_section(PartitionedSet const& p, Func&& f) {
      std::size_t const        k = p.block_count();
      std::vector<std::size_t> digit(k, 0);
      std::vector<point_type>  section(k);
      while (true) {
        for (std::size_t i = 0; i < k; ++i) {
          section[i] = p.block(i)[digit[i]];
        }
        f(section);
        std::size_t i = k;
        while (i > 0) {
          --i;
          if (++digit[i] < p.block(i).size()) {
            break;
          }
          digit[i] = 0;
          if (i == 0) {
            return;
          }
        }
      }
    }

    void check_in_q(PartitionedSet const& p, Transformation const& a) {
      if (!in_q(p, a)) {
        throw ContractError(to_string(a) + " is not in Q");
      }
    }
  }  // namespace

  SemigroupSet enumerate_q(PartitionedSet const& p,
                           std::size_t           max_size,
                           std::size_t           closed_check_limit) {
    std::uint64_t const size = cardinality_q(p);
    if (size > max_size) {
      throw ResourceError("|Q| = " + std::to_string(size) + " exceeds the bound "
                          + std::to_string(max_size));
    }
    std::vector<Transformation> elements;
    elements.reserve(size);
    auto perm = identity_permutation(p.block_count());
    do {
      for_each_section(p, [&](std::vector<point_type> const& section) {
        elements.push_back(q_element(p, perm, section));
      });
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
      throw ConsistencyError("enumerate_q produced a duplicate element");
    }
    for (auto const& a : elements) {
      if (!in_q(p, a)) {
        throw ConsistencyError("enumerate_q produced " + to_string(a)
                               + " which is not in Q");
      }
    }
    if (elements.size() <= closed_check_limit && !is_closed(elements)) {
      throw ConsistencyError("enumerate_q produced a set that is not closed");
    }
    return SemigroupSet::trusted(std::move(elements));
  }

  std::vector<Transformation> idempotents_q(PartitionedSet const& p,
                                            std::size_t           max_size) {
    std::uint64_t const m = p.cross_section_count();
    if (m > max_size) {
      throw ResourceError("m = " + std::to_string(m) + " exceeds the bound "
                          + std::to_string(max_size));
    }
    auto const                  id = identity_permutation(p.block_count());
    std::vector<Transformation> result;
    result.reserve(m);
    for_each_section(p, [&](std::vector<point_type> const& section) {
      result.push_back(q_element(p, id, section));
    });
    std::sort(result.begin(), result.end());
    return result;
  }

  std::vector<std::size_t> block_permutation(PartitionedSet const& p,
                                             Transformation const& a) {
    check_in_q(p, a);
    std::vector<std::size_t> perm(p.block_count());
    for (std::size_t i = 0; i < p.block_count(); ++i) {
      perm[i] = p.block_of(a[p.representative(i)]);
    }
    return perm;
  }

  std::vector<point_type> image_section(PartitionedSet const& p,
                                        Transformation const& a) {
    check_in_q(p, a);
    std::vector<point_type> section(p.block_count());
    for (point_type v : image(a)) {
      section[p.block_of(v)] = v;
    }
    return section;
  }

  Transformation idempotent_of(PartitionedSet const& p, Transformation const& a) {
    auto const section = image_section(p, a);
    auto const id      = identity_permutation(p.block_count());
    return q_element(p, id, section);
  }

  GroupTable h_class(PartitionedSet const& p,
                     Transformation const& a,
                     std::size_t           max_order) {
    auto const          section = image_section(p, a);
    std::uint64_t const order   = checked_factorial(p.block_count());
    if (order > max_order) {
      throw ResourceError("H-class of order " + std::to_string(order)
                          + " exceeds the group bound "
                          + std::to_string(max_order));
    }
    std::vector<Transformation> elements;
    auto                        perm = identity_permutation(p.block_count());
    do {
      elements.push_back(q_element(p, perm, section));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return GroupTable::from_elements(std::move(elements), max_order);
  }

  RightGroupDecomposition decompose(PartitionedSet const& p,
                                    Bounds const&         bounds) {
    auto idempotents = idempotents_q(p, bounds.max_closure);
    auto e           = idempotents.front();
    auto group       = h_class(p, e, bounds.max_group_order);
    RightGroupDecomposition d{e, std::move(group), std::move(idempotents)};

    auto const                  q = enumerate_q(p, bounds.max_closure);
    std::vector<Transformation> paired;
    paired.reserve(d.group_part.order() * d.idempotent_part.size());
    for (std::size_t a = 0; a < d.group_part.order(); ++a) {
      for (std::size_t f = 0; f < d.idempotent_part.size(); ++f) {
        paired.push_back(d.pair(a, f));
      }
    }
    std::sort(paired.begin(), paired.end());
    if (paired != q.elements()) {
      throw ConsistencyError("the pairing H_e x E(Q) -> Q is not a bijection");
    }
    return d;
  }

  std::pair<std::size_t, std::size_t> split(PartitionedSet const&          p,
                                            RightGroupDecomposition const& d,
                                            Transformation const&          x) {
    auto a = d.group_part.index_of(x * d.base_idempotent);
    auto f = idempotent_of(p, x);
    auto it
        = std::lower_bound(d.idempotent_part.begin(), d.idempotent_part.end(), f);
    if (!a || it == d.idempotent_part.end() || *it != f) {
      throw ConsistencyError("cannot split " + to_string(x));
    }
    return {*a, static_cast<std::size_t>(it - d.idempotent_part.begin())};
  }

}  // namespace qstar
