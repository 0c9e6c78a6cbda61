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

#include "qstar/iso.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "qstar/exception.hpp"
#include "qstar/q_structure.hpp"

namespace qstar {

  IsoClassKey iso_class_key(PartitionedSet const& p) {
    return {p.block_count(), p.cross_section_count()};
  }

  bool q_isomorphic(PartitionedSet const& p1, PartitionedSet const& p2) {
    return iso_class_key(p1) == iso_class_key(p2);
  }

  bool q_isomorphic_by_decomposition(PartitionedSet const& p1,
                                     PartitionedSet const& p2,
                                     Bounds const&         bounds) {
    auto const d1 = decompose(p1, bounds);
    auto const d2 = decompose(p2, bounds);
    return d1.idempotent_part.size() == d2.idempotent_part.size()
           && groups_isomorphic(d1.group_part, d2.group_part);
  }

  namespace {
    std::vector<std::size_t> blocks_by_size(PartitionedSet const& p) {
      std::vector<std::size_t> order(p.block_count());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
        return p.block(a).size() < p.block(b).size();
      });
      return order;
    }
  }  // namespace

  QIsomorphism build_isomorphism(PartitionedSet const& p1,
                                 PartitionedSet const& p2,
                                 Bounds const&         bounds,
                                 std::size_t           exhaustive_limit,
                                 std::size_t           samples,
                                 std::uint64_t         seed) {
    if (!q_isomorphic(p1, p2)) {
      throw ContractError("Q on these partitioned sets are not isomorphic: "
                          "block counts or block-size products differ");
    }
    auto const        d1 = decompose(p1, bounds);
    auto const        d2 = decompose(p2, bounds);
    std::size_t const k  = p1.block_count();

    std::vector<std::size_t> beta(k);
    {
      auto o1 = blocks_by_size(p1);
      auto o2 = blocks_by_size(p2);
      for (std::size_t j = 0; j < k; ++j) {
        beta[o1[j]] = o2[j];
      }
    }
    auto const section2 = image_section(p2, d2.base_idempotent);

    // group part: conjugate the block permutation by beta
    std::vector<std::size_t> psi(d1.group_part.order());
    for (std::size_t a = 0; a < d1.group_part.order(); ++a) {
      auto const sigma = block_permutation(p1, d1.group_part.element(a));
      std::vector<std::size_t> tau(k);
      for (std::size_t i = 0; i < k; ++i) {
        tau[beta[i]] = beta[sigma[i]];
      }
      auto idx = d2.group_part.index_of(q_element(p2, tau, section2));
      if (!idx) {
        throw ConsistencyError("block conjugate is outside the group part");
      }
      psi[a] = *idx;
    }

    QIsomorphism iso{enumerate_q(p1, bounds.max_closure),
                     enumerate_q(p2, bounds.max_closure),
                     {},
                     beta,
                     false,
                     0};
    std::size_t const n = iso.domain.size();
    iso.image.resize(n);
    std::vector<bool> hit(n, false);
    for (std::size_t x = 0; x < n; ++x) {
      auto [a, f] = split(p1, d1, iso.domain[x]);
      auto y      = iso.codomain.index_of(d2.pair(psi[a], f));
      if (!y || hit[*y]) {
        throw ConsistencyError("constructed map is not a bijection");
      }
      hit[*y]      = true;
      iso.image[x] = *y;
    }

    auto check = [&](std::size_t x, std::size_t y) {
      auto xy = iso.domain.index_of(iso.domain[x] * iso.domain[y]);
      auto lhs = iso.image[*xy];
      auto rhs = iso.codomain.index_of(iso.codomain[iso.image[x]]
                                       * iso.codomain[iso.image[y]]);
      if (lhs != *rhs) {
        throw ConsistencyError("constructed map is not multiplicative");
      }
      ++iso.pairs_checked;
    };
    if (n <= exhaustive_limit) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          check(x, y);
        }
      }
      iso.exhaustive = true;
    } else {
      std::mt19937_64                            rng(seed);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (std::size_t i = 0; i < samples; ++i) {
        check(pick(rng), pick(rng));
      }
    }
    return iso;
  }

  namespace {
    void partitions_rec(std::size_t                            remaining,
                        std::size_t                            largest,
                        std::vector<std::size_t>&              current,
                        std::vector<std::vector<std::size_t>>& out) {
      if (remaining == 0) {
        out.push_back(current);
        return;
      }
      for (std::size_t part = std::min(remaining, largest); part >= 1; --part) {
        current.push_back(part);
        partitions_rec(remaining - part, part, current, out);
        current.pop_back();
      }
    }
  }  // namespace

  std::vector<std::vector<std::size_t>> integer_partitions(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t>              current;
    partitions_rec(n, n, current, out);
    return out;
  }

  std::map<IsoClassKey, std::vector<std::vector<std::size_t>>>
  classify_partitions(std::size_t n) {
    if (n == 0) {
      throw ValidationError("classify_partitions needs n >= 1");
    }
    if (n > 12) {
      throw ResourceError("classify_partitions supports 1 <= n <= 12, got "
                          + std::to_string(n));
    }
    std::map<IsoClassKey, std::vector<std::vector<std::size_t>>> classes;
    for (auto const& sizes : integer_partitions(n)) {
      classes[iso_class_key(from_block_sizes(sizes))].push_back(sizes);
    }
    return classes;
  }

}  // namespace qstar
