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

#ifndef QSTAR_TESTS_ORACLES_HPP_
#define QSTAR_TESTS_ORACLES_HPP_

// Test-only brute force. Nothing here calls into the code it checks except
// Transformation, PartitionedSet and compose.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "qstar/partitioned_set.hpp"
#include "qstar/transformation.hpp"

namespace qstar::test {

  //! All n^n maps of {0, ..., n - 1}, in lexicographic order.
  inline std::vector<Transformation> all_maps(std::size_t n) {
    std::vector<Transformation> out;
    std::vector<point_type>     im(n, 0);
    while (true) {
      out.emplace_back(im);
      std::size_t i = n;
      while (i > 0 && ++im[i - 1] == n) {
        im[--i] = 0;
      }
      if (i == 0) {
        return out;
      }
    }
  }

  inline bool same_block(PartitionedSet const& p, point_type x, point_type y) {
    for (auto const& b : p.blocks()) {
      bool hx = std::find(b.begin(), b.end(), x) != b.end();
      bool hy = std::find(b.begin(), b.end(), y) != b.end();
      if (hx || hy) {
        return hx && hy;
      }
    }
    return false;
  }

  //! Membership in Q straight from the definition.
  inline bool in_q_by_definition(PartitionedSet const& p, Transformation const& a) {
    for (auto const& b : p.blocks()) {
      std::set<point_type> img;
      for (point_type x : b) {
        img.insert(a[x]);
      }
      if (img.size() != 1) {
        return false;
      }
    }
    for (auto const& b : p.blocks()) {
      bool meets = false;
      for (point_type x = 0; x < a.degree(); ++x) {
        meets = meets || std::find(b.begin(), b.end(), a[x]) != b.end();
      }
      if (!meets) {
        return false;
      }
    }
    return true;
  }

  //! Naive closure: repeatedly add all pairwise products until stable.
  inline std::set<Transformation> naive_closure(std::vector<Transformation> gens) {
    std::set<Transformation> s(gens.begin(), gens.end());
    while (true) {
      std::set<Transformation> next = s;
      for (auto const& a : s) {
        for (auto const& b : s) {
          next.insert(compose(a, b));
        }
      }
      if (next.size() == s.size()) {
        return s;
      }
      s = std::move(next);
    }
  }

  //! Subgroups of a group by testing every subset (|G| <= 10).
  inline std::vector<std::vector<Transformation>>
  subgroups_by_subsets(std::vector<Transformation> const& g) {
    std::vector<std::vector<Transformation>> out;
    for (std::uint32_t bits = 1; bits < (1u << g.size()); ++bits) {
      std::vector<Transformation> sub;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (bits & (1u << i)) {
          sub.push_back(g[i]);
        }
      }
      // a nonempty finite subset closed under products is a subgroup
      bool closed = true;
      for (auto const& a : sub) {
        for (auto const& b : sub) {
          closed = closed
                   && std::find(sub.begin(), sub.end(), compose(a, b)) != sub.end();
        }
      }
      if (closed) {
        out.push_back(sub);
      }
    }
    return out;
  }

}  // namespace qstar::test

#endif  // QSTAR_TESTS_ORACLES_HPP_
