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

#include "qstar/maximal.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

#include "qstar/exception.hpp"
#include "qstar/q_structure.hpp"

namespace qstar {

  MaximalSubsemigroupReport maximal_subsemigroups_q(PartitionedSet const& p,
                                                    Bounds const&         bounds,
                                                    std::size_t verify_limit) {
    if (p.cross_section_count() < 2) {
      throw UnsupportedCaseError(
          "Q is the symmetric group on the blocks (every block is a "
          "singleton); its maximal subsemigroups are its maximal subgroups");
    }
    auto const d = decompose(p, bounds);
    auto const q = enumerate_q(p, bounds.max_closure);

    MaximalSubsemigroupReport report;
    for (auto const& h : maximal_subgroups(d.group_part)) {
      std::vector<Transformation> elements;
      std::vector<Transformation> subgroup;
      for (std::size_t a : h) {
        subgroup.push_back(d.group_part.element(a));
        for (std::size_t f = 0; f < d.idempotent_part.size(); ++f) {
          elements.push_back(d.pair(a, f));
        }
      }
      std::sort(elements.begin(), elements.end());
      report.group_type.push_back({MaximalKind::group,
                                   SemigroupSet::trusted(std::move(elements)),
                                   std::move(subgroup),
                                   std::nullopt});
    }
    for (std::size_t omit = 0; omit < d.idempotent_part.size(); ++omit) {
      std::vector<Transformation> elements;
      for (std::size_t a = 0; a < d.group_part.order(); ++a) {
        for (std::size_t f = 0; f < d.idempotent_part.size(); ++f) {
          if (f != omit) {
            elements.push_back(d.pair(a, f));
          }
        }
      }
      std::sort(elements.begin(), elements.end());
      report.right_zero_type.push_back({MaximalKind::right_zero,
                                        SemigroupSet::trusted(std::move(elements)),
                                        {},
                                        d.idempotent_part[omit]});
    }
    report.counts.s_k   = report.group_type.size();
    report.counts.m     = d.idempotent_part.size();
    report.counts.total = report.counts.s_k + report.counts.m;

    if (q.size() <= verify_limit) {
      for (auto const* list : {&report.group_type, &report.right_zero_type}) {
        for (auto const& t : *list) {
          if (!is_closed(t.elements.elements())
              || !is_maximal_subsemigroup(t.elements, q)) {
            throw ConsistencyError("constructed subsemigroup of size "
                                   + std::to_string(t.elements.size())
                                   + " is not maximal");
          }
        }
      }
      report.verified = true;
    }
    return report;
  }

  MaximalCounts count_maximal(PartitionedSet const& p, Bounds const& bounds) {
    MaximalCounts c;
    c.m = p.cross_section_count();
    if (c.m < 2) {
      throw UnsupportedCaseError("count_maximal requires m >= 2");
    }
    auto const sk = symmetric_group(p.block_count(), bounds.max_group_order);
    c.s_k         = maximal_subgroups(sk).size();
    c.total       = c.s_k + c.m;
    return c;
  }

  namespace {
    using mask_type = CayleyTable::mask_type;

    // Collects closed subsets of u. Any closed subset of u omits a or b
    // whenever a, b are in u and ab is not, so branching on such a pair
    // reaches every maximal closed subset of u.
    struct CoatomSearch {
      CayleyTable const&            table;
      std::unordered_set<mask_type> visited;
      std::vector<mask_type>        found;

      bool covered(mask_type u) const {
        return std::any_of(found.begin(), found.end(), [u](mask_type c) {
          return (u & ~c) == 0;
        });
      }

      void run(mask_type u) {
        // a maximal subsemigroup inside u inside a closed proper c equals c
        if (u == 0 || covered(u) || !visited.insert(u).second) {
          return;
        }
        if (visited.size() > oracle_subsemigroup_limit) {
          throw ResourceError("exhaustive_maximal_oracle visited more than "
                              + std::to_string(oracle_subsemigroup_limit)
                              + " subsets");
        }
        for (mask_type ra = u; ra != 0; ra &= ra - 1) {
          auto a = static_cast<std::size_t>(std::countr_zero(ra));
          for (mask_type rb = u; rb != 0; rb &= rb - 1) {
            auto b = static_cast<std::size_t>(std::countr_zero(rb));
            if (!(u & (mask_type(1) << table.product(a, b)))) {
              run(u & ~(mask_type(1) << a));
              if (a != b) {
                run(u & ~(mask_type(1) << b));
              }
              return;
            }
          }
        }
        found.push_back(u);
      }
    };
  }  // namespace

  std::vector<SemigroupSet> exhaustive_maximal_oracle(SemigroupSet const& s) {
    if (s.size() > 40) {
      throw ResourceError("exhaustive_maximal_oracle needs |S| <= 40, got "
                          + std::to_string(s.size()));
    }
    CayleyTable const table(s);
    mask_type const   full = table.full();

    // every maximal subsemigroup avoids some x and is maximal closed in S \ {x}
    CoatomSearch search{table, {}, {}};
    for (std::size_t x = 0; x < s.size(); ++x) {
      search.run(full & ~(mask_type(1) << x));
    }

    std::vector<SemigroupSet> result;
    for (mask_type t : search.found) {
      bool is_max = true;
      for (std::size_t x = 0; x < s.size() && is_max; ++x) {
        if (!(t & (mask_type(1) << x))) {
          is_max = table.close_with(t, x) == full;
        }
      }
      if (!is_max) {
        continue;
      }
      std::vector<Transformation> elements;
      for (mask_type rest = t; rest != 0; rest &= rest - 1) {
        elements.push_back(s[std::countr_zero(rest)]);
      }
      result.push_back(SemigroupSet::trusted(std::move(elements)));
    }
    std::sort(result.begin(), result.end(), [](auto const& a, auto const& b) {
      return a.elements() < b.elements();
    });
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
  }

}  // namespace qstar
