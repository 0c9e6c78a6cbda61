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

#include "qstar/rank.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "qstar/arith.hpp"
#include "qstar/exception.hpp"
#include "qstar/q_structure.hpp"

namespace qstar {

  std::uint64_t rank_q(PartitionedSet const& p) {
    if (p.is_identity_relation()) {
      return p.block_count() <= 2 ? 1 : 2;
    }
    return std::max<std::uint64_t>(2, p.cross_section_count());
  }

  namespace {
    std::vector<point_type> representatives(PartitionedSet const& p) {
      std::vector<point_type> section(p.block_count());
      for (std::size_t i = 0; i < p.block_count(); ++i) {
        section[i] = p.representative(i);
      }
      return section;
    }
  }  // namespace

  Transformation base_idempotent(PartitionedSet const& p) {
    std::vector<std::size_t> id(p.block_count());
    std::iota(id.begin(), id.end(), 0);
    return q_element(p, id, representatives(p));
  }

  std::vector<Transformation> symmetric_part_generators(PartitionedSet const& p) {
    std::size_t const k       = p.block_count();
    auto const        section = representatives(p);
    if (k == 1) {
      return {base_idempotent(p)};
    }
    std::vector<std::size_t> transposition(k);
    std::iota(transposition.begin(), transposition.end(), 0);
    std::swap(transposition[0], transposition[1]);
    std::vector<Transformation> gens{q_element(p, transposition, section)};
    if (k >= 3) {
      std::vector<std::size_t> cycle(k);
      for (std::size_t i = 0; i < k; ++i) {
        cycle[i] = (i + 1) % k;
      }
      gens.push_back(q_element(p, cycle, section));
    }
    return gens;
  }

  GeneratingSetReport minimal_generating_set(PartitionedSet const& p,
                                             Bounds const&         bounds) {
    auto const group_gens  = symmetric_part_generators(p);
    auto const idempotents = idempotents_q(p, bounds.max_closure);
    auto const e           = base_idempotent(p);

    GeneratingSetReport report;
    report.claimed_rank = rank_q(p);
    report.injective    = group_gens.size() <= idempotents.size();
    for (std::size_t i = 0; i < group_gens.size(); ++i) {
      auto const& f = idempotents[std::min(i, idempotents.size() - 1)];
      report.phi.emplace_back(group_gens[i], f);
      report.generators.push_back(group_gens[i] * f);
    }
    for (std::size_t i = group_gens.size(); i < idempotents.size(); ++i) {
      report.leftover.push_back(idempotents[i]);
      report.generators.push_back(e * idempotents[i]);
    }

    auto const q       = enumerate_q(p, bounds.max_closure);
    auto const spanned = closure(report.generators, bounds.max_closure);
    if (spanned != q) {
      throw ConsistencyError("constructed generating set spans "
                             + std::to_string(spanned.size()) + " of "
                             + std::to_string(q.size()) + " elements");
    }
    std::set<Transformation> distinct(report.generators.begin(),
                                      report.generators.end());
    if (distinct.size() != report.claimed_rank) {
      throw ConsistencyError("constructed generating set has "
                             + std::to_string(distinct.size())
                             + " elements, expected rank "
                             + std::to_string(report.claimed_rank));
    }
    return report;
  }

  bool generating_set_hits_every_hclass(std::span<Transformation const> gens,
                                        PartitionedSet const&           p,
                                        Bounds const&                   bounds) {
    if (gens.empty()) {
      throw ContractError("empty generating set");
    }
    if (closure(gens, bounds.max_closure) != enumerate_q(p, bounds.max_closure)) {
      throw ContractError("the given set does not generate Q");
    }
    // H-classes of Q are indexed by image, i.e. by idempotent
    std::set<Transformation> hit;
    for (auto const& g : gens) {
      hit.insert(idempotent_of(p, g));
    }
    return hit.size() == p.cross_section_count();
  }

  BlockPermutationCertificate
  block_permutation_certificate(PartitionedSet const&           p,
                                std::span<Transformation const> gens,
                                Bounds const&                   bounds) {
    if (gens.empty()) {
      throw ContractError("empty generating set");
    }
    std::size_t const           k = p.block_count();
    std::vector<Transformation> perms;
    for (auto const& g : gens) {
      auto bp = block_permutation(p, g);
      perms.emplace_back(std::vector<point_type>(bp.begin(), bp.end()));
    }
    auto const group = closure(perms, bounds.max_closure);

    BlockPermutationCertificate cert;
    cert.generated_order = group.size();
    cert.full_order      = checked_factorial(k);
    if (!cert.generates_all()) {
      std::vector<point_type> perm(k);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        if (!group.contains(Transformation(perm))) {
          std::vector<std::size_t> missing(perm.begin(), perm.end());
          cert.witness = q_element(p, missing, representatives(p));
          break;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return cert;
  }

}  // namespace qstar
