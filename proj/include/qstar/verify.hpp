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

#ifndef QSTAR_VERIFY_HPP_
#define QSTAR_VERIFY_HPP_

// Cross-validation of one partitioned set: every structural result is
// recomputed through the brute-force engine and compared.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qstar/engine.hpp"
#include "qstar/io.hpp"
#include "qstar/partitioned_set.hpp"

namespace qstar {

  struct CheckResult {
    std::string name;
    bool        passed = false;
    bool        skipped = false;
    std::string detail;
  };

  struct VerifyOptions {
    Bounds        bounds;
    std::uint64_t seed = 0;
    //! Quadratic engine checks (right group, maximality) run up to this |Q|.
    std::size_t engine_limit = 200;
    //! Exhaustive sweeps (minimality, maximal-subsemigroup oracle) up to this.
    std::size_t exhaustive_limit = 40;
    //! Random subsets drawn for the property checks.
    std::size_t samples = 100;
  };

  //! The generating-set audit.
  //!
  //! Takes the block transposition t of the least idempotent e together with
  //! every idempotent except e (the set obtained from a generating set of
  //! E(Q) plus {e, t} once e is dropped because t^2 = e) and decides whether
  //! it generates Q, alongside the block-permutation certificate that explains
  //! the answer. It also records a rank-sized generating set that does
  //! generate Q.
  json generating_set_audit(PartitionedSet const& p, Bounds const& bounds = {});

  struct VerifyReport {
    std::vector<CheckResult> checks;
    json                     audit;

    [[nodiscard]] bool passed() const;
  };

  VerifyReport verify_instance(PartitionedSet const& p,
                               VerifyOptions const&  options = {});

  json to_json(VerifyReport const& r);

}  // namespace qstar

#endif  // QSTAR_VERIFY_HPP_
