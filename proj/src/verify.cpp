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

#include "qstar/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "qstar/arith.hpp"
#include "qstar/exception.hpp"
#include "qstar/iso.hpp"
#include "qstar/maximal.hpp"
#include "qstar/membership.hpp"
#include "qstar/q_structure.hpp"
#include "qstar/rank.hpp"

namespace qstar {

  namespace {
    json q_strings(PartitionedSet const& p, std::span<Transformation const> v) {
      json j = json::array();
      for (auto const& a : v) {
        j.push_back(to_q_string(p, a));
      }
      return j;
    }

    std::vector<Transformation> random_subset(SemigroupSet const& s,
                                              std::size_t         max_size,
                                              std::mt19937_64&    rng) {
      std::uniform_int_distribution<std::size_t> count(1, max_size);
      std::uniform_int_distribution<std::size_t> pick(0, s.size() - 1);
      std::vector<Transformation>                out;
      for (std::size_t i = count(rng); i > 0; --i) {
        out.push_back(s[pick(rng)]);
      }
      return out;
    }

    struct Outcome {
      bool        passed;
      std::string detail;
    };
  }  // namespace

  json generating_set_audit(PartitionedSet const& p, Bounds const& bounds) {
    auto const q           = enumerate_q(p, bounds.max_closure);
    auto const idempotents = idempotents_q(p, bounds.max_closure);
    auto const e           = base_idempotent(p);
    auto const rank        = rank_q(p);
    auto const report      = minimal_generating_set(p, bounds);
    auto const spanned     = closure(report.generators, bounds.max_closure);

    json audit;
    audit["partition"] = to_compact(p);
    audit["k"]         = p.block_count();
    audit["m"]         = exact_count(p.cross_section_count());
    audit["cardinality"] = exact_count(q.size());
    audit["rank"]      = exact_count(rank);
    bool consistent    = spanned == q && report.generators.size() == rank;
    audit["verified_generating_set"]
        = {{"size", report.generators.size()},
           {"generators", q_strings(p, report.generators)},
           {"closure_size", spanned.size()},
           {"equals_q", spanned == q}};

    if (p.block_count() < 2) {
      audit["group_part_candidate"] = nullptr;
      audit["candidate"]            = nullptr;
      audit["consistent"]           = consistent;
      return audit;
    }
    auto const t = symmetric_part_generators(p).front();

    std::vector<Transformation> pair{e, t};
    auto const  group_part = closure(pair, bounds.max_closure);
    auto const  h_order    = checked_factorial(p.block_count());
    audit["group_part_candidate"]
        = {{"generators", q_strings(p, pair)},
           {"generated_order", group_part.size()},
           {"h_class_order", exact_count(h_order)},
           {"generates_h_class", group_part.size() == h_order}};

    std::vector<Transformation> candidate;
    for (auto const& f : idempotents) {
      if (f != e) {
        candidate.push_back(f);
      }
    }
    candidate.push_back(t);
    auto const cand_span = closure(candidate, bounds.max_closure);
    auto const cert      = block_permutation_certificate(p, candidate, bounds);
    bool const generates = cand_span == q;
    json       c{{"generators", q_strings(p, candidate)},
                 {"size", candidate.size()},
                 {"closure_size", cand_span.size()},
                 {"generates_q", generates},
                 {"block_permutation_group_order", exact_count(cert.generated_order)},
                 {"symmetric_group_order", exact_count(cert.full_order)}};
    consistent = consistent && generates == cert.generates_all();
    if (cert.witness) {
      bool in_span     = cand_span.contains(*cert.witness);
      c["witness"]     = to_q_string(p, *cert.witness);
      c["witness_in_closure"] = in_span;
      consistent       = consistent && !in_span;
    } else {
      c["witness"]            = nullptr;
      c["witness_in_closure"] = nullptr;
    }
    audit["candidate"]  = std::move(c);
    audit["consistent"] = consistent;
    return audit;
  }

  bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](auto const& c) {
             return c.passed || c.skipped;
           })
           && audit.value("consistent", false);
  }

  VerifyReport verify_instance(PartitionedSet const& p,
                               VerifyOptions const&  opt) {
    VerifyReport    report;
    std::mt19937_64 rng(opt.seed);
    auto const&     bounds = opt.bounds;

    auto run = [&](std::string name, std::function<Outcome()> const& f) {
      CheckResult r{std::move(name), false, false, ""};
      try {
        auto o   = f();
        r.passed = o.passed;
        r.detail = std::move(o.detail);
      } catch (std::exception const& e) {
        r.detail = std::string("exception: ") + e.what();
      }
      report.checks.push_back(std::move(r));
    };
    auto skip = [&](std::string name, std::string why) {
      report.checks.push_back({std::move(name), false, true, std::move(why)});
    };

    std::uint64_t const k     = p.block_count();
    std::uint64_t const m     = p.cross_section_count();
    std::uint64_t const order = cardinality_q(p);
    if (order > bounds.max_closure) {
      throw ResourceError("|Q| = " + std::to_string(order)
                          + " exceeds the closure bound");
    }
    auto const q           = enumerate_q(p, bounds.max_closure);
    auto const idempotents = idempotents_q(p, bounds.max_closure);
    bool const small       = q.size() <= opt.engine_limit;

    if (p.degree() <= 16) {
      run("cross_sections_counted", [&]() -> Outcome {
        std::uint64_t count = 0;
        for (std::uint32_t bits = 0; bits < (1u << p.degree()); ++bits) {
          std::vector<point_type> s;
          for (point_type x = 0; x < p.degree(); ++x) {
            if (bits & (1u << x)) {
              s.push_back(x);
            }
          }
          count += is_cross_section(p, s);
        }
        return {count == m, std::to_string(count) + " cross-sections"};
      });
    } else {
      skip("cross_sections_counted", "n above 16");
    }

    run("cardinality", [&]() -> Outcome {
      return {q.size() == order,
              "|Q| = " + std::to_string(q.size()) + ", k!m = "
                  + std::to_string(order)};
    });

    run("idempotents", [&]() -> Outcome {
      std::vector<Transformation> filtered;
      for (auto const& a : q.elements()) {
        if (is_idempotent_q(p, a)) {
          filtered.push_back(a);
        }
      }
      return {filtered == idempotents && idempotents.size() == m,
              std::to_string(filtered.size()) + " idempotents"};
    });

    if (idempotents.size() > 2000) {
      skip("idempotents_right_zero", "more than 2000 idempotents");
    } else {
      run("idempotents_right_zero", [&]() -> Outcome {
        for (auto const& f : idempotents) {
          for (auto const& g : idempotents) {
            if (f * g != g) {
              return {false, to_string(f) + " * " + to_string(g) + " != "
                                 + to_string(g)};
            }
          }
        }
        return {true, ""};
      });
    }

    run("membership_chain", [&]() -> Outcome {
      std::uniform_int_distribution<point_type> pt(0, p.degree() - 1);
      auto check = [&](Transformation const& a) {
        bool q_  = in_q(p, a);
        bool ts  = in_te_star(p, a);
        bool te  = in_te(p, a);
        return (!q_ || ts) && (!ts || te) && ts == in_te_star_pairwise(p, a);
      };
      for (auto const& a : q.elements()) {
        if (!in_q(p, a) || !check(a)) {
          return {false, to_string(a)};
        }
      }
      for (std::size_t i = 0; i < opt.samples; ++i) {
        std::vector<point_type> im(p.degree());
        for (auto& v : im) {
          v = pt(rng);
        }
        if (!check(Transformation(im))) {
          return {false, to_string(Transformation(im))};
        }
      }
      return {true, ""};
    });

    run("common_kernel_and_cross_sections", [&]() -> Outcome {
      auto blocks = p.blocks();
      std::sort(blocks.begin(), blocks.end());
      for (auto const& a : q.elements()) {
        auto classes = kernel_partition(a).classes;
        std::sort(classes.begin(), classes.end());
        if (classes != blocks) {
          return {false, "kernel of " + to_string(a)};
        }
        if (!is_cross_section(p, image(a))) {
          return {false, "image of " + to_string(a)};
        }
      }
      return {true, ""};
    });

    if (small) {
      run("right_group", [&]() -> Outcome {
        bool rg = is_right_group(q);
        bool rl = is_regular_semigroup(q) && is_left_cancellative(q);
        return {rg && rl, ""};
      });
      run("group_criterion", [&]() -> Outcome {
        bool engine = is_right_group(q) && idempotents.size() == 1;
        return {engine == is_group_q(p), ""};
      });
    } else {
      skip("right_group", "|Q| above engine limit");
      skip("group_criterion", "|Q| above engine limit");
    }

    bool const group_ok = checked_factorial(k) <= bounds.max_group_order;
    if (group_ok) {
      run("h_classes", [&]() -> Outcome {
        auto const first = h_class(p, idempotents.front(), bounds.max_group_order);
        std::size_t checked = 0;
        for (auto const& f : idempotents) {
          auto h = h_class(p, f, bounds.max_group_order);
          if (h.order() != checked_factorial(k)) {
            return {false, "order of H-class of " + to_string(f)};
          }
          auto const im = image(f);
          std::vector<Transformation> searched;
          for (auto const& a : q.elements()) {
            if (image(a) == im) {
              searched.push_back(a);
            }
          }
          if (searched != h.elements()) {
            return {false, "constructed vs searched H-class of " + to_string(f)};
          }
          if (k <= 4 && checked < 24) {
            if (!groups_isomorphic(first, h)) {
              return {false, "H-classes not isomorphic"};
            }
            ++checked;
          }
        }
        return {true, std::to_string(idempotents.size()) + " H-classes"};
      });
      run("decomposition", [&]() -> Outcome {
        auto d = decompose(p, bounds);
        return {d.group_part.order() * d.idempotent_part.size() == q.size(), ""};
      });
    } else {
      skip("h_classes", "k! above group bound");
      skip("decomposition", "k! above group bound");
    }

    run("minimal_generating_set", [&]() -> Outcome {
      auto r = minimal_generating_set(p, bounds);
      bool hits = generating_set_hits_every_hclass(r.generators, p, bounds);
      return {hits && r.generators.size() == rank_q(p),
              std::to_string(r.generators.size()) + " generators"};
    });

    run("group_generators_with_idempotents", [&]() -> Outcome {
      auto gens = symmetric_part_generators(p);
      gens.insert(gens.end(), idempotents.begin(), idempotents.end());
      return {closure(gens, bounds.max_closure) == q, ""};
    });

    run("block_permutation_homomorphism", [&]() -> Outcome {
      std::uniform_int_distribution<std::size_t> pick(0, q.size() - 1);
      for (std::size_t i = 0; i < opt.samples; ++i) {
        auto const& a  = q[pick(rng)];
        auto const& b  = q[pick(rng)];
        auto        sa = block_permutation(p, a);
        auto        sb = block_permutation(p, b);
        auto        sab = block_permutation(p, a * b);
        for (std::size_t j = 0; j < k; ++j) {
          if (sab[j] != sb[sa[j]]) {
            return {false, to_string(a) + " * " + to_string(b)};
          }
        }
      }
      return {true, ""};
    });

    if (q.size() <= opt.exhaustive_limit) {
      run("rank_lower_bound", [&]() -> Outcome {
        auto r     = rank_q(p);
        auto found = find_generating_subset(q, r - 1);
        return {!found.has_value(),
                "no generating set of size " + std::to_string(r - 1)};
      });
    } else {
      skip("rank_lower_bound", "|Q| above exhaustive limit");
    }

    if (m >= 2 && group_ok) {
      run("maximal_subsemigroups", [&]() -> Outcome {
        auto r = maximal_subsemigroups_q(p, bounds, opt.engine_limit);
        auto c = count_maximal(p, bounds);
        if (!(r.counts == c)) {
          return {false, "counts differ from s_k + m"};
        }
        for (auto const& t : r.group_type) {
          if (t.elements.size() != t.subgroup.size() * m) {
            return {false, "group-type size"};
          }
        }
        for (auto const& t : r.right_zero_type) {
          if (t.elements.size() != checked_factorial(k) * (m - 1)) {
            return {false, "right-zero-type size"};
          }
        }
        if (q.size() <= opt.exhaustive_limit) {
          std::vector<SemigroupSet> constructed;
          for (auto const* list : {&r.group_type, &r.right_zero_type}) {
            for (auto const& t : *list) {
              constructed.push_back(t.elements);
            }
          }
          std::sort(constructed.begin(),
                    constructed.end(),
                    [](auto const& a, auto const& b) {
                      return a.elements() < b.elements();
                    });
          if (constructed != exhaustive_maximal_oracle(q)) {
            return {false, "differs from the exhaustive oracle"};
          }
        }
        return {true, std::to_string(c.total) + " maximal subsemigroups"};
      });
    } else {
      skip("maximal_subsemigroups", m < 2 ? "m = 1: Q is a group" : "k! above group bound");
    }

    if (small) {
      run("random_subsemigroups", [&]() -> Outcome {
        auto const e  = base_idempotent(p);
        std::set<Transformation> qe;
        for (auto const& a : q.elements()) {
          qe.insert(a * e);
        }
        std::size_t hypothesis = 0;
        for (std::size_t i = 0; i < opt.samples; ++i) {
          auto gens = random_subset(q, 3, rng);
          if (i % 2 == 1) {
            gens.insert(gens.end(), idempotents.begin(), idempotents.end());
          }
          auto t   = closure(gens, bounds.max_closure);
          bool rg  = is_right_group(t);
          bool rlc = is_regular_semigroup(t) && is_left_cancellative(t);
          if (!rg || rg != rlc) {
            return {false, "closure of a random subset is not a right group"};
          }
          std::set<Transformation> te;
          std::size_t              idem = 0;
          for (auto const& a : t.elements()) {
            te.insert(a * e);
            idem += a * a == a;
          }
          if (te == qe && idem == idempotents.size()) {
            ++hypothesis;
            if (!(t == q)) {
              return {false, "Te = Qe and E(T) = E(Q) but T != Q"};
            }
          }
        }
        return {true, std::to_string(hypothesis) + " samples met Te = Qe, E(T) = E(Q)"};
      });
    } else {
      skip("random_subsemigroups", "|Q| above engine limit");
    }

    if (group_ok) {
      run("self_isomorphism", [&]() -> Outcome {
        auto blocks = p.blocks();
        std::reverse(blocks.begin(), blocks.end());
        PartitionedSet reversed(p.degree(), blocks);
        auto iso = build_isomorphism(p, reversed, bounds, opt.engine_limit,
                                     opt.samples * 10, opt.seed);
        return {q_isomorphic(p, reversed), std::to_string(iso.pairs_checked)
                                               + " products checked"};
      });
    } else {
      skip("self_isomorphism", "k! above group bound");
    }

    report.audit = generating_set_audit(p, bounds);
    return report;
  }

  json to_json(VerifyReport const& r) {
    json checks = json::array();
    for (auto const& c : r.checks) {
      checks.push_back({{"name", c.name},
                        {"status", c.skipped ? "skipped" : (c.passed ? "pass" : "fail")},
                        {"detail", c.detail}});
    }
    return json{{"passed", r.passed()}, {"checks", std::move(checks)},
                {"audit", r.audit}};
  }

}  // namespace qstar
