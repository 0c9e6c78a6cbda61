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

// qstar: structure of the semigroup Q of block-collapsing maps on a
// partitioned set.
//
// Maps act on the right: in a product ab, a is applied first. Point labels
// are 1-based everywhere on the command line and in output.
//
// Exit status: 0 success, 2 invalid input, 3 resource bound exceeded,
// 4 internal consistency failure (including a failed `verify`).

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "qstar/arith.hpp"
#include "qstar/exception.hpp"
#include "qstar/io.hpp"
#include "qstar/iso.hpp"
#include "qstar/maximal.hpp"
#include "qstar/membership.hpp"
#include "qstar/q_structure.hpp"
#include "qstar/rank.hpp"
#include "qstar/verify.hpp"

namespace {

  using namespace qstar;

  enum class Format { json, table };

  struct RunConfig {
    std::string   partition;
    std::string   right;
    std::string   map;
    std::size_t   census_n = 0;
    Format        format   = Format::json;
    Bounds        bounds;
    bool          oracle_verify = true;
    std::uint64_t seed          = 0;
    std::string   audit_out;
    bool          quiet = false;
  };

  constexpr std::size_t oracle_verify_limit = 200;

  PartitionedSet read_partition(std::string const& text) {
    if (!text.empty() && text.front() == '{') {
      json j;
      try {
        j = json::parse(text);
      } catch (json::parse_error const& e) {
        throw ValidationError(std::string("bad partition JSON: ") + e.what());
      }
      return partition_from_json(j);
    }
    return parse_partition(text);
  }

  std::size_t verify_limit(RunConfig const& cfg) {
    return cfg.oracle_verify ? oracle_verify_limit : 0;
  }

  void emit(json const& j) {
    std::cout << j.dump() << '\n';
  }

  json q_list(PartitionedSet const& p, std::span<Transformation const> v) {
    json out = json::array();
    for (auto const& a : v) {
      out.push_back(to_q_string(p, a));
    }
    return out;
  }

  json subgroup_list(PartitionedSet const& p,
                     GroupTable const&     g,
                     Subgroup const&       h) {
    json out = json::array();
    for (std::size_t i : h) {
      out.push_back(to_q_string(p, g.element(i)));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subcommands
  ////////////////////////////////////////////////////////////////////////

  int cmd_analyze(RunConfig const& cfg) {
    auto const p = read_partition(cfg.partition);
    json       j;
    j["cardinality"]      = exact_count(cardinality_q(p));
    j["idempotents"]      = exact_count(p.cross_section_count());
    j["rank"]             = exact_count(rank_q(p));
    j["is_group"]         = is_group_q(p);
    j["partition"]        = to_json(p);
    j["k"]                = p.block_count();
    j["m"]                = exact_count(p.cross_section_count());
    j["group_part_order"] = exact_count(checked_factorial(p.block_count()));
    if (cfg.oracle_verify && cardinality_q(p) <= oracle_verify_limit) {
      auto const q = enumerate_q(p, cfg.bounds.max_closure);
      j["verified"] = q.size() == cardinality_q(p)
                      && idempotents_q(p).size() == p.cross_section_count()
                      && is_right_group(q);
    } else {
      j["verified"] = nullptr;
    }
    if (cfg.format == Format::table) {
      auto row = [](std::string_view name, auto const& value) {
        std::cout << std::left << std::setw(20) << name << value << '\n';
      };
      row("partition", to_compact(p));
      row("blocks (k)", p.block_count());
      row("cross-sections (m)", p.cross_section_count());
      row("cardinality", cardinality_q(p));
      row("idempotents", p.cross_section_count());
      row("group part order", checked_factorial(p.block_count()));
      row("rank", rank_q(p));
      row("is group", is_group_q(p) ? "yes" : "no");
    } else {
      emit(j);
    }
    return 0;
  }

  int cmd_generate(RunConfig const& cfg) {
    auto const p      = read_partition(cfg.partition);
    auto const report = minimal_generating_set(p, cfg.bounds);
    json       gens   = json::array();
    for (auto const& g : report.generators) {
      gens.push_back(
          {{"images", to_json(g)["images"]}, {"q", to_q_string(p, g)}});
    }
    json phi = json::array();
    for (auto const& [g, f] : report.phi) {
      phi.push_back({{"g", to_q_string(p, g)}, {"f", to_q_string(p, f)}});
    }
    json j{{"rank", exact_count(report.claimed_rank)},
           {"generators", std::move(gens)},
           {"trace",
            {{"base_idempotent", to_q_string(p, base_idempotent(p))},
             {"phi_kind", report.injective ? "injection" : "surjection"},
             {"phi", std::move(phi)},
             {"leftover_idempotents", q_list(p, report.leftover)}}},
           {"verified", true}};
    if (cfg.format == Format::table) {
      std::cout << "rank " << report.claimed_rank << '\n';
      for (auto const& g : report.generators) {
        std::cout << "  " << to_q_string(p, g) << "  " << to_string(g) << '\n';
      }
    } else {
      emit(j);
    }
    return 0;
  }

  int cmd_maximal(RunConfig const& cfg) {
    auto const p = read_partition(cfg.partition);
    if (p.cross_section_count() == 1) {
      // Q is the symmetric group on the blocks
      auto const q = enumerate_q(p, cfg.bounds.max_closure);
      auto const g = h_class(p, q[0], cfg.bounds.max_group_order);
      json       subs = json::array();
      for (auto const& h : maximal_subgroups(g)) {
        subs.push_back({{"size", h.size()}, {"elements", subgroup_list(p, g, h)}});
      }
      json j{{"supported", false},
             {"note",
              "every block is a singleton, so Q is the symmetric group on the "
              "blocks; listing its maximal subgroups"},
             {"maximal_subgroups", std::move(subs)}};
      if (cfg.format == Format::table) {
        std::cout << "Q is a group; maximal subgroups:\n";
        for (auto const& s : j["maximal_subgroups"]) {
          std::cout << "  size " << s["size"].get<std::size_t>() << "  ";
          for (auto const& e : s["elements"]) {
            std::cout << e.get<std::string>() << ' ';
          }
          std::cout << '\n';
        }
      } else {
        emit(j);
      }
      return 0;
    }

    auto const r     = maximal_subsemigroups_q(p, cfg.bounds, verify_limit(cfg));
    json       subs  = json::array();
    std::size_t label = 0;
    for (auto const* list : {&r.group_type, &r.right_zero_type}) {
      for (auto const& t : *list) {
        json entry{{"label", "M" + std::to_string(++label)},
                   {"kind", t.kind == MaximalKind::group ? "group" : "right_zero"},
                   {"size", t.elements.size()}};
        if (t.kind == MaximalKind::group) {
          entry["subgroup"]           = q_list(p, t.subgroup);
          entry["omitted_idempotent"] = nullptr;
        } else {
          entry["subgroup"]           = nullptr;
          entry["omitted_idempotent"] = to_q_string(p, *t.omitted_idempotent);
        }
        entry["elements"] = q_list(p, t.elements.elements());
        subs.push_back(std::move(entry));
      }
    }
    json j{{"supported", true},
           {"counts",
            {{"s_k", r.counts.s_k}, {"m", exact_count(r.counts.m)},
             {"total", exact_count(r.counts.total)}}},
           {"verified", r.verified},
           {"subsemigroups", std::move(subs)}};
    if (cfg.format == Format::table) {
      std::cout << std::left << std::setw(5) << "name" << std::setw(11) << "kind"
                << std::setw(6) << "size" << "defined by\n";
      for (auto const& s : j["subsemigroups"]) {
        std::string by;
        if (s["kind"] == "group") {
          by = "subgroup {";
          for (auto const& e : s["subgroup"]) {
            by += (by.back() == '{' ? "" : " ") + e.get<std::string>();
          }
          by += "}";
        } else {
          by = "omits H-class of " + s["omitted_idempotent"].get<std::string>();
        }
        std::cout << std::setw(5) << s["label"].get<std::string>() << std::setw(11)
                  << s["kind"].get<std::string>() << std::setw(6)
                  << s["size"].get<std::size_t>() << by << '\n';
      }
      std::cout << "total " << r.counts.total << " = s_k " << r.counts.s_k
                << " + m " << r.counts.m << '\n';
    } else {
      emit(j);
    }
    return 0;
  }

  int cmd_iso(RunConfig const& cfg) {
    auto const left  = read_partition(cfg.partition);
    auto const right = read_partition(cfg.right);
    bool const iso   = q_isomorphic(left, right);
    auto key = [](PartitionedSet const& p) {
      auto k = iso_class_key(p);
      return json{{"k", k.k}, {"m", exact_count(k.m)}};
    };
    json j{{"isomorphic", iso},
           {"left_key", key(left)},
           {"right_key", key(right)},
           {"witness_verified", false}};
    if (iso) {
      auto w = build_isomorphism(
          left, right, cfg.bounds, verify_limit(cfg), 20'000, cfg.seed);
      j["witness_verified"] = true;
      j["exhaustive"]       = w.exhaustive;
      j["pairs_checked"]    = w.pairs_checked;
    }
    if (cfg.format == Format::table) {
      std::cout << "isomorphic        " << (iso ? "yes" : "no") << '\n'
                << "witness verified  "
                << (j["witness_verified"].get<bool>() ? "yes" : "no") << '\n';
    } else {
      emit(j);
    }
    return 0;
  }

  int cmd_census(RunConfig const& cfg) {
    auto const  classes = classify_partitions(cfg.census_n);
    json        list    = json::array();
    std::size_t count   = 0;
    for (auto const& [key, parts] : classes) {
      list.push_back({{"k", key.k}, {"m", exact_count(key.m)}, {"partitions", parts}});
      count += parts.size();
    }
    json j{{"n", cfg.census_n},
           {"partition_count", count},
           {"class_count", classes.size()},
           {"classes", std::move(list)}};
    if (cfg.format == Format::table) {
      std::cout << std::left << std::setw(4) << "k" << std::setw(8) << "m"
                << "block sizes\n";
      for (auto const& [key, parts] : classes) {
        std::cout << std::setw(4) << key.k << std::setw(8) << key.m;
        for (auto const& sizes : parts) {
          std::cout << '[';
          for (std::size_t i = 0; i < sizes.size(); ++i) {
            std::cout << (i ? "," : "") << sizes[i];
          }
          std::cout << "] ";
        }
        std::cout << '\n';
      }
    } else {
      emit(j);
    }
    return 0;
  }

  int cmd_verify(RunConfig const& cfg) {
    auto const    p = read_partition(cfg.partition);
    VerifyOptions opt;
    opt.bounds = cfg.bounds;
    opt.seed   = cfg.seed;
    auto report = verify_instance(p, opt);
    if (!cfg.audit_out.empty()) {
      std::ofstream out(cfg.audit_out);
      if (!out) {
        throw ValidationError("cannot write " + cfg.audit_out);
      }
      out << report.audit.dump(2) << '\n';
    }
    if (!cfg.quiet) {
      if (cfg.format == Format::table) {
        for (auto const& c : report.checks) {
          std::cout << std::left << std::setw(36) << c.name
                    << (c.skipped ? "skip" : (c.passed ? "pass" : "FAIL"))
                    << "  " << c.detail << '\n';
        }
        std::cout << std::setw(36) << "generating_set_audit"
                  << (report.audit["consistent"].get<bool>() ? "pass" : "FAIL")
                  << '\n';
      } else {
        emit(to_json(report));
      }
    }
    return report.passed() ? 0 : 4;
  }

  int cmd_check(RunConfig const& cfg) {
    auto const p = read_partition(cfg.partition);
    auto const a = parse_map(cfg.map);
    if (a.degree() != p.degree()) {
      throw DimensionError("map has " + std::to_string(a.degree())
                           + " entries, the partition has "
                           + std::to_string(p.degree()) + " points");
    }
    json j;
    j["map"]      = to_json(a)["images"];
    j["in_te"]    = in_te(p, a);
    j["in_te_star"] = in_te_star(p, a);
    bool const q  = in_q(p, a);
    j["in_q"]     = q;
    auto const im = image(a);
    j["image_is_cross_section"] = is_cross_section(p, im);
    j["kernel_classes"]         = kernel_partition(a).classes.size();
    if (q) {
      j["q"]          = to_q_string(p, a);
      j["idempotent"] = is_idempotent_q(p, a);
      j["h_class_idempotent"] = to_q_string(p, idempotent_of(p, a));
      if (cardinality_q(p) <= oracle_verify_limit) {
        j["regular_in_q"] = is_regular_element(a, enumerate_q(p));
      } else {
        j["regular_in_q"] = nullptr;
      }
    } else {
      j["q"]                  = nullptr;
      j["idempotent"]         = nullptr;
      j["h_class_idempotent"] = nullptr;
      j["regular_in_q"]       = nullptr;
    }
    if (cfg.format == Format::json) {
      emit(j);
      return 0;
    }
    auto yes_no = [](json const& v) -> std::string {
      if (v.is_null()) {
        return "-";
      }
      return v.get<bool>() ? "yes" : "no";
    };
    std::cout << std::left << std::setw(24) << "map" << to_string(a) << '\n'
              << std::setw(24) << "in T_E" << yes_no(j["in_te"]) << '\n'
              << std::setw(24) << "in T_E*" << yes_no(j["in_te_star"]) << '\n'
              << std::setw(24) << "in Q" << yes_no(j["in_q"]) << '\n'
              << std::setw(24) << "image is cross-section"
              << yes_no(j["image_is_cross_section"]) << '\n'
              << std::setw(24) << "idempotent" << yes_no(j["idempotent"]) << '\n'
              << std::setw(24) << "regular in Q" << yes_no(j["regular_in_q"])
              << '\n';
    if (q) {
      std::cout << std::setw(24) << "Q-shorthand" << to_q_string(p, a) << '\n';
    }
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qstar: structure of the semigroup of block-collapsing maps "
               "whose image is a cross-section (maps act on the right: in ab, "
               "a is applied first)"};
  app.require_subcommand(1);

  RunConfig   cfg;
  std::string format = "json";
  std::string level  = "oracle-verify";
  app.add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--max-closure", cfg.bounds.max_closure,
                 "largest semigroup the engine will build")
      ->envname("QSTAR_MAX_CLOSURE")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-group-order", cfg.bounds.max_group_order,
                 "largest group for subgroup and isomorphism searches")
      ->check(CLI::PositiveNumber);
  app.add_option("--verify-level", level, "construct-only or oracle-verify")
      ->check(CLI::IsMember({"construct-only", "oracle-verify"}));
  app.add_option("--seed", cfg.seed, "seed for randomized sampling");

  auto partition_opt = [&](CLI::App* sub) {
    sub->add_option("--partition", cfg.partition,
                    "blocks, e.g. \"1,2,3|4,5|6\" or JSON")
        ->required();
  };
  auto* analyze = app.add_subcommand("analyze", "cardinality, idempotents, rank");
  partition_opt(analyze);
  auto* generate = app.add_subcommand("generate", "a minimal generating set");
  partition_opt(generate);
  auto* maximal = app.add_subcommand("maximal", "all maximal subsemigroups");
  partition_opt(maximal);
  auto* iso = app.add_subcommand("iso", "decide isomorphism of two instances");
  iso->add_option("--left", cfg.partition)->required();
  iso->add_option("--right", cfg.right)->required();
  auto* census = app.add_subcommand("census", "classify all partitions of n");
  census->add_option("--n", cfg.census_n, "1 to 12")->required()->check(CLI::PositiveNumber);
  auto* verify = app.add_subcommand("verify", "cross-validate one instance");
  partition_opt(verify);
  verify->add_option("--audit-out", cfg.audit_out,
                     "write the generating-set audit report here");
  verify->add_flag("--quiet", cfg.quiet, "only set the exit status");
  auto* check = app.add_subcommand("check", "membership predicates for one map");
  partition_opt(check);
  check->add_option("--map", cfg.map, "images, e.g. 1,1,1,4,4,6")->required();

  for (auto* sub : {analyze, generate, maximal, iso, census, verify, check}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  bool const format_given = app.count("--format") > 0;
  cfg.format = format == "table" || (!format_given && check->parsed())
                   ? Format::table
                   : Format::json;
  cfg.oracle_verify = level == "oracle-verify";

  try {
    if (analyze->parsed()) return cmd_analyze(cfg);
    if (generate->parsed()) return cmd_generate(cfg);
    if (maximal->parsed()) return cmd_maximal(cfg);
    if (iso->parsed()) return cmd_iso(cfg);
    if (census->parsed()) return cmd_census(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (check->parsed()) return cmd_check(cfg);
  } catch (ResourceError const& e) {
    std::cerr << "qstar: " << e.what() << '\n';
    return 3;
  } catch (ConsistencyError const& e) {
    std::cerr << "qstar: internal consistency failure: " << e.what() << '\n';
    return 4;
  } catch (Error const& e) {
    std::cerr << "qstar: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
