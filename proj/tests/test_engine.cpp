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

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "qstar/engine.hpp"
#include "qstar/exception.hpp"
#include "qstar/q_structure.hpp"

using namespace qstar;

namespace {
  GroupTable group_of(std::vector<Transformation> gens) {
    return GroupTable::from_elements(closure(gens).elements());
  }

  GroupTable cyclic4() {
    return group_of({Transformation({1, 2, 3, 0})});
  }

  GroupTable klein4() {
    return group_of({Transformation({1, 0, 3, 2}), Transformation({2, 3, 0, 1})});
  }

  GroupTable dihedral8() {
    return group_of({Transformation({1, 2, 3, 0}), Transformation({0, 3, 2, 1})});
  }

  std::set<std::vector<Transformation>> as_sets(GroupTable const&            g,
                                                std::vector<Subgroup> const& subs) {
    std::set<std::vector<Transformation>> out;
    for (auto const& h : subs) {
      std::vector<Transformation> v;
      for (auto i : h) {
        v.push_back(g.element(i));
      }
      std::sort(v.begin(), v.end());
      out.insert(v);
    }
    return out;
  }
}  // namespace

TEST_CASE("closure examples") {
  auto s = closure(test::alphas({7}));
  CHECK(s.elements() == std::vector<Transformation>{test::alpha(1), test::alpha(7)});
  CHECK(s.generators() == test::alphas({7}));
  CHECK(closure(std::vector{Transformation::identity(4)}).size() == 1);

  auto gens = test::alphas({2, 3, 4, 5, 6, 7, 13});
  auto q    = closure(gens);
  CHECK(q.size() == 36);
  CHECK(q == enumerate_q(test::p6()));
}

TEST_CASE("closure errors") {
  std::vector<Transformation> none;
  CHECK_THROWS_AS(closure(none), ContractError);
  std::vector<Transformation> mixed{Transformation::identity(2),
                                    Transformation::identity(3)};
  CHECK_THROWS_AS(closure(mixed), DimensionError);
  std::vector<Transformation> big{Transformation({1, 2, 3, 4, 0}),
                                  Transformation({1, 0, 2, 3, 4}),
                                  Transformation({0, 0, 2, 3, 4})};
  CHECK(closure(big).size() == 3125);
  CHECK_THROWS_AS(closure(big, 100), ResourceError);
}

TEST_CASE("closure agrees with the naive fixpoint") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t                 n = 1 + rng() % 4;
    std::vector<Transformation> gens;
    for (std::size_t g = 0, ng = 1 + rng() % 3; g < ng; ++g) {
      std::vector<point_type> im(n);
      for (auto& y : im) {
        y = static_cast<point_type>(rng() % n);
      }
      gens.emplace_back(im);
    }
    auto s     = closure(gens);
    auto naive = test::naive_closure(gens);
    CHECK(s.elements() == std::vector<Transformation>(naive.begin(), naive.end()));
    CHECK(is_closed(s.elements()));
  }
}

TEST_CASE("SemigroupSet") {
  CHECK_THROWS_AS(SemigroupSet::from_elements(test::alphas({7})), ContractError);
  CHECK_THROWS_AS(SemigroupSet::from_elements({}), ContractError);
  auto s = SemigroupSet::from_elements(test::alphas({7, 1, 7}));
  CHECK(s.size() == 2);
  CHECK(s.contains(test::alpha(7)));
  CHECK_FALSE(s.contains(test::alpha(2)));
  CHECK(s.index_of(test::alpha(7)) == 1);
  CHECK_FALSE(s.index_of(test::alpha(2)).has_value());
  CHECK_FALSE(is_closed(test::alphas({7})));
}

TEST_CASE("Cayley table closure") {
  auto              q = enumerate_q(test::p6());
  CayleyTable const t(q);
  CHECK(t.size() == 36);
  CHECK(q[t.product(3, 7)] == q[3] * q[7]);
  CayleyTable::mask_type gens = 0;
  for (auto i : {1, 2, 3, 4, 5, 6}) {
    gens |= CayleyTable::mask_type(1) << *q.index_of(test::alpha(i + 1));
  }
  CHECK(std::popcount(t.close(gens)) == 12);
  CHECK(t.close(t.full()) == t.full());
  CHECK(t.close(0) == 0);
}

TEST_CASE("generating subsets") {
  auto one = make_partitioned_set(5, {{0, 1, 2, 3, 4}});
  auto rz  = enumerate_q(one);
  CHECK_FALSE(find_generating_subset(rz, 4).has_value());
  auto g = find_generating_subset(rz, 5);
  REQUIRE(g.has_value());
  CHECK(g->size() == 5);

  auto s3 = enumerate_q(identity_relation(3));
  CHECK_FALSE(find_generating_subset(s3, 1).has_value());
  auto h = find_generating_subset(s3, 2);
  REQUIRE(h.has_value());
  std::vector<Transformation> gens;
  for (auto i : *h) {
    gens.push_back(s3[i]);
  }
  CHECK(closure(gens) == s3);
}

TEST_CASE("Green's R via kernels") {
  CHECK(green_r_related(test::alpha(1), test::alpha(7)));
  CHECK(green_r_related(test::alpha(5), test::alpha(5)));
  CHECK_FALSE(green_r_related(Transformation::identity(3),
                              Transformation::constant(3, 0)));
  auto t2 = closure(test::all_maps(2));
  CHECK(green_r_definitional(t2[0], t2[0], t2));
  CHECK_THROWS_AS(green_r_definitional(test::alpha(1), test::alpha(1), t2),
                  ContractError);
  // Q is R-simple: all its elements share one kernel
  auto q = enumerate_q(test::p6());
  for (auto const& a : q.elements()) {
    CHECK(green_r_definitional(a, test::alpha(1), q));
  }
}

TEST_CASE("kernel equality is R in T(X) on three points") {
  auto t3 = closure(test::all_maps(3));
  REQUIRE(t3.size() == 27);
  for (auto const& a : t3.elements()) {
    for (auto const& b : t3.elements()) {
      CHECK(green_r_related(a, b) == green_r_definitional(a, b, t3));
    }
  }
}

TEST_CASE("right groups, regularity, left cancellativity") {
  auto q = enumerate_q(test::p6());
  CHECK(is_right_group(q));
  CHECK(is_regular_semigroup(q));
  CHECK(is_left_cancellative(q));

  CHECK(is_right_group(enumerate_q(identity_relation(4))));

  auto t2 = closure(test::all_maps(2));
  CHECK_FALSE(is_right_group(t2));
  CHECK(is_regular_semigroup(t2));
  CHECK_FALSE(is_left_cancellative(t2));

  auto rz = enumerate_q(make_partitioned_set(3, {{0, 1, 2}}));
  CHECK(is_right_group(rz));
  CHECK(is_regular_semigroup(rz));
  CHECK(is_left_cancellative(rz));
}

TEST_CASE("regular elements") {
  auto q = enumerate_q(test::p6());
  for (auto const& a : q.elements()) {
    CHECK(is_regular_element(a, q));
  }
  Transformation a({1, 2, 3, 3});
  auto           s = closure(std::vector{a});
  CHECK(s.size() == 3);
  CHECK_FALSE(is_regular_element(a, s));
  CHECK(is_regular_element(Transformation::constant(4, 3), s));
  CHECK_FALSE(is_regular_semigroup(s));
  CHECK_THROWS_AS(is_regular_element(a, q), ContractError);
}

TEST_CASE("group tables") {
  auto g = h_class(test::p6(), test::alpha(1));
  CHECK(g.order() == 6);
  CHECK(g.element(g.identity()) == test::alpha(1));
  for (std::size_t i = 0; i < g.order(); ++i) {
    CHECK(g.product(i, g.inverse(i)) == g.identity());
  }
  CHECK(g.element_order(*g.index_of(test::alpha(7))) == 2);
  CHECK(g.element_order(*g.index_of(test::alpha(13))) == 3);
  CHECK_THROWS_AS(GroupTable::from_elements(test::alphas({1, 2})), ContractError);
  CHECK_THROWS_AS(GroupTable::from_elements(test::alphas({1, 7, 13})), ContractError);
  CHECK_THROWS_AS(symmetric_group(6, 120), ResourceError);
  CHECK(symmetric_group(5).order() == 120);
}

TEST_CASE("subgroup lattices") {
  auto s3 = h_class(test::p6(), test::alpha(1));
  CHECK(subgroup_lattice(s3).size() == 6);
  CHECK(subgroup_lattice(symmetric_group(1)).size() == 1);
  CHECK(subgroup_lattice(symmetric_group(2)).size() == 2);
  CHECK(subgroup_lattice(symmetric_group(4)).size() == 30);
  CHECK(subgroup_lattice(dihedral8()).size() == 10);

  for (auto const& g : {s3, cyclic4(), klein4(), dihedral8(), symmetric_group(3)}) {
    auto lattice = subgroup_lattice(g);
    auto oracle  = test::subgroups_by_subsets(g.elements());
    std::set<std::vector<Transformation>> expected;
    for (auto v : oracle) {
      std::sort(v.begin(), v.end());
      expected.insert(v);
    }
    CHECK(as_sets(g, lattice) == expected);
    CHECK(lattice.size() == expected.size());
  }
}

TEST_CASE("maximal subgroups") {
  auto s3  = h_class(test::p6(), test::alpha(1));
  auto max = maximal_subgroups(s3);
  REQUIRE(max.size() == 4);
  CHECK(max[0].size() == 2);
  CHECK(max[1].size() == 2);
  CHECK(max[2].size() == 2);
  CHECK(max[3].size() == 3);
  CHECK(maximal_subgroups(symmetric_group(1)).empty());
  CHECK(maximal_subgroups(symmetric_group(2)).size() == 1);
  // A_4, four point stabilisers, three dihedral groups of order 8
  CHECK(maximal_subgroups(symmetric_group(4)).size() == 8);
  CHECK(maximal_subgroups(cyclic4()).size() == 1);
  CHECK(maximal_subgroups(klein4()).size() == 3);
}

TEST_CASE("maximal subgroups of S_4 from two-generated subgroups") {
  // every subgroup of S_4 is generated by at most two elements
  auto                                  s4 = symmetric_group(4);
  std::set<std::vector<Transformation>> subs;
  for (auto const& a : s4.elements()) {
    for (auto const& b : s4.elements()) {
      auto c = test::naive_closure({a, b});
      subs.emplace(c.begin(), c.end());
    }
  }
  CHECK(subs.size() == subgroup_lattice(s4).size());
  std::size_t maximal = 0;
  for (auto const& h : subs) {
    if (h.size() == 24) {
      continue;
    }
    bool covered = false;
    for (auto const& k : subs) {
      covered = covered
                || (k.size() > h.size() && k.size() < 24
                    && std::includes(k.begin(), k.end(), h.begin(), h.end()));
    }
    maximal += !covered;
  }
  CHECK(maximal == 8);
  CHECK(as_sets(s4, maximal_subgroups(s4)).size() == maximal);
}

TEST_CASE("maximal subsemigroups by definition") {
  auto q = enumerate_q(test::p6());
  CHECK(is_maximal_subsemigroup(SemigroupSet::from_elements(test::alpha_range(1, 12)), q));
  auto e = SemigroupSet::from_elements(test::alpha_range(1, 6));
  CHECK_FALSE(is_maximal_subsemigroup(e, q));
  CHECK_THROWS_AS(is_maximal_subsemigroup(q, q), ContractError);

  auto rz = enumerate_q(make_partitioned_set(4, {{0, 1, 2, 3}}));
  for (std::size_t x = 0; x < rz.size(); ++x) {
    std::vector<Transformation> rest;
    for (std::size_t y = 0; y < rz.size(); ++y) {
      if (y != x) {
        rest.push_back(rz[y]);
      }
    }
    CHECK(is_maximal_subsemigroup(SemigroupSet::from_elements(rest), rz));
  }
}

TEST_CASE("group isomorphism") {
  auto s3 = h_class(test::p6(), test::alpha(1));
  CHECK(groups_isomorphic(s3, symmetric_group(3)));
  CHECK_FALSE(groups_isomorphic(s3, symmetric_group(2)));
  CHECK_FALSE(groups_isomorphic(cyclic4(), klein4()));
  CHECK(groups_isomorphic(cyclic4(), group_of({Transformation({0, 2, 3, 4, 1})})));
  CHECK_FALSE(groups_isomorphic(dihedral8(),
                                group_of({Transformation({1, 2, 3, 0, 4, 5}),
                                          Transformation({0, 1, 2, 3, 5, 4})})));

  for (auto const& [g, h] :
       std::vector<std::pair<GroupTable, GroupTable>>{{s3, symmetric_group(3)},
                                                      {dihedral8(), dihedral8()},
                                                      {symmetric_group(4),
                                                       symmetric_group(4)}}) {
    auto f = find_group_isomorphism(g, h);
    REQUIRE(f.has_value());
    std::set<std::size_t> img(f->begin(), f->end());
    CHECK(img.size() == g.order());
    for (std::size_t i = 0; i < g.order(); ++i) {
      for (std::size_t j = 0; j < g.order(); ++j) {
        CHECK((*f)[g.product(i, j)] == h.product((*f)[i], (*f)[j]));
      }
    }
  }
}
