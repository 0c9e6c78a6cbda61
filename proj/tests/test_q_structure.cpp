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
#include "qstar/exception.hpp"
#include "qstar/iso.hpp"
#include "qstar/membership.hpp"
#include "qstar/q_structure.hpp"

using namespace qstar;

namespace {
  std::set<Transformation> as_set(std::vector<Transformation> const& v) {
    return {v.begin(), v.end()};
  }
}  // namespace

TEST_CASE("enumeration of the worked example") {
  auto q = enumerate_q(test::p6());
  CHECK(q.size() == 36);
  CHECK(as_set(q.elements()) == as_set(test::alpha_range(1, 36)));
}

TEST_CASE("enumeration edge cases") {
  auto s3 = enumerate_q(identity_relation(3));
  CHECK(s3.size() == 6);
  for (auto const& a : s3.elements()) {
    CHECK(image(a).size() == 3);
  }
  auto rz = enumerate_q(make_partitioned_set(4, {{0, 1, 2, 3}}));
  CHECK(rz.elements()
        == std::vector<Transformation>{Transformation::constant(4, 0),
                                       Transformation::constant(4, 1),
                                       Transformation::constant(4, 2),
                                       Transformation::constant(4, 3)});
  CHECK(enumerate_q(identity_relation(1)).size() == 1);
  CHECK_THROWS_AS(enumerate_q(identity_relation(6), 100), ResourceError);
}

TEST_CASE("enumeration matches the n^n filter") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto const& sizes : integer_partitions(n)) {
      auto                        p = from_block_sizes(sizes);
      std::vector<Transformation> filtered;
      for (auto const& a : test::all_maps(n)) {
        if (test::in_q_by_definition(p, a)) {
          filtered.push_back(a);
        }
      }
      CHECK(enumerate_q(p).elements() == filtered);
    }
  }
}

TEST_CASE("cardinality and idempotent counts") {
  CHECK(cardinality_q(test::p6()) == 36);
  CHECK(cardinality_q(identity_relation(5)) == 120);
  std::vector<std::size_t> two_two{2, 2};
  CHECK(cardinality_q(from_block_sizes(two_two)) == 8);
  CHECK(idempotents_q(from_block_sizes(two_two)).size() == 4);
  CHECK(cardinality_q(identity_relation(20)) == 2432902008176640000ULL);
  CHECK_THROWS_AS(cardinality_q(identity_relation(21)), OverflowError);

  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto const& sizes : integer_partitions(n)) {
      auto p = from_block_sizes(sizes);
      auto q = enumerate_q(p);
      CHECK(q.size() == cardinality_q(p));
      std::size_t idem = 0;
      for (auto const& a : q.elements()) {
        idem += (a * a == a);
      }
      CHECK(idem == p.cross_section_count());
      CHECK(idempotents_q(p).size() == idem);
    }
  }
}

TEST_CASE("idempotents of the worked example") {
  CHECK(idempotents_q(test::p6()) == test::alphas({1, 4, 2, 5, 3, 6}));
  CHECK(idempotents_q(identity_relation(4))
        == std::vector<Transformation>{Transformation::identity(4)});
}

TEST_CASE("idempotents form a right zero semigroup") {
  for (auto sizes : std::vector<std::vector<std::size_t>>{{3, 2, 1}, {2, 2}, {4}, {2, 1, 2}}) {
    auto idem = idempotents_q(from_block_sizes(sizes));
    for (auto const& e : idem) {
      for (auto const& f : idem) {
        CHECK(e * f == f);
      }
    }
  }
}

TEST_CASE("group criterion") {
  CHECK(is_group_q(identity_relation(5)));
  CHECK_FALSE(is_group_q(test::p6()));
  CHECK(is_group_q(identity_relation(1)));
  CHECK_FALSE(is_group_q(make_partitioned_set(2, {{0, 1}})));
}

TEST_CASE("H-classes") {
  auto p = test::p6();
  auto h = h_class(p, test::alpha(1));
  CHECK(as_set(h.elements()) == as_set(test::alphas({1, 7, 13, 19, 25, 31})));
  CHECK(h_class(identity_relation(3), Transformation::identity(3)).order() == 6);
  auto one = make_partitioned_set(3, {{0, 1, 2}});
  CHECK(h_class(one, Transformation::constant(3, 2)).order() == 1);
  CHECK_THROWS_AS(h_class(p, Transformation::identity(6)), ContractError);

  // every H-class is the set of elements with one image
  auto q = enumerate_q(p);
  for (auto const& a : q.elements()) {
    auto                     g = h_class(p, a);
    std::set<Transformation> same_image;
    for (auto const& b : q.elements()) {
      if (image(b) == image(a)) {
        same_image.insert(b);
      }
    }
    CHECK(as_set(g.elements()) == same_image);
  }
}

TEST_CASE("q_element and its inverses") {
  auto                     p = test::p6();
  std::vector<std::size_t> perm{1, 0, 2};
  std::vector<point_type>  section{0, 3, 5};
  auto                     a = q_element(p, perm, section);
  CHECK(a == test::alpha(7));
  CHECK(block_permutation(p, a) == perm);
  CHECK(image_section(p, a) == section);
  CHECK(idempotent_of(p, test::alpha(8)) == test::alpha(2));
  for (std::size_t i = 1; i <= 6; ++i) {
    CHECK(idempotent_of(p, test::alpha(i)) == test::alpha(i));
  }
}

TEST_CASE("right group decomposition") {
  auto p = test::p6();
  auto d = decompose(p);
  CHECK(d.base_idempotent == test::alpha(1));
  CHECK(d.group_part.order() == 6);
  CHECK(d.idempotent_part.size() == 6);
  std::set<Transformation> products;
  for (std::size_t a = 0; a < d.group_part.order(); ++a) {
    for (std::size_t f = 0; f < d.idempotent_part.size(); ++f) {
      auto x = d.pair(a, f);
      products.insert(x);
      CHECK(split(p, d, x) == std::pair{a, f});
    }
  }
  CHECK(products == as_set(test::alpha_range(1, 36)));
  // the pairing is a homomorphism from H_e x E
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      for (std::size_t f = 0; f < 6; ++f) {
        for (std::size_t g = 0; g < 6; ++g) {
          CHECK(d.pair(a, f) * d.pair(b, g) == d.pair(d.group_part.product(a, b), g));
        }
      }
    }
  }

  auto ds = decompose(identity_relation(4));
  CHECK(ds.group_part.order() == 24);
  CHECK(ds.idempotent_part.size() == 1);
  auto dr = decompose(make_partitioned_set(5, {{0, 1, 2, 3, 4}}));
  CHECK(dr.group_part.order() == 1);
  CHECK(dr.idempotent_part.size() == 5);
}

TEST_CASE("every subsemigroup of Q is a right group") {
  std::mt19937_64 rng(23);
  for (auto sizes : std::vector<std::vector<std::size_t>>{{3, 2, 1}, {2, 2}, {2, 1, 1}, {3}}) {
    auto p = from_block_sizes(sizes);
    auto q = enumerate_q(p);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Transformation> gens;
      for (std::size_t i = 0, r = 1 + rng() % 3; i < r; ++i) {
        gens.push_back(q[rng() % q.size()]);
      }
      auto t = closure(gens);
      CHECK(is_right_group(t));
      CHECK(is_right_group(t) == (is_regular_semigroup(t) && is_left_cancellative(t)));
    }
  }
}
