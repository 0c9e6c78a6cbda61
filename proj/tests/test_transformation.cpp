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

#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "qstar/exception.hpp"
#include "qstar/transformation.hpp"

using namespace qstar;

namespace {
  Transformation random_map(std::mt19937_64& rng, std::size_t n) {
    std::vector<point_type> im(n);
    for (auto& y : im) {
      y = static_cast<point_type>(rng() % n);
    }
    return Transformation(im);
  }
}  // namespace

TEST_CASE("construction") {
  CHECK_THROWS_AS(Transformation({0, 3, 1}), ValidationError);
  CHECK(Transformation::identity(3).images().size() == 3);
  CHECK(Transformation::constant(4, 2)[3] == 2);
  CHECK_THROWS_AS(Transformation::constant(2, 2), ValidationError);
}

TEST_CASE("right action") {
  Transformation a({1, 2, 0});
  Transformation b({0, 0, 2});
  // x(ab) = (xa)b
  auto ab = compose(a, b);
  CHECK(ab == Transformation({0, 2, 0}));
  CHECK(ab == a * b);
  CHECK_THROWS_AS(compose(a, Transformation({0, 1})), DimensionError);
}

TEST_CASE("worked example products") {
  CHECK(test::alpha(7) * test::alpha(7) == test::alpha(1));
  CHECK(test::alpha(7) * test::alpha(2) == test::alpha(8));
}

TEST_CASE("composition is associative") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    std::size_t n = 1 + rng() % 7;
    auto        a = random_map(rng, n), b = random_map(rng, n), c = random_map(rng, n);
    CHECK((a * b) * c == a * (b * c));
    CHECK(Transformation::identity(n) * a == a);
    CHECK(a * Transformation::identity(n) == a);
  }
}

TEST_CASE("image") {
  CHECK(image(test::alpha(1)) == std::vector<point_type>{0, 3, 5});
  CHECK(image(Transformation::constant(5, 3)) == std::vector<point_type>{3});
  CHECK(image(Transformation::identity(4)) == std::vector<point_type>{0, 1, 2, 3});
}

TEST_CASE("kernel partition") {
  auto k = kernel_partition(test::alpha(1));
  CHECK(k.classes
        == std::vector<std::vector<point_type>>{{0, 1, 2}, {3, 4}, {5}});
  CHECK(k.class_image == std::vector<point_type>{0, 3, 5});
  CHECK(kernel_partition(Transformation::identity(3)).classes.size() == 3);
  auto k2 = kernel_partition(Transformation({0, 0, 2, 2}));
  CHECK(k2.classes == std::vector<std::vector<point_type>>{{0, 1}, {2, 3}});
  CHECK(k2.class_image == std::vector<point_type>{0, 2});
}

TEST_CASE("kernel classes are the fibres") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 1 + rng() % 8;
    auto        a = random_map(rng, n);
    auto        k = kernel_partition(a);
    CHECK(k.classes.size() == image(a).size());
    for (std::size_t c = 0; c < k.classes.size(); ++c) {
      for (auto x : k.classes[c]) {
        CHECK(a[x] == k.class_image[c]);
      }
    }
  }
}

TEST_CASE("Q shorthand") {
  auto p = test::p6();
  CHECK(to_q_string(p, test::alpha(7)) == "(4,1,6)");
  CHECK(to_string(test::alpha(7)) == "[4,4,4,1,1,6]");
  CHECK(q_tuple(p, test::alpha(13)) == std::vector<point_type>{3, 5, 0});
  CHECK_THROWS_AS(q_tuple(p, Transformation::identity(6)), ContractError);
  std::vector<point_type> shorty{0, 3};
  CHECK_THROWS_AS(from_q_tuple(p, shorty), ValidationError);
}

TEST_CASE("canonical order is lexicographic on images") {
  CHECK(Transformation({0, 1}) < Transformation({1, 0}));
  CHECK(test::alpha(1) < test::alpha(2));
  TransformationHash h;
  CHECK(h(test::alpha(3)) == h(test::alpha(3)));
}
