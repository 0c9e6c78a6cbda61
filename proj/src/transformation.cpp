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

#include "qstar/transformation.hpp"

#include <algorithm>
#include <limits>

#include "qstar/exception.hpp"

namespace qstar {

  Transformation::Transformation(std::vector<point_type> images)
      : _images(std::move(images)) {
    for (std::size_t x = 0; x < _images.size(); ++x) {
      if (_images[x] >= _images.size()) {
        throw ValidationError("image " + std::to_string(_images[x])
                              + " of point " + std::to_string(x)
                              + " is out of range [0, "
                              + std::to_string(_images.size()) + ")");
      }
    }
  }

  Transformation Transformation::identity(std::size_t n) {
    std::vector<point_type> im(n);
    for (std::size_t x = 0; x < n; ++x) {
      im[x] = static_cast<point_type>(x);
    }
    return Transformation(std::move(im));
  }

  Transformation Transformation::constant(std::size_t n, point_type c) {
    return Transformation(std::vector<point_type>(n, c));
  }

  std::size_t TransformationHash::operator()(
      Transformation const& t) const noexcept {
    // FNV-1a over the image sequence
    std::size_t h = 14695981039346656037ULL;
    for (point_type x : t.images()) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return h;
  }

  Transformation compose(Transformation const& a, Transformation const& b) {
    if (a.degree() != b.degree()) {
      throw DimensionError("cannot compose maps of degree "
                           + std::to_string(a.degree()) + " and "
                           + std::to_string(b.degree()));
    }
    std::vector<point_type> im(a.degree());
    for (std::size_t x = 0; x < im.size(); ++x) {
      im[x] = b[a[static_cast<point_type>(x)]];
    }
    return Transformation(std::move(im));
  }

  std::vector<point_type> image(Transformation const& a) {
    std::vector<point_type> im(a.images().begin(), a.images().end());
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    return im;
  }

  KernelPartition kernel_partition(Transformation const& a) {
    constexpr auto  unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> class_of_value(a.degree(), unset);
    KernelPartition          result;
    for (point_type x = 0; x < a.degree(); ++x) {
      point_type v = a[x];
      if (class_of_value[v] == unset) {
        class_of_value[v] = result.classes.size();
        result.classes.emplace_back();
        result.class_image.push_back(v);
      }
      result.classes[class_of_value[v]].push_back(x);
    }
    return result;
  }

  Transformation from_q_tuple(PartitionedSet const&       p,
                              std::span<point_type const> tuple) {
    if (tuple.size() != p.block_count()) {
      throw DimensionError("Q-tuple has " + std::to_string(tuple.size())
                           + " entries but the partition has "
                           + std::to_string(p.block_count()) + " blocks");
    }
    std::vector<point_type> im(p.degree());
    for (std::size_t i = 0; i < p.block_count(); ++i) {
      if (tuple[i] >= p.degree()) {
        throw ValidationError("Q-tuple entry " + std::to_string(tuple[i])
                              + " is out of range");
      }
      for (point_type x : p.block(i)) {
        im[x] = tuple[i];
      }
    }
    return Transformation(std::move(im));
  }

  std::vector<point_type> q_tuple(PartitionedSet const& p,
                                  Transformation const& a) {
    if (a.degree() != p.degree()) {
      throw DimensionError("map degree does not match the partition");
    }
    std::vector<point_type> tuple;
    tuple.reserve(p.block_count());
    for (auto const& b : p.blocks()) {
      point_type v = a[b.front()];
      for (point_type x : b) {
        if (a[x] != v) {
          throw ContractError(to_string(a) + " is not constant on blocks");
        }
      }
      tuple.push_back(v);
    }
    return tuple;
  }

  namespace {
    std::string join_one_based(std::span<point_type const> v,
                               char                        open,
                               char                        close) {
      std::string s(1, open);
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0) {
          s += ',';
        }
        s += std::to_string(v[i] + 1);
      }
      s += close;
      return s;
    }
  }  // namespace

  std::string to_string(Transformation const& a) {
    return join_one_based(a.images(), '[', ']');
  }

  std::string to_q_string(PartitionedSet const& p, Transformation const& a) {
    return join_one_based(q_tuple(p, a), '(', ')');
  }

}  // namespace qstar
