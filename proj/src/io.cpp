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

#include "qstar/io.hpp"

#include <charconv>
#include <vector>

#include "qstar/exception.hpp"

namespace qstar {

  namespace {
    std::string_view trim(std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
      }
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
      }
      return s;
    }

    point_type parse_label(std::string_view s) {
      s = trim(s);
      std::uint64_t v   = 0;
      auto [ptr, ec]    = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw ValidationError("'" + std::string(s) + "' is not a point label");
      }
      if (v == 0 || v > 1'000'000) {
        throw ValidationError("point label " + std::string(s)
                              + " out of range (labels are 1-based)");
      }
      return static_cast<point_type>(v - 1);
    }

    std::vector<point_type> parse_list(std::string_view s) {
      std::vector<point_type> out;
      while (true) {
        auto comma = s.find(',');
        out.push_back(parse_label(s.substr(0, comma)));
        if (comma == std::string_view::npos) {
          return out;
        }
        s.remove_prefix(comma + 1);
      }
    }

    point_type label_from_json(json const& j) {
      if (!j.is_number_unsigned() || j.get<std::uint64_t>() == 0) {
        throw ValidationError("expected a positive integer label, got "
                              + j.dump());
      }
      return static_cast<point_type>(j.get<std::uint64_t>() - 1);
    }

    std::vector<point_type> labels_from_json(json const& j) {
      if (!j.is_array()) {
        throw ValidationError("expected an array of labels, got " + j.dump());
      }
      std::vector<point_type> out;
      for (auto const& x : j) {
        out.push_back(label_from_json(x));
      }
      return out;
    }

    // Same checks as PartitionedSet, reported with 1-based labels.
    PartitionedSet checked_partition(std::size_t                          n,
                                     std::vector<std::vector<point_type>> blocks) {
      std::vector<std::size_t> owner(n, 0);
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].empty()) {
          throw ValidationError("block " + std::to_string(i + 1) + " is empty");
        }
        for (point_type x : blocks[i]) {
          if (x >= n) {
            throw ValidationError("point " + std::to_string(x + 1)
                                  + " is outside 1.." + std::to_string(n));
          }
          if (owner[x] == i + 1) {
            throw ValidationError("point " + std::to_string(x + 1)
                                  + " occurs twice in block " + std::to_string(i + 1));
          }
          if (owner[x] != 0) {
            throw ValidationError("point " + std::to_string(x + 1)
                                  + " occurs in blocks " + std::to_string(owner[x])
                                  + " and " + std::to_string(i + 1));
          }
          owner[x] = i + 1;
        }
      }
      for (std::size_t x = 0; x < n; ++x) {
        if (owner[x] == 0) {
          throw ValidationError("point " + std::to_string(x + 1)
                                + " is in no block");
        }
      }
      return PartitionedSet(n, std::move(blocks));
    }

    json labels_to_json(std::span<point_type const> v) {
      json j = json::array();
      for (point_type x : v) {
        j.push_back(x + 1);
      }
      return j;
    }
  }  // namespace

  PartitionedSet parse_partition(std::string_view text) {
    std::vector<std::vector<point_type>> blocks;
    std::size_t                          n = 0;
    while (true) {
      auto bar = text.find('|');
      blocks.push_back(parse_list(text.substr(0, bar)));
      n += blocks.back().size();
      if (bar == std::string_view::npos) {
        break;
      }
      text.remove_prefix(bar + 1);
    }
    return checked_partition(n, std::move(blocks));
  }

  std::string to_compact(PartitionedSet const& p) {
    std::string s;
    for (std::size_t i = 0; i < p.block_count(); ++i) {
      if (i != 0) {
        s += '|';
      }
      auto b = p.block(i);
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (j != 0) {
          s += ',';
        }
        s += std::to_string(b[j] + 1);
      }
    }
    return s;
  }

  json to_json(PartitionedSet const& p) {
    json blocks = json::array();
    for (auto const& b : p.blocks()) {
      blocks.push_back(labels_to_json(b));
    }
    return json{{"n", p.degree()}, {"blocks", std::move(blocks)}};
  }

  PartitionedSet partition_from_json(json const& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("blocks")
        || !j["n"].is_number_unsigned() || !j["blocks"].is_array()) {
      throw ValidationError("partition JSON must look like "
                            "{\"n\": 6, \"blocks\": [[1,2,3],[4,5],[6]]}");
    }
    std::vector<std::vector<point_type>> blocks;
    for (auto const& b : j["blocks"]) {
      blocks.push_back(labels_from_json(b));
    }
    return checked_partition(j["n"].get<std::size_t>(), std::move(blocks));
  }

  Transformation parse_map(std::string_view text) {
    auto images = parse_list(text);
    for (std::size_t x = 0; x < images.size(); ++x) {
      if (images[x] >= images.size()) {
        throw ValidationError("image " + std::to_string(images[x] + 1) + " of point "
                              + std::to_string(x + 1) + " is outside 1.."
                              + std::to_string(images.size()));
      }
    }
    return Transformation(std::move(images));
  }

  json to_json(Transformation const& a) {
    return json{{"images", labels_to_json(a.images())}};
  }

  Transformation transformation_from_json(json const& j, PartitionedSet const* p) {
    if (j.is_object() && j.contains("images")) {
      return Transformation(labels_from_json(j["images"]));
    }
    if (j.is_object() && j.contains("q")) {
      if (p == nullptr) {
        throw ValidationError("Q-shorthand needs a partition");
      }
      return from_q_tuple(*p, labels_from_json(j["q"]));
    }
    throw ValidationError("transformation JSON needs \"images\" or \"q\": "
                          + j.dump());
  }

  json to_json(SemigroupSet const& s) {
    json j = json::array();
    for (auto const& a : s.elements()) {
      j.push_back(labels_to_json(a.images()));
    }
    return j;
  }

  SemigroupSet semigroup_from_json(json const& j) {
    if (!j.is_array() || j.empty()) {
      throw ValidationError("semigroup JSON must be a nonempty array");
    }
    std::vector<Transformation> elements;
    for (auto const& x : j) {
      elements.emplace_back(labels_from_json(x));
    }
    return SemigroupSet::from_elements(std::move(elements));
  }

  json exact_count(std::uint64_t v) {
    constexpr std::uint64_t max_safe = (std::uint64_t(1) << 53) - 1;
    if (v > max_safe) {
      return std::to_string(v);
    }
    return v;
  }

}  // namespace qstar
