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

#include "qstar/engine.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <set>
#include <string>
#include <unordered_map>

#include "qstar/arith.hpp"
#include "qstar/exception.hpp"

namespace qstar {

  namespace {
    void sort_unique(std::vector<Transformation>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }

    void check_degrees(std::span<Transformation const> v) {
      for (auto const& t : v) {
        if (t.degree() != v.front().degree()) {
          throw DimensionError("mixed degrees " + std::to_string(t.degree())
                               + " and "
                               + std::to_string(v.front().degree()));
        }
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // SemigroupSet
  ////////////////////////////////////////////////////////////////////////

  SemigroupSet SemigroupSet::from_elements(std::vector<Transformation> elements) {
    if (elements.empty()) {
      throw ContractError("a semigroup must be nonempty");
    }
    check_degrees(elements);
    sort_unique(elements);
    if (!is_closed(elements)) {
      throw ContractError("the given set of " + std::to_string(elements.size())
                          + " transformations is not closed under composition");
    }
    SemigroupSet s;
    s._elements = std::move(elements);
    return s;
  }

  SemigroupSet SemigroupSet::trusted(std::vector<Transformation> sorted_elements,
                                     std::vector<Transformation> generators) {
    if (sorted_elements.empty()) {
      throw ContractError("a semigroup must be nonempty");
    }
    SemigroupSet s;
    s._elements   = std::move(sorted_elements);
    s._generators = std::move(generators);
    return s;
  }

  bool SemigroupSet::contains(Transformation const& a) const {
    return std::binary_search(_elements.begin(), _elements.end(), a);
  }

  std::optional<std::size_t>
  SemigroupSet::index_of(Transformation const& a) const {
    auto it = std::lower_bound(_elements.begin(), _elements.end(), a);
    if (it == _elements.end() || *it != a) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _elements.begin());
  }

  bool is_closed(std::span<Transformation const> elements) {
    std::vector<Transformation> sorted(elements.begin(), elements.end());
    sort_unique(sorted);
    for (auto const& a : sorted) {
      for (auto const& b : sorted) {
        if (!std::binary_search(sorted.begin(), sorted.end(), a * b)) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // closure
  ////////////////////////////////////////////////////////////////////////

  SemigroupSet closure(std::span<Transformation const> gens_in,
                       std::size_t                     max_size) {
    if (gens_in.empty()) {
      throw ContractError("closure requires at least one generator");
    }
    check_degrees(gens_in);
    std::vector<Transformation> gens(gens_in.begin(), gens_in.end());
    sort_unique(gens);

    std::vector<Transformation>                                   elements;
    std::unordered_map<Transformation, std::size_t, TransformationHash> seen;
    auto add = [&](Transformation&& t) {
      if (seen.contains(t)) {
        return;
      }
      if (elements.size() >= max_size) {
        throw ResourceError("closure exceeds the bound of "
                            + std::to_string(max_size) + " elements");
      }
      seen.emplace(t, elements.size());
      elements.push_back(std::move(t));
    };
    for (auto const& g : gens) {
      add(Transformation(g));
    }
    // Every product g1 g2 ... gr is reached as (g1 ... g(r-1)) gr.
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (auto const& g : gens) {
        add(elements[i] * g);
      }
    }
    for (auto const& g : gens) {
      for (auto const& x : elements) {
        if (!seen.contains(g * x)) {
          throw ConsistencyError("closure is not closed under left "
                                 "multiplication by a generator");
        }
      }
    }
    sort_unique(elements);
    return SemigroupSet::trusted(std::move(elements), std::move(gens));
  }

  ////////////////////////////////////////////////////////////////////////
  // CayleyTable
  ////////////////////////////////////////////////////////////////////////

  CayleyTable::CayleyTable(SemigroupSet const& s) : _n(s.size()), _table() {
    _table.resize(_n * _n);
    for (std::size_t i = 0; i < _n; ++i) {
      for (std::size_t j = 0; j < _n; ++j) {
        auto k = s.index_of(s[i] * s[j]);
        if (!k) {
          throw ContractError("Cayley table of a set that is not closed");
        }
        _table[i * _n + j] = *k;
      }
    }
  }

  CayleyTable::mask_type CayleyTable::full() const noexcept {
    return _n >= 64 ? ~mask_type(0) : (mask_type(1) << _n) - 1;
  }

  CayleyTable::mask_type CayleyTable::close_with(mask_type   closed_set,
                                                 std::size_t x) const {
    if (_n > 64) {
      throw ResourceError("bitmask closure needs at most 64 elements");
    }
    mask_type set = closed_set;
    if (set & (mask_type(1) << x)) {
      return set;
    }
    set |= mask_type(1) << x;
    std::vector<std::size_t> queue{x};
    while (!queue.empty()) {
      std::size_t y = queue.back();
      queue.pop_back();
      for (mask_type rest = set; rest != 0; rest &= rest - 1) {
        auto z = static_cast<std::size_t>(std::countr_zero(rest));
        for (std::size_t p : {product(y, z), product(z, y)}) {
          if (!(set & (mask_type(1) << p))) {
            set |= mask_type(1) << p;
            queue.push_back(p);
          }
        }
      }
    }
    return set;
  }

  CayleyTable::mask_type CayleyTable::close(mask_type gens) const {
    mask_type result = 0;
    for (mask_type rest = gens; rest != 0; rest &= rest - 1) {
      result = close_with(result, std::countr_zero(rest));
    }
    return result;
  }

  namespace {
    bool generating_dfs(CayleyTable const&        table,
                        CayleyTable::mask_type    current,
                        std::size_t               start,
                        std::size_t               depth_left,
                        std::vector<std::size_t>& chosen) {
      if (current == table.full()) {
        return true;
      }
      if (depth_left == 0) {
        return false;
      }
      for (std::size_t x = start; x < table.size(); ++x) {
        // An element already generated adds nothing: any generating set
        // through it has a smaller one found on the branch that skips it.
        if (current & (CayleyTable::mask_type(1) << x)) {
          continue;
        }
        chosen.push_back(x);
        if (generating_dfs(
                table, table.close_with(current, x), x + 1, depth_left - 1, chosen)) {
          return true;
        }
        chosen.pop_back();
      }
      return false;
    }
  }  // namespace

  std::optional<std::vector<std::size_t>>
  find_generating_subset(SemigroupSet const& s, std::size_t max_size) {
    if (s.size() > 64) {
      throw ResourceError("find_generating_subset needs |S| <= 64");
    }
    CayleyTable const        table(s);
    std::vector<std::size_t> chosen;
    if (generating_dfs(table, 0, 0, max_size, chosen)) {
      return chosen;
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Green's R and right groups
  ////////////////////////////////////////////////////////////////////////

  bool green_r_related(Transformation const& a, Transformation const& b) {
    if (a.degree() != b.degree()) {
      throw DimensionError("Green's R on maps of different degree");
    }
    // classes are ordered by least element, so equal partitions compare equal
    return kernel_partition(a).classes == kernel_partition(b).classes;
  }

  namespace {
    bool in_principal_right_ideal(Transformation const& a,
                                  Transformation const& b,
                                  SemigroupSet const&   s) {
      if (a == b) {
        return true;
      }
      return std::any_of(s.elements().begin(),
                         s.elements().end(),
                         [&](Transformation const& x) { return b * x == a; });
    }
  }  // namespace

  bool green_r_definitional(Transformation const& a,
                            Transformation const& b,
                            SemigroupSet const&   s) {
    if (!s.contains(a) || !s.contains(b)) {
      throw ContractError("green_r_definitional: arguments must lie in S");
    }
    return in_principal_right_ideal(a, b, s) && in_principal_right_ideal(b, a, s);
  }

  bool is_right_group(SemigroupSet const& s) {
    CayleyTable              t(s);
    std::vector<std::size_t> hits(t.size());
    for (std::size_t a = 0; a < t.size(); ++a) {
      std::fill(hits.begin(), hits.end(), 0);
      for (std::size_t x = 0; x < t.size(); ++x) {
        ++hits[t.product(a, x)];
      }
      if (std::any_of(hits.begin(), hits.end(), [](auto h) { return h != 1; })) {
        return false;
      }
    }
    return true;
  }

  bool is_regular_semigroup(SemigroupSet const& s) {
    CayleyTable t(s);
    for (std::size_t a = 0; a < t.size(); ++a) {
      bool found = false;
      for (std::size_t b = 0; b < t.size() && !found; ++b) {
        found = t.product(t.product(a, b), a) == a;
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  bool is_left_cancellative(SemigroupSet const& s) {
    CayleyTable       t(s);
    std::vector<bool> hit(t.size());
    for (std::size_t a = 0; a < t.size(); ++a) {
      std::fill(hit.begin(), hit.end(), false);
      for (std::size_t x = 0; x < t.size(); ++x) {
        auto p = t.product(a, x);
        if (hit[p]) {
          return false;
        }
        hit[p] = true;
      }
    }
    return true;
  }

  bool is_regular_element(Transformation const& a, SemigroupSet const& s) {
    if (!s.contains(a)) {
      throw ContractError("is_regular_element: " + to_string(a)
                          + " is not in S");
    }
    return std::any_of(
        s.elements().begin(), s.elements().end(), [&](Transformation const& b) {
          return a * b * a == a;
        });
  }

  ////////////////////////////////////////////////////////////////////////
  // GroupTable
  ////////////////////////////////////////////////////////////////////////

  GroupTable GroupTable::from_elements(std::vector<Transformation> elements,
                                       std::size_t                 max_order) {
    if (elements.empty()) {
      throw ContractError("a group must be nonempty");
    }
    check_degrees(elements);
    sort_unique(elements);
    if (elements.size() > max_order) {
      throw ResourceError("group of order " + std::to_string(elements.size())
                          + " exceeds the bound " + std::to_string(max_order));
    }
    GroupTable g;
    g._elements  = std::move(elements);
    g._max_order = max_order;
    std::size_t const n = g._elements.size();
    g._table.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto k = g.index_of(g._elements[i] * g._elements[j]);
        if (!k) {
          throw ContractError("group elements are not closed under composition");
        }
        g._table[i * n + j] = *k;
      }
    }
    constexpr auto none = std::numeric_limits<std::size_t>::max();
    g._identity         = none;
    for (std::size_t e = 0; e < n && g._identity == none; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) {
        ok = g.product(e, x) == x && g.product(x, e) == x;
      }
      if (ok) {
        g._identity = e;
      }
    }
    if (g._identity == none) {
      throw ContractError("set has no two-sided identity");
    }
    g._inverse.assign(n, none);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (g.product(x, y) == g._identity && g.product(y, x) == g._identity) {
          g._inverse[x] = y;
          break;
        }
      }
      if (g._inverse[x] == none) {
        throw ContractError(to_string(g._elements[x]) + " has no inverse");
      }
    }
    return g;
  }

  std::optional<std::size_t> GroupTable::index_of(Transformation const& a) const {
    auto it = std::lower_bound(_elements.begin(), _elements.end(), a);
    if (it == _elements.end() || *it != a) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _elements.begin());
  }

  std::size_t GroupTable::element_order(std::size_t i) const {
    std::size_t k = 1;
    for (std::size_t p = i; p != _identity; p = product(p, i)) {
      ++k;
    }
    return k;
  }

  GroupTable symmetric_group(std::size_t k, std::size_t max_order) {
    if (k == 0) {
      throw ContractError("symmetric group on the empty set is not supported");
    }
    if (checked_factorial(k) > max_order) {
      throw ResourceError("S_" + std::to_string(k) + " exceeds the group bound "
                          + std::to_string(max_order));
    }
    std::vector<point_type> perm(k);
    for (std::size_t i = 0; i < k; ++i) {
      perm[i] = static_cast<point_type>(i);
    }
    std::vector<Transformation> elements;
    do {
      elements.emplace_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return GroupTable::from_elements(std::move(elements), max_order);
  }

  ////////////////////////////////////////////////////////////////////////
  // Subgroups
  ////////////////////////////////////////////////////////////////////////

  Subgroup subgroup_closure(GroupTable const& g, std::span<std::size_t const> gens) {
    std::vector<bool>        in(g.order(), false);
    std::vector<std::size_t> members{g.identity()};
    in[g.identity()] = true;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t s : gens) {
        std::size_t p = g.product(members[i], s);
        if (!in[p]) {
          in[p] = true;
          members.push_back(p);
        }
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  }

  namespace {
    bool subgroup_less(Subgroup const& a, Subgroup const& b) {
      if (a.size() != b.size()) {
        return a.size() < b.size();
      }
      return a < b;
    }
  }  // namespace

  std::vector<Subgroup> subgroup_lattice(GroupTable const& g) {
    if (g.order() > g.max_order()) {
      throw ResourceError("group exceeds the configured order bound");
    }
    struct Node {
      Subgroup                 members;
      std::vector<std::size_t> gens;
    };
    std::set<Subgroup>        seen;
    std::vector<Node>         nodes;
    std::vector<std::size_t>  cyclic_gens;
    for (std::size_t x = 0; x < g.order(); ++x) {
      std::size_t const gen[] = {x};
      Subgroup          c     = subgroup_closure(g, gen);
      if (seen.insert(c).second) {
        nodes.push_back({std::move(c), {x}});
        cyclic_gens.push_back(x);
      }
    }
    // Every subgroup is a join of finitely many cyclic subgroups, so joining
    // each known subgroup with each cyclic one reaches all of them.
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (std::size_t c : cyclic_gens) {
        if (std::binary_search(
                nodes[i].members.begin(), nodes[i].members.end(), c)) {
          continue;
        }
        auto gens = nodes[i].gens;
        gens.push_back(c);
        Subgroup j = subgroup_closure(g, gens);
        if (seen.insert(j).second) {
          nodes.push_back({std::move(j), std::move(gens)});
        }
      }
    }
    std::vector<Subgroup> result(seen.begin(), seen.end());
    std::sort(result.begin(), result.end(), subgroup_less);
    return result;
  }

  std::vector<Subgroup> maximal_subgroups(GroupTable const& g) {
    auto                  lattice = subgroup_lattice(g);
    std::vector<Subgroup> result;
    for (auto const& h : lattice) {
      if (h.size() == g.order()) {
        continue;
      }
      bool covered = std::any_of(lattice.begin(), lattice.end(), [&](auto const& k) {
        return k.size() > h.size() && k.size() < g.order()
               && std::includes(k.begin(), k.end(), h.begin(), h.end());
      });
      if (!covered) {
        result.push_back(h);
      }
    }
    return result;
  }

  bool is_maximal_subsemigroup(SemigroupSet const& t, SemigroupSet const& s) {
    if (t.size() >= s.size()
        || !std::includes(s.elements().begin(),
                          s.elements().end(),
                          t.elements().begin(),
                          t.elements().end())) {
      throw ContractError("is_maximal_subsemigroup: T must be a proper subset "
                          "of S");
    }
    std::vector<Transformation> gens(t.elements());
    gens.emplace_back();
    for (auto const& x : s.elements()) {
      if (t.contains(x)) {
        continue;
      }
      gens.back() = x;
      // closure(T + x) lies in S, so equality is a size comparison
      if (closure(gens, s.size()).size() != s.size()) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Group isomorphism
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // (element order, conjugacy class size) for every element
    std::vector<std::pair<std::size_t, std::size_t>>
    element_signatures(GroupTable const& g) {
      std::vector<std::pair<std::size_t, std::size_t>> sig(g.order());
      for (std::size_t x = 0; x < g.order(); ++x) {
        std::vector<bool> in_class(g.order(), false);
        std::size_t       size = 0;
        for (std::size_t y = 0; y < g.order(); ++y) {
          std::size_t c = g.product(g.product(g.inverse(y), x), y);
          if (!in_class[c]) {
            in_class[c] = true;
            ++size;
          }
        }
        sig[x] = {g.element_order(x), size};
      }
      return sig;
    }

    std::vector<std::size_t> greedy_generators(
        GroupTable const&                                       g,
        std::vector<std::pair<std::size_t, std::size_t>> const& sig) {
      std::vector<std::size_t> by_order(g.order());
      for (std::size_t i = 0; i < g.order(); ++i) {
        by_order[i] = i;
      }
      std::stable_sort(by_order.begin(), by_order.end(), [&](auto a, auto b) {
        return sig[a].first > sig[b].first;
      });
      std::vector<std::size_t> gens;
      Subgroup                 h = subgroup_closure(g, gens);
      for (std::size_t c : by_order) {
        if (h.size() == g.order()) {
          break;
        }
        if (!std::binary_search(h.begin(), h.end(), c)) {
          gens.push_back(c);
          h = subgroup_closure(g, gens);
        }
      }
      return gens;
    }

    std::optional<std::vector<std::size_t>>
    extend_from_generators(GroupTable const&             g1,
                           GroupTable const&             g2,
                           std::span<std::size_t const>  gens,
                           std::span<std::size_t const>  images) {
      constexpr auto           unset = std::numeric_limits<std::size_t>::max();
      std::vector<std::size_t> phi(g1.order(), unset);
      phi[g1.identity()] = g2.identity();
      std::vector<std::size_t> queue{g1.identity()};
      for (std::size_t q = 0; q < queue.size(); ++q) {
        std::size_t x = queue[q];
        for (std::size_t i = 0; i < gens.size(); ++i) {
          std::size_t y = g1.product(x, gens[i]);
          std::size_t v = g2.product(phi[x], images[i]);
          if (phi[y] == unset) {
            phi[y] = v;
            queue.push_back(y);
          } else if (phi[y] != v) {
            return std::nullopt;
          }
        }
      }
      std::vector<bool> hit(g2.order(), false);
      for (std::size_t v : phi) {
        if (v == unset || hit[v]) {
          return std::nullopt;
        }
        hit[v] = true;
      }
      return phi;
    }

    bool search(GroupTable const&                              g1,
                GroupTable const&                              g2,
                std::vector<std::size_t> const&                gens,
                std::vector<std::vector<std::size_t>> const&   candidates,
                std::vector<std::size_t>&                      images,
                std::optional<std::vector<std::size_t>>&       found) {
      if (images.size() == gens.size()) {
        found = extend_from_generators(g1, g2, gens, images);
        return found.has_value();
      }
      for (std::size_t c : candidates[images.size()]) {
        images.push_back(c);
        if (search(g1, g2, gens, candidates, images, found)) {
          return true;
        }
        images.pop_back();
      }
      return false;
    }
  }  // namespace

  std::optional<std::vector<std::size_t>>
  find_group_isomorphism(GroupTable const& g1, GroupTable const& g2) {
    if (g1.order() != g2.order()) {
      return std::nullopt;
    }
    auto sig1 = element_signatures(g1);
    auto sig2 = element_signatures(g2);
    {
      auto s1 = sig1;
      auto s2 = sig2;
      std::sort(s1.begin(), s1.end());
      std::sort(s2.begin(), s2.end());
      if (s1 != s2) {
        return std::nullopt;
      }
    }
    auto                                  gens = greedy_generators(g1, sig1);
    std::vector<std::vector<std::size_t>> candidates(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t y = 0; y < g2.order(); ++y) {
        if (sig2[y] == sig1[gens[i]]) {
          candidates[i].push_back(y);
        }
      }
    }
    std::vector<std::size_t>                images;
    std::optional<std::vector<std::size_t>> found;
    search(g1, g2, gens, candidates, images, found);
    return found;
  }

  bool groups_isomorphic(GroupTable const& g1, GroupTable const& g2) {
    return find_group_isomorphism(g1, g2).has_value();
  }

}  // namespace qstar
