// Copyright 2026 The Authors.
//
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
#include <vector>

#include <doctest.h>

#include "submax/element_set.hpp"

using submax::ElementSet;
using submax::GroundSet;

TEST_CASE("ground set labels must match size") {
  GroundSet g(3, {"a", "b", "c"});
  CHECK(g.size() == 3);
  CHECK(g.label(1) == "b");
  CHECK_THROWS_AS(GroundSet(2, {"a"}), std::invalid_argument);
}

TEST_CASE("basic membership and bounds") {
  ElementSet s(5, {0, 3});
  CHECK(s.contains(0));
  CHECK(!s.contains(1));
  CHECK(s.count() == 2);
  CHECK_THROWS_AS(s.contains(5), std::out_of_range);
  CHECK_THROWS_AS(s.add(7), std::out_of_range);
  CHECK_THROWS_AS((void)(s & ElementSet(4)), std::invalid_argument);
}

TEST_CASE("set algebra matches a std::set model on random sequences") {
  std::mt19937_64 rng(7);
  for (std::size_t n : {1, 7, 63, 64, 65, 130}) {
    ElementSet a(n), b(n);
    std::set<std::size_t> ma, mb;
    for (int step = 0; step < 200; ++step) {
      std::size_t e = rng() % n;
      if (rng() % 2) {
        a.add(e);
        ma.insert(e);
      } else {
        b.add(e);
        mb.insert(e);
      }
    }
    auto as_model = [](const ElementSet& s) {
      auto v = s.elements();
      return std::set<std::size_t>(v.begin(), v.end());
    };
    std::set<std::size_t> u, i, d;
    std::set_union(ma.begin(), ma.end(), mb.begin(), mb.end(), std::inserter(u, u.end()));
    std::set_intersection(ma.begin(), ma.end(), mb.begin(), mb.end(), std::inserter(i, i.end()));
    std::set_difference(ma.begin(), ma.end(), mb.begin(), mb.end(), std::inserter(d, d.end()));
    CHECK(as_model(a | b) == u);
    CHECK(as_model(a & b) == i);
    CHECK(as_model(a - b) == d);
    CHECK((a | b).count() == u.size());
    CHECK(a.complement().count() == n - ma.size());
    CHECK((a & a.complement()).empty());
    CHECK((a | a.complement()) == ElementSet::full(n));
    CHECK((a & b).is_subset_of(a));
    CHECK(a.is_subset_of(a | b));
  }
}

TEST_CASE("from_mask and full") {
  ElementSet s = ElementSet::from_mask(6, 0b101001);
  CHECK(s.elements() == std::vector<std::size_t>{0, 3, 5});
  CHECK(ElementSet::full(6).count() == 6);
  CHECK(ElementSet::full(0).count() == 0);
  CHECK_THROWS_AS(ElementSet::from_mask(65, 1), std::invalid_argument);
}

TEST_CASE("lexicographic order on element sequences") {
  auto lt = [](std::initializer_list<std::size_t> a, std::initializer_list<std::size_t> b) {
    return ElementSet::lexicographic_less(ElementSet(8, a), ElementSet(8, b));
  };
  // first differing element decides
  CHECK(lt({0, 2}, {1, 2}));
  CHECK(!lt({1, 2}, {0, 2}));
  CHECK(lt({0, 2}, {1}));
  CHECK(!lt({1}, {0, 2}));
  // a proper prefix sorts first
  CHECK(lt({0}, {0, 1}));
  CHECK(!lt({0, 1}, {0}));
  CHECK(lt({}, {0}));
  CHECK(!lt({3}, {3}));

  // agreement with sequence comparison, exhaustively at n = 5
  for (std::uint64_t x = 0; x < 32; ++x) {
    for (std::uint64_t y = 0; y < 32; ++y) {
      ElementSet a = ElementSet::from_mask(5, x);
      ElementSet b = ElementSet::from_mask(5, y);
      CHECK(ElementSet::lexicographic_less(a, b) == (a.elements() < b.elements()));
    }
  }
}

TEST_CASE("with/without do not mutate") {
  ElementSet s(4, {1});
  ElementSet t = s.with(2);
  CHECK(!s.contains(2));
  CHECK(t.contains(2));
  CHECK(t.without(2) == s);
}
