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

#include <doctest.h>

#include "submax/systems.hpp"

using namespace submax;

namespace {

// J = { {}, {a}, {b}, {c}, {d}, {a,b}, {c,d} } via its bases
ExplicitSystem j_system() {
  return ExplicitSystem{{ElementSet(4, {0, 1}), ElementSet(4, {2, 3})}};
}

// ground set of Phi(star5): 0 = center, 1..4 = leaves, 5..9 = dummies
SystemSpec star5_phi() { return PhiSystem{Graph::star(5)}; }

// test-side oracle: maximum edge-independent set size by mask enumeration
std::size_t brute_max_independent(const Graph& g) {
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.num_vertices()); ++mask) {
    ElementSet s = ElementSet::from_mask(g.num_vertices(), mask);
    if (edge_independent(g, s)) best = std::max(best, s.count());
  }
  return best;
}

}  // namespace

TEST_CASE("graph normalization and validation") {
  Graph g(4, {{3, 1}, {0, 1}, {1, 3}});
  CHECK(g.num_edges() == 2);  // duplicate collapsed, endpoints ordered
  CHECK(g.edges()[0] == Graph::Edge{0, 1});
  CHECK(g.edges()[1] == Graph::Edge{1, 3});
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 5}}), std::invalid_argument);
  CHECK(Graph::star(5).num_edges() == 4);
  CHECK(Graph::complete(4).num_edges() == 6);
  CHECK(Graph::cycle(5).num_edges() == 5);
  CHECK(Graph::edgeless(3).num_edges() == 0);
}

TEST_CASE("the empty set belongs to every shipped system") {
  std::vector<std::pair<SystemSpec, std::size_t>> fixtures = {
      {CardinalitySystem{0}, 4},
      {PartitionMatroid{{0, 0, 1, 1}, {1, 1}}, 4},
      {MatchingSystem{Graph::path(4)}, 3},
      {SystemSpec{j_system()}, 4},
      {star5_phi(), 10},
      {IntersectionSystem{{SystemSpecWrapper{CardinalitySystem{2}},
                           SystemSpecWrapper{PartitionMatroid{{0, 1, 0, 1}, {1, 1}}}}},
       4},
  };
  for (auto& [spec, n] : fixtures) {
    MembershipOracle sys = make_membership_oracle(spec, n);
    CHECK(sys.contains(ElementSet(n)));
  }
}

TEST_CASE("explicit system J membership") {
  MembershipOracle sys = make_membership_oracle(j_system(), 4);
  CHECK(sys.contains(ElementSet(4, {0, 1})));
  CHECK(!sys.contains(ElementSet(4, {0, 2})));
  CHECK(sys.contains(ElementSet(4, {3})));
  CHECK(!sys.contains(ElementSet(4, {0, 1, 2})));
  CHECK_THROWS_AS(make_membership_oracle(ExplicitSystem{}, 4), std::invalid_argument);
}

TEST_CASE("phi system membership on the star example") {
  MembershipOracle sys = make_membership_oracle(star5_phi(), 10);
  // the maximal edge-independent sets of star5 are {s} and {a,b,c,d}
  CHECK(sys.contains(ElementSet(10, {1, 2, 3, 4, 5})));   // leaves + one dummy
  CHECK(!sys.contains(ElementSet(10, {0, 1})));           // center with a leaf
  CHECK(sys.contains(ElementSet(10, {0, 5, 6, 7, 8})));   // center + four dummies
  CHECK(!sys.contains(ElementSet(10, {0, 5, 6, 7, 8, 9})));  // too many dummies
  CHECK(sys.contains(ElementSet(10, {5, 6, 7, 8, 9})));   // all dummies
}

TEST_CASE("matching system membership") {
  // P4 edges: 0={0,1}, 1={1,2}, 2={2,3}
  MembershipOracle sys = make_membership_oracle(MatchingSystem{Graph::path(4)}, 3);
  CHECK(sys.contains(ElementSet(3, {0, 2})));
  CHECK(!sys.contains(ElementSet(3, {0, 1})));
  CHECK(sys.declared_class().kind == SystemClass::Kind::kPExtendible);
  CHECK(sys.declared_class().p == 2);
}

TEST_CASE("partition matroid respects per-block capacities") {
  PartitionMatroid pm{{0, 0, 0, 1, 1}, {2, 1}};
  MembershipOracle sys = make_membership_oracle(pm, 5);
  CHECK(sys.contains(ElementSet(5, {0, 1, 3})));
  CHECK(!sys.contains(ElementSet(5, {0, 1, 2})));
  CHECK(!sys.contains(ElementSet(5, {3, 4})));
}

TEST_CASE("intersection declares q-extendible only over matroid members") {
  IntersectionSystem both_matroids{{SystemSpecWrapper{CardinalitySystem{2}},
                                    SystemSpecWrapper{PartitionMatroid{{0, 1, 0, 1}, {1, 1}}}}};
  CHECK(make_membership_oracle(both_matroids, 4).declared_class().kind ==
        SystemClass::Kind::kPExtendible);
  CHECK(make_membership_oracle(both_matroids, 4).declared_class().p == 2);

  IntersectionSystem with_general{{SystemSpecWrapper{CardinalitySystem{2}},
                                   SystemSpecWrapper{j_system()}}};
  CHECK(make_membership_oracle(with_general, 4).declared_class().kind ==
        SystemClass::Kind::kGeneral);
}

TEST_CASE("downward closure holds for every shipped system, exhaustively") {
  std::vector<std::pair<SystemSpec, std::size_t>> fixtures = {
      {CardinalitySystem{3}, 8},
      {PartitionMatroid{{0, 0, 0, 1, 1, 1, 2, 2}, {1, 2, 1}}, 8},
      {MatchingSystem{Graph::cycle(6)}, 6},
      {SystemSpec{j_system()}, 4},
      {PhiSystem{Graph::star(5)}, 10},
      {PhiSystem{Graph::path(4)}, 8},
      {IntersectionSystem{{SystemSpecWrapper{PartitionMatroid{{0, 0, 1, 1, 2, 2, 3, 3},
                                                              {1, 1, 1, 1}}},
                           SystemSpecWrapper{PartitionMatroid{{0, 1, 0, 1, 0, 1, 0, 1},
                                                              {2, 2}}}}},
       8},
  };
  for (auto& [spec, n] : fixtures) {
    MembershipOracle sys = make_membership_oracle(spec, n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      ElementSet s = ElementSet::from_mask(n, mask);
      if (!sys.contains(s)) continue;
      for (std::size_t x = 0; x < n; ++x) {
        if (s.contains(x)) CHECK(sys.contains(s.without(x)));
      }
    }
  }
}

TEST_CASE("phi reduction: every maximal independent set has size |V|") {
  for (const Graph& g : {Graph::star(5), Graph::path(4), Graph::cycle(5), Graph::complete(4),
                         Graph::edgeless(4), Graph::path(6)}) {
    std::size_t m = g.num_vertices();
    std::size_t n = 2 * m;
    MembershipOracle sys = make_membership_oracle(PhiSystem{g}, n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      ElementSet s = ElementSet::from_mask(n, mask);
      if (!sys.contains(s)) continue;
      bool maximal = true;
      for (std::size_t x = 0; x < n && maximal; ++x) {
        if (!s.contains(x) && sys.contains(s.with(x))) maximal = false;
      }
      if (maximal) CHECK(s.count() == m);
    }
  }
}

TEST_CASE("phi reduction of the five-vertex star has the expected basis family") {
  MembershipOracle sys = make_membership_oracle(star5_phi(), 10);
  std::vector<ElementSet> found;
  for (std::uint64_t mask = 0; mask < 1024; ++mask) {
    ElementSet s = ElementSet::from_mask(10, mask);
    if (!sys.contains(s)) continue;
    bool maximal = true;
    for (std::size_t x = 0; x < 10 && maximal; ++x) {
      if (!s.contains(x) && sys.contains(s.with(x))) maximal = false;
    }
    if (maximal) found.push_back(s);
  }

  // the leaves plus any one dummy, and the center plus any four dummies, are
  // all bases
  for (std::size_t d = 5; d < 10; ++d) {
    CHECK(std::count(found.begin(), found.end(), ElementSet(10, {1, 2, 3, 4}).with(d)) == 1);
  }
  for (std::size_t skip = 5; skip < 10; ++skip) {
    ElementSet basis(10, {0, 5, 6, 7, 8, 9});
    basis.remove(skip);
    CHECK(std::count(found.begin(), found.end(), basis) == 1);
  }

  // a basis is exactly an edge-independent vertex part with the dummy slots
  // filled to capacity, so the full count is sum over edge-independent A of
  // C(5, 5 - |A|)
  std::size_t expected_count = 0;
  auto choose = [](std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  Graph star = Graph::star(5);
  for (std::uint64_t mask = 0; mask < 32; ++mask) {
    ElementSet a = ElementSet::from_mask(5, mask);
    if (edge_independent(star, a)) expected_count += choose(5, 5 - a.count());
  }
  CHECK(found.size() == expected_count);
  for (const ElementSet& b : found) CHECK(b.count() == 5);
}

TEST_CASE("phi reduction on the edgeless graph keeps V as a basis") {
  std::size_t m = 4;
  auto [sys_spec, obj] = phi_reduce(Graph::edgeless(m));
  MembershipOracle sys = make_membership_oracle(sys_spec, 2 * m);
  ElementSet all_vertices(2 * m, {0, 1, 2, 3});
  CHECK(sys.contains(all_vertices));
  for (std::size_t x = m; x < 2 * m; ++x) {
    CHECK(!sys.contains(all_vertices.with(x)));  // no dummy fits alongside V
  }
  CHECK(make_value_oracle(obj, 2 * m)(all_vertices) == 4.0);
}

TEST_CASE("phi reduction preserves the optimum, exhaustively for small graphs") {
  for (const Graph& g : {Graph::path(3), Graph::star(5), Graph::cycle(5), Graph::complete(4),
                         Graph::edgeless(3)}) {
    std::size_t n = 2 * g.num_vertices();
    auto [sys_spec, obj] = phi_reduce(g);
    MembershipOracle sys = make_membership_oracle(sys_spec, n);
    ValueOracle f = make_value_oracle(obj, n);
    double padded_opt = 0.0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      ElementSet s = ElementSet::from_mask(n, mask);
      if (sys.contains(s)) padded_opt = std::max(padded_opt, f(s));
    }
    CHECK(padded_opt == static_cast<double>(brute_max_independent(g)));
  }
  // path3's optimum is 2, computed by the same independent oracle
  CHECK(brute_max_independent(Graph::path(3)) == 2);
}

TEST_CASE("phi_project returns the vertex part of an independent set") {
  PhiSystem sys{Graph::star(5)};
  ElementSet s(10, {1, 2, 3, 4, 5});
  CHECK(phi_project(s, sys) == ElementSet(10, {1, 2, 3, 4}));
  // dummies alone project to nothing
  CHECK(phi_project(ElementSet(10, {5, 6}), sys) == ElementSet(10));
  // infeasible input is a precondition error
  CHECK_THROWS_AS(phi_project(ElementSet(10, {0, 1}), sys), std::invalid_argument);
}

TEST_CASE("phi_project output is edge-independent with matching size") {
  PhiSystem sys{Graph::path(3)};
  ValueOracle f = make_value_oracle(PhiObjective{3}, 6);
  ElementSet s(6, {0, 2, 3});  // {a, c} plus one dummy
  ElementSet projected = phi_project(s, sys);
  CHECK(projected == ElementSet(6, {0, 2}));
  CHECK(edge_independent(sys.host, projected));
  CHECK(static_cast<double>(projected.count()) == f(s));
}

TEST_CASE("phi_reduce rejects the empty graph") {
  CHECK_THROWS_AS(phi_reduce(Graph::edgeless(0)), std::invalid_argument);
}

TEST_CASE("system specs carry stable family tags") {
  CHECK(system_family(CardinalitySystem{1}) == "cardinality");
  CHECK(system_family(star5_phi()) == "phi");
  CHECK(system_family(IntersectionSystem{}) == "intersection");
}
