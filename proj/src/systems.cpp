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

#include "submax/systems.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace submax {
namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

using PredicateFn = std::function<bool(const ElementSet&)>;

PredicateFn build_predicate(const CardinalitySystem& sys, std::size_t) {
  std::size_t k = sys.k;
  return [k](const ElementSet& s) { return s.count() <= k; };
}

PredicateFn build_predicate(const PartitionMatroid& sys, std::size_t n) {
  require(sys.block_of.size() == n, "partition matroid: block map length must equal n");
  for (std::size_t b : sys.block_of) {
    require(b < sys.capacity.size(), "partition matroid: block id out of range");
  }
  auto block_of = sys.block_of;
  auto capacity = sys.capacity;
  return [block_of, capacity](const ElementSet& s) {
    std::vector<std::size_t> used(capacity.size(), 0);
    bool ok = true;
    s.for_each([&](std::size_t e) {
      if (++used[block_of[e]] > capacity[block_of[e]]) ok = false;
    });
    return ok;
  };
}

PredicateFn build_predicate(const MatchingSystem& sys, std::size_t n) {
  require(sys.host.num_edges() == n, "matching: ground size must equal host edge count");
  auto edges = sys.host.edges();
  std::size_t vertices = sys.host.num_vertices();
  return [edges, vertices](const ElementSet& s) {
    std::vector<bool> touched(vertices, false);
    bool ok = true;
    s.for_each([&](std::size_t e) {
      auto [u, v] = edges[e];
      if (touched[u] || touched[v]) ok = false;
      touched[u] = touched[v] = true;
    });
    return ok;
  };
}

PredicateFn build_predicate(const ExplicitSystem& sys, std::size_t n) {
  require(!sys.bases.empty(), "explicit system: basis list must be nonempty");
  for (const auto& b : sys.bases) {
    require(b.universe_size() == n, "explicit system: basis over wrong ground set");
  }
  auto bases = sys.bases;
  return [bases](const ElementSet& s) {
    return std::any_of(bases.begin(), bases.end(),
                       [&](const ElementSet& b) { return s.is_subset_of(b); });
  };
}

PredicateFn build_predicate(const PhiSystem& sys, std::size_t n) {
  std::size_t m = sys.host.num_vertices();
  require(n == 2 * m, "phi system: ground size must be twice the host vertex count");
  Graph host = sys.host;
  return [host, m](const ElementSet& s) {
    if (!edge_independent(host, s)) return false;
    std::size_t vertex_count = 0, dummy_count = 0;
    s.for_each([&](std::size_t e) { (e < m ? vertex_count : dummy_count)++; });
    return dummy_count <= m - vertex_count;
  };
}

PredicateFn build_predicate(const IntersectionSystem& sys, std::size_t n) {
  require(!sys.members.empty(), "intersection: at least one member required");
  std::vector<PredicateFn> member_preds;
  member_preds.reserve(sys.members.size());
  for (const auto& m : sys.members) {
    member_preds.push_back(std::visit(
        [&](const auto& inner) -> PredicateFn { return build_predicate(inner, n); }, m.spec));
  }
  return [member_preds](const ElementSet& s) {
    return std::all_of(member_preds.begin(), member_preds.end(),
                       [&](const PredicateFn& p) { return p(s); });
  };
}

SystemClass classify_spec(const SystemSpec& spec);

struct ClassVisitor {
  SystemClass operator()(const CardinalitySystem&) const { return SystemClass::matroid(); }
  SystemClass operator()(const PartitionMatroid&) const { return SystemClass::matroid(); }
  SystemClass operator()(const MatchingSystem&) const { return SystemClass::p_extendible(2); }
  SystemClass operator()(const ExplicitSystem&) const { return SystemClass::general(); }
  SystemClass operator()(const PhiSystem&) const { return SystemClass::p_system(1); }
  SystemClass operator()(const IntersectionSystem& sys) const {
    bool all_matroid =
        std::all_of(sys.members.begin(), sys.members.end(), [](const SystemSpecWrapper& m) {
          return classify_spec(m.spec).kind == SystemClass::Kind::kMatroid;
        });
    if (all_matroid) return SystemClass::p_extendible(static_cast<int>(sys.members.size()));
    return SystemClass::general();
  }
};

SystemClass classify_spec(const SystemSpec& spec) { return std::visit(ClassVisitor{}, spec); }

}  // namespace

std::string system_family(const SystemSpec& spec) {
  struct Visitor {
    std::string operator()(const CardinalitySystem&) const { return "cardinality"; }
    std::string operator()(const PartitionMatroid&) const { return "partition_matroid"; }
    std::string operator()(const MatchingSystem&) const { return "matching"; }
    std::string operator()(const ExplicitSystem&) const { return "explicit"; }
    std::string operator()(const PhiSystem&) const { return "phi"; }
    std::string operator()(const IntersectionSystem&) const { return "intersection"; }
  };
  return std::visit(Visitor{}, spec);
}

MembershipOracle make_membership_oracle(const SystemSpec& spec, std::size_t ground_size) {
  PredicateFn pred = std::visit(
      [&](const auto& sys) -> PredicateFn { return build_predicate(sys, ground_size); }, spec);
  return MembershipOracle(ground_size, std::move(pred), classify_spec(spec));
}

bool edge_independent(const Graph& g, const ElementSet& s) {
  for (const auto& [u, v] : g.edges()) {
    if (s.contains(u) && s.contains(v)) return false;
  }
  return true;
}

std::pair<PhiSystem, PhiObjective> phi_reduce(const Graph& g) {
  require(g.num_vertices() >= 1, "phi_reduce: graph must have at least one vertex");
  return {PhiSystem{g}, PhiObjective{g.num_vertices()}};
}

ElementSet phi_project(const ElementSet& s, const PhiSystem& sys) {
  std::size_t m = sys.host.num_vertices();
  require(s.universe_size() == 2 * m, "phi_project: set over wrong ground set");
  if (!build_predicate(sys, 2 * m)(s)) {
    throw std::invalid_argument("phi_project: set is not independent in the padded system");
  }
  ElementSet vertex_part(2 * m);
  for (std::size_t v = 0; v < m; ++v) vertex_part.add(v);
  return s & vertex_part;
}

}  // namespace submax
