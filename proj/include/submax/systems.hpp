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

#ifndef SUBMAX_SYSTEMS_HPP_
#define SUBMAX_SYSTEMS_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "submax/functions.hpp"
#include "submax/graph.hpp"
#include "submax/oracle.hpp"

namespace submax {

/// S independent iff |S| <= k. A matroid.
struct CardinalitySystem {
  std::size_t k = 0;
};

/// S independent iff every block's intersection with S respects its capacity.
struct PartitionMatroid {
  std::vector<std::size_t> block_of;   // block id per element
  std::vector<std::size_t> capacity;   // per block, may be 0
};

/// Ground elements are the host graph's edges (in edge-list order);
/// S independent iff S is a matching. 2-extendible.
struct MatchingSystem {
  Graph host;
};

/// Membership = subset of one of the listed bases. Downward closed by
/// construction; the basis list must be nonempty.
struct ExplicitSystem {
  std::vector<ElementSet> bases;
};

/// The padded edge-independence system: ground set of size 2m over a host
/// graph with m vertices (vertices first, then m dummies). S is independent
/// iff S's vertex part is edge-independent and the dummy part fits in the
/// remaining capacity m - |S intersect V|. Every maximal independent set has
/// size exactly m.
struct PhiSystem {
  Graph host;
};

struct SystemSpecWrapper;

/// Intersection of member systems over the same ground set.
struct IntersectionSystem {
  std::vector<SystemSpecWrapper> members;
};

using SystemSpec = std::variant<CardinalitySystem, PartitionMatroid, MatchingSystem,
                                ExplicitSystem, PhiSystem, IntersectionSystem>;

struct SystemSpecWrapper {
  SystemSpec spec;
};

std::string system_family(const SystemSpec& spec);

/// Validates the spec against the ground-set size and builds the counted
/// membership oracle with its declared class. The intersection system is
/// declared q-extendible only when all q members declare matroid.
MembershipOracle make_membership_oracle(const SystemSpec& spec, std::size_t ground_size);

/// True iff no edge of g has both endpoints in s (s indexes vertices of g;
/// s may live in a larger universe, extra indices are ignored).
bool edge_independent(const Graph& g, const ElementSet& s);

/// Maps a graph to the padded instance whose optimum equals the graph's
/// maximum edge-independent set size. Ground set size is 2 * |V|.
std::pair<PhiSystem, PhiObjective> phi_reduce(const Graph& g);

/// Projects an independent set of the padded system back to the host graph's
/// vertices: returns S intersect V. Throws std::invalid_argument when S is
/// not independent in the padded system.
ElementSet phi_project(const ElementSet& s, const PhiSystem& sys);

}  // namespace submax

#endif  // SUBMAX_SYSTEMS_HPP_
