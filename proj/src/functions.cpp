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

#include "submax/functions.hpp"

#include <algorithm>
#include <stdexcept>

namespace submax {
namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

void require_nonneg(const std::vector<double>& ws, const std::string& who) {
  for (double w : ws) require(w >= 0.0, who + ": negative weight rejected");
}

ValueOracle build(const ModularFunction& f, std::size_t n, bool cache) {
  require(f.weights.size() == n, "modular: weights length must equal n");
  require_nonneg(f.weights, "modular");
  auto weights = f.weights;
  return ValueOracle(
      n,
      [weights](const ElementSet& s) {
        double total = 0.0;
        s.for_each([&](std::size_t e) { total += weights[e]; });
        return total;
      },
      /*nonneg_declared=*/true, cache);
}

ValueOracle build(const CoverageFunction& f, std::size_t n, bool cache) {
  require(f.covers.size() == n, "coverage: one item list per element required");
  require(f.item_weights.empty() || f.item_weights.size() == f.universe_size,
          "coverage: item weights length must equal universe size");
  require_nonneg(f.item_weights, "coverage");
  for (const auto& items : f.covers) {
    for (std::size_t item : items) {
      require(item < f.universe_size, "coverage: covered item out of range");
    }
  }
  auto covers = f.covers;
  auto weights = f.item_weights;
  std::size_t universe = f.universe_size;
  return ValueOracle(
      n,
      [covers, weights, universe](const ElementSet& s) {
        std::vector<bool> covered(universe, false);
        s.for_each([&](std::size_t e) {
          for (std::size_t item : covers[e]) covered[item] = true;
        });
        double total = 0.0;
        for (std::size_t i = 0; i < universe; ++i) {
          if (covered[i]) total += weights.empty() ? 1.0 : weights[i];
        }
        return total;
      },
      true, cache);
}

ValueOracle build(const CutFunction& f, std::size_t n, bool cache) {
  require(f.num_vertices == n, "cut: graph vertex count must equal n");
  for (const auto& e : f.edges) {
    require(e.u < n && e.v < n, "cut: edge endpoint out of range");
    require(e.u != e.v, "cut: self-loop rejected");
    require(e.weight >= 0.0, "cut: negative weight rejected");
  }
  auto edges = f.edges;
  return ValueOracle(
      n,
      [edges](const ElementSet& s) {
        double total = 0.0;
        for (const auto& e : edges) {
          if (s.contains(e.u) != s.contains(e.v)) total += e.weight;
        }
        return total;
      },
      true, cache);
}

ValueOracle build(const PhiObjective& f, std::size_t n, bool cache) {
  require(f.num_vertices <= n, "phi objective: more vertices than ground elements");
  ElementSet vertex_part(n);
  for (std::size_t v = 0; v < f.num_vertices; ++v) vertex_part.add(v);
  return ValueOracle(
      n,
      [vertex_part](const ElementSet& s) { return static_cast<double>((s & vertex_part).count()); },
      true, cache);
}

ValueOracle build(const FacilityLocationFunction& f, std::size_t n, bool cache) {
  for (const auto& row : f.benefit) {
    require(row.size() == n, "facility location: benefit row length must equal n");
    require_nonneg(row, "facility location");
  }
  auto benefit = f.benefit;
  return ValueOracle(
      n,
      [benefit](const ElementSet& s) {
        double total = 0.0;
        for (const auto& row : benefit) {
          double best = 0.0;
          s.for_each([&](std::size_t e) { best = std::max(best, row[e]); });
          total += best;
        }
        return total;
      },
      true, cache);
}

}  // namespace

std::string function_family(const FunctionSpec& spec) {
  struct Visitor {
    std::string operator()(const ModularFunction&) const { return "modular"; }
    std::string operator()(const CoverageFunction&) const { return "coverage"; }
    std::string operator()(const CutFunction&) const { return "cut"; }
    std::string operator()(const PhiObjective&) const { return "phi_objective"; }
    std::string operator()(const FacilityLocationFunction&) const { return "facility_location"; }
  };
  return std::visit(Visitor{}, spec);
}

ValueOracle make_value_oracle(const FunctionSpec& spec, std::size_t ground_size,
                              bool enable_cache) {
  return std::visit([&](const auto& f) { return build(f, ground_size, enable_cache); }, spec);
}

}  // namespace submax
