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

#ifndef SUBMAX_FUNCTIONS_HPP_
#define SUBMAX_FUNCTIONS_HPP_

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "submax/graph.hpp"
#include "submax/oracle.hpp"

namespace submax {

/// f(S) = sum of weights over S. Monotone and submodular.
struct ModularFunction {
  std::vector<double> weights;
};

/// f(S) = total weight of universe items covered by the sets of S's elements.
/// Monotone and submodular. Items are 0..universe_size-1; weights default to 1.
struct CoverageFunction {
  std::size_t universe_size = 0;
  std::vector<std::vector<std::size_t>> covers;  // one item list per element
  std::vector<double> item_weights;              // empty = all ones
};

/// f(S) = total weight of edges with exactly one endpoint in S.
/// Non-negative and submodular but not monotone; f(empty) = f(U) = 0.
struct CutFunction {
  struct WeightedEdge {
    std::size_t u, v;
    double weight;
  };
  std::size_t num_vertices = 0;
  std::vector<WeightedEdge> edges;
};

/// f(S) = |S intersect V| on a padded ground set where elements
/// 0..num_vertices-1 are original vertices and the rest are dummies.
/// Monotone and submodular; dummy elements never change the value.
struct PhiObjective {
  std::size_t num_vertices = 0;
};

/// f(S) = sum over clients of the best benefit offered by an open facility
/// in S (0 when S is empty). Monotone and submodular.
struct FacilityLocationFunction {
  std::vector<std::vector<double>> benefit;  // benefit[client][facility]
};

using FunctionSpec = std::variant<ModularFunction, CoverageFunction, CutFunction, PhiObjective,
                                  FacilityLocationFunction>;

/// Family tag used in instance files and reports.
std::string function_family(const FunctionSpec& spec);

/// Validates the spec against the ground-set size (dimension mismatches and
/// negative weights are construction-time errors) and builds the evaluator.
ValueOracle make_value_oracle(const FunctionSpec& spec, std::size_t ground_size,
                              bool enable_cache = false);

}  // namespace submax

#endif  // SUBMAX_FUNCTIONS_HPP_
