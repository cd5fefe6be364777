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

#ifndef SUBMAX_ALGORITHMS_HPP_
#define SUBMAX_ALGORITHMS_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "submax/element_set.hpp"
#include "submax/oracle.hpp"

namespace submax {

/// Outcome of one algorithm run. Query counts are deltas on the oracles'
/// shared counters measured over the run proper; the final value is
/// re-evaluated and the feasibility re-checked outside that window so the
/// counts reflect exactly what the algorithm consumed.
struct RunRecord {
  std::string algorithm;
  std::optional<double> epsilon;
  std::optional<std::uint64_t> seed;
  ElementSet chosen;
  double value = 0.0;
  std::uint64_t value_queries = 0;
  std::uint64_t membership_queries = 0;
  double wall_ms = 0.0;
  bool cache_active = false;
  /// Membership of the chosen set, re-checked after the run. Constantly true
  /// for the unconstrained algorithms, where no system participates.
  bool feasible = false;
};

/// Repeatedly adds the feasible element maximizing f(G + s) (ties to the
/// smallest index) until the solution is maximal in the system. The output is
/// always maximal, even when late additions decrease f.
RunRecord greedy(const ValueOracle& f, const MembershipOracle& sys);

/// Number of threshold passes the decreasing-threshold schedule performs for
/// a ground set of size n: thresholds M, (1-eps)M, ... while tau >= eps*M/n.
std::size_t threshold_pass_count(std::size_t n, double epsilon);

/// Decreasing-threshold greedy. M is the maximum singleton value over the
/// candidate pool (feasible or not); each pass scans candidates in index
/// order and admits an element when its marginal gain meets the threshold and
/// the extension stays independent. Returns the empty set immediately when
/// M <= 0. On a p-extendible system the output A satisfies
/// alpha * f(A | B) <= f(A) for every independent B, with
/// alpha = (p/(1-eps) + 1 + eps)^-1.
///
/// `candidates` limits the scan (and the M computation) to a subset of the
/// ground set; by default every element participates.
RunRecord threshold_greedy(const ValueOracle& f, const MembershipOracle& sys, double epsilon,
                           const std::optional<ElementSet>& candidates = std::nullopt);

/// Deterministic double-greedy sweep over the domain (default: the full
/// ground set): grows X from empty and shrinks Y from the domain, keeping
/// element i when f(X+i)-f(X) >= f(Y-i)-f(Y). Guarantees 1/3 of the
/// unconstrained optimum over subsets of the domain for non-negative
/// submodular f.
RunRecord unconstrained_max_deterministic(const ValueOracle& f,
                                          const std::optional<ElementSet>& domain = std::nullopt);

/// Randomized double greedy: keeps element i with probability a/(a+b) where
/// a, b are the clamped-to-zero gains (deterministic keep-if-a>=b when both
/// clamp to zero). 1/2 of the unconstrained optimum in expectation;
/// reproducible for a fixed seed.
RunRecord unconstrained_max_randomized(const ValueOracle& f, std::uint64_t seed,
                                       const std::optional<ElementSet>& domain = std::nullopt);

enum class UnconstrainedVariant { kDeterministic, kRandomized };

/// Runs threshold greedy twice (the second time blind to the first solution)
/// plus one unconstrained maximization inside the first solution, and returns
/// the best of the three candidate sets; exact ties prefer the unconstrained
/// set, then the first, then the second. With the deterministic subroutine
/// (beta = 1/3) and threshold ratio alpha the output C satisfies
/// f(C) >= (alpha*beta/(alpha+2*beta)) * f(OPT) on p-extendible systems.
RunRecord triple_greedy(const ValueOracle& f, const MembershipOracle& sys, double epsilon,
                        UnconstrainedVariant variant = UnconstrainedVariant::kDeterministic,
                        std::uint64_t seed = 0);

/// Exact maximizer over the independence system by depth-first enumeration of
/// independent sets (supersets of an infeasible set are pruned via downward
/// closure). Ties resolve to the lexicographically smallest set. Refuses
/// ground sets larger than `cap`.
RunRecord brute_force(const ValueOracle& f, const MembershipOracle& sys, std::size_t cap = 20);

/// The largest alpha for which the given set witnesses the union-domination
/// guarantee: min over independent B with f(A|B) > 0 of f(A)/f(A|B).
/// Returns +infinity when f(A|B) <= 0 for every independent B. Exhaustive;
/// refuses ground sets larger than `cap`.
double max_union_ratio(const ElementSet& a, const ValueOracle& f, const MembershipOracle& sys,
                       std::size_t cap = 20);

}  // namespace submax

#endif  // SUBMAX_ALGORITHMS_HPP_
