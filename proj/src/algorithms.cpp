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

#include "submax/algorithms.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "submax/errors.hpp"

namespace submax {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void validate_pair(const ValueOracle& f, const MembershipOracle& sys) {
  if (f.ground_size() != sys.ground_size()) {
    throw std::invalid_argument("algorithm: value and membership oracles disagree on ground size");
  }
}

void validate_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("algorithm: epsilon must lie in (0, 1)");
  }
}

/// Finishes a RunRecord: freezes the measured query deltas, then re-evaluates
/// the value and feasibility outside the counting window.
RunRecord finish(std::string algorithm, ElementSet chosen, const ValueOracle& f,
                 const MembershipOracle* sys, std::uint64_t v0, std::uint64_t m0,
                 Clock::time_point start) {
  RunRecord rec;
  rec.algorithm = std::move(algorithm);
  rec.value_queries = f.queries() - v0;
  rec.membership_queries = sys ? sys->queries() - m0 : 0;
  rec.wall_ms = elapsed_ms(start);
  rec.cache_active = f.cache_active();
  rec.value = f(chosen);
  rec.feasible = sys ? sys->contains(chosen) : true;
  rec.chosen = std::move(chosen);
  return rec;
}

ElementSet greedy_core(const ValueOracle& f, const MembershipOracle& sys) {
  std::size_t n = f.ground_size();
  ElementSet g(n);
  while (true) {
    bool found = false;
    std::size_t best_element = 0;
    double best_value = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
      if (g.contains(s)) continue;
      ElementSet extended = g.with(s);
      if (!sys.contains(extended)) continue;
      double v = f(extended);
      if (!found || v > best_value) {
        found = true;
        best_element = s;
        best_value = v;
      }
    }
    if (!found) break;  // no feasible extension: g is maximal
    g.add(best_element);
  }
  return g;
}

ElementSet threshold_core(const ValueOracle& f, const MembershipOracle& sys, double epsilon,
                          const ElementSet& candidates) {
  std::size_t n = f.ground_size();
  ElementSet a(n);

  double top_singleton = 0.0;
  bool any = false;
  ElementSet empty(n);
  candidates.for_each([&](std::size_t x) {
    double v = f(empty.with(x));
    if (!any || v > top_singleton) top_singleton = v;
    any = true;
  });
  // The schedule tau >= eps*M/n is ill-posed for M <= 0, and no singleton has
  // positive gain then, so the empty set is the fixpoint.
  if (!any || top_singleton <= 0.0) return a;

  // Elements whose extension was infeasible once. A only grows, so by
  // downward closure A'+x independent would force A+x independent; dropping
  // them is purely a membership-query saving.
  ElementSet pruned(n);

  double tau_floor = epsilon * top_singleton / static_cast<double>(n);
  for (double tau = top_singleton; tau >= tau_floor; tau *= (1.0 - epsilon)) {
    for (std::size_t x = 0; x < n; ++x) {
      if (!candidates.contains(x) || a.contains(x) || pruned.contains(x)) continue;
      if (marginal_gain(f, a, x) >= tau) {
        if (sys.contains(a.with(x))) {
          a.add(x);
        } else {
          pruned.add(x);
        }
      }
    }
  }
  return a;
}

struct DoubleGreedyStep {
  double grow_gain;    // f(X+i) - f(X)
  double shrink_gain;  // f(Y-i) - f(Y)
  double value_if_grow;
  double value_if_shrink;
};

template <typename KeepDecision>
ElementSet double_greedy_core(const ValueOracle& f, const ElementSet& domain, KeepDecision keep) {
  std::size_t n = f.ground_size();
  ElementSet x(n);
  ElementSet y = domain;
  double fx = f(x);
  double fy = f(y);
  domain.for_each([&](std::size_t i) {
    DoubleGreedyStep step;
    step.value_if_grow = f(x.with(i));
    step.value_if_shrink = f(y.without(i));
    step.grow_gain = step.value_if_grow - fx;
    step.shrink_gain = step.value_if_shrink - fy;
    if (keep(step)) {
      x.add(i);
      fx = step.value_if_grow;
    } else {
      y.remove(i);
      fy = step.value_if_shrink;
    }
  });
  return x;  // x == y here
}

/// DFS over independent sets in ascending-index order; subtrees rooted at an
/// infeasible extension are skipped (safe under downward closure).
template <typename Visit>
void enumerate_independent(const MembershipOracle& sys, std::size_t n, Visit&& visit) {
  ElementSet current(n);
  if (!sys.contains(current)) return;  // degenerate oracle; nothing to do
  visit(current);
  auto recurse = [&](auto&& self, std::size_t next) -> void {
    for (std::size_t x = next; x < n; ++x) {
      current.add(x);
      if (sys.contains(current)) {
        visit(current);
        self(self, x + 1);
      }
      current.remove(x);
    }
  };
  recurse(recurse, 0);
}

}  // namespace

RunRecord greedy(const ValueOracle& f, const MembershipOracle& sys) {
  validate_pair(f, sys);
  auto start = Clock::now();
  std::uint64_t v0 = f.queries(), m0 = sys.queries();
  ElementSet g = greedy_core(f, sys);
  return finish("greedy", std::move(g), f, &sys, v0, m0, start);
}

std::size_t threshold_pass_count(std::size_t n, double epsilon) {
  validate_epsilon(epsilon);
  if (n == 0) return 0;
  std::size_t passes = 0;
  double tau_floor = epsilon / static_cast<double>(n);
  for (double tau = 1.0; tau >= tau_floor; tau *= (1.0 - epsilon)) ++passes;
  return passes;
}

RunRecord threshold_greedy(const ValueOracle& f, const MembershipOracle& sys, double epsilon,
                           const std::optional<ElementSet>& candidates) {
  validate_pair(f, sys);
  validate_epsilon(epsilon);
  std::size_t n = f.ground_size();
  ElementSet pool = candidates.value_or(ElementSet::full(n));
  if (pool.universe_size() != n) {
    throw std::invalid_argument("threshold_greedy: candidate pool over wrong ground set");
  }
  auto start = Clock::now();
  std::uint64_t v0 = f.queries(), m0 = sys.queries();
  ElementSet a = threshold_core(f, sys, epsilon, pool);
  RunRecord rec = finish("threshold", std::move(a), f, &sys, v0, m0, start);
  rec.epsilon = epsilon;
  // loop-structure query bound: one scan for the singleton maximum plus two
  // evaluations per candidate per pass
  if (n > 0) {
    std::uint64_t passes = static_cast<std::uint64_t>(
                               std::floor(std::log(static_cast<double>(n) / epsilon) /
                                          -std::log1p(-epsilon))) +
                           1;
    std::uint64_t pool_size = pool.count();
    if (rec.value_queries > pool_size + 2 * pool_size * passes) {
      throw InternalError("threshold_greedy: query bound violated");
    }
  }
  return rec;
}

RunRecord unconstrained_max_deterministic(const ValueOracle& f,
                                          const std::optional<ElementSet>& domain) {
  ElementSet dom = domain.value_or(ElementSet::full(f.ground_size()));
  auto start = Clock::now();
  std::uint64_t v0 = f.queries();
  ElementSet x = double_greedy_core(
      f, dom, [](const DoubleGreedyStep& s) { return s.grow_gain >= s.shrink_gain; });
  return finish("dg-det", std::move(x), f, nullptr, v0, 0, start);
}

RunRecord unconstrained_max_randomized(const ValueOracle& f, std::uint64_t seed,
                                       const std::optional<ElementSet>& domain) {
  ElementSet dom = domain.value_or(ElementSet::full(f.ground_size()));
  std::mt19937_64 rng(seed);
  // 53-bit uniform draw in [0, 1); bit-for-bit reproducible across platforms,
  // unlike std::uniform_real_distribution.
  auto draw = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  auto start = Clock::now();
  std::uint64_t v0 = f.queries();
  ElementSet x = double_greedy_core(f, dom, [&](const DoubleGreedyStep& s) {
    double grow = std::max(s.grow_gain, 0.0);
    double shrink = std::max(s.shrink_gain, 0.0);
    if (grow + shrink <= 0.0) return s.grow_gain >= s.shrink_gain;
    return draw() < grow / (grow + shrink);
  });
  RunRecord rec = finish("dg-rand", std::move(x), f, nullptr, v0, 0, start);
  rec.seed = seed;
  return rec;
}

RunRecord triple_greedy(const ValueOracle& f, const MembershipOracle& sys, double epsilon,
                        UnconstrainedVariant variant, std::uint64_t seed) {
  validate_pair(f, sys);
  validate_epsilon(epsilon);
  std::size_t n = f.ground_size();
  auto start = Clock::now();
  std::uint64_t v0 = f.queries(), m0 = sys.queries();

  ElementSet first = threshold_core(f, sys, epsilon, ElementSet::full(n));

  // The restriction of f to U \ first makes the first solution invisible to
  // the second run: both the singleton maximum and the candidate scan range
  // over the complement only.
  ValueOracle blind = restrict_complement(f, first);
  ElementSet second = threshold_core(blind, sys, epsilon, first.complement());

  ValueOracle inside = restrict_to(f, first);
  ElementSet refined(n);
  if (variant == UnconstrainedVariant::kDeterministic) {
    refined = double_greedy_core(
        inside, first, [](const DoubleGreedyStep& s) { return s.grow_gain >= s.shrink_gain; });
  } else {
    std::mt19937_64 rng(seed);
    auto draw = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    refined = double_greedy_core(inside, first, [&](const DoubleGreedyStep& s) {
      double grow = std::max(s.grow_gain, 0.0);
      double shrink = std::max(s.shrink_gain, 0.0);
      if (grow + shrink <= 0.0) return s.grow_gain >= s.shrink_gain;
      return draw() < grow / (grow + shrink);
    });
  }

  double value_first = f(first);
  double value_second = f(second);
  double value_refined = f(refined);

  // Exact ties prefer the refined set, then the first, then the second.
  ElementSet chosen = refined;
  double best = value_refined;
  if (value_first > best) {
    chosen = first;
    best = value_first;
  }
  if (value_second > best) {
    chosen = second;
    best = value_second;
  }

  RunRecord rec = finish("triple", std::move(chosen), f, &sys, v0, m0, start);
  rec.epsilon = epsilon;
  if (variant == UnconstrainedVariant::kRandomized) rec.seed = seed;
  return rec;
}

RunRecord brute_force(const ValueOracle& f, const MembershipOracle& sys, std::size_t cap) {
  validate_pair(f, sys);
  std::size_t n = f.ground_size();
  if (n > cap) {
    throw CapExceededError("brute_force: ground set of size " + std::to_string(n) +
                           " exceeds the cap of " + std::to_string(cap));
  }
  auto start = Clock::now();
  std::uint64_t v0 = f.queries(), m0 = sys.queries();
  bool found = false;
  ElementSet best(n);
  double best_value = 0.0;
  enumerate_independent(sys, n, [&](const ElementSet& s) {
    double v = f(s);
    if (!found || v > best_value ||
        (v == best_value && ElementSet::lexicographic_less(s, best))) {
      found = true;
      best = s;
      best_value = v;
    }
  });
  return finish("brute", std::move(best), f, &sys, v0, m0, start);
}

double max_union_ratio(const ElementSet& a, const ValueOracle& f, const MembershipOracle& sys,
                       std::size_t cap) {
  validate_pair(f, sys);
  std::size_t n = f.ground_size();
  if (n > cap) {
    throw CapExceededError("max_union_ratio: ground set of size " + std::to_string(n) +
                           " exceeds the cap of " + std::to_string(cap));
  }
  if (a.universe_size() != n) {
    throw std::invalid_argument("max_union_ratio: set over wrong ground set");
  }
  double fa = f(a);
  double worst_union = 0.0;
  enumerate_independent(sys, n, [&](const ElementSet& b) {
    double v = f(a | b);
    if (v > worst_union) worst_union = v;
  });
  if (worst_union <= 0.0) return std::numeric_limits<double>::infinity();
  return fa / worst_union;
}

}  // namespace submax
