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
//
// Exhaustive verification oracles for the structural definitions the library
// relies on (independence system, matroid, p-extendible, p-system,
// submodularity, monotonicity). All routines enumerate 2^n subsets and are
// guarded by hard caps; they are test and classification machinery, not
// production paths.

#ifndef SUBMAX_CHECKERS_HPP_
#define SUBMAX_CHECKERS_HPP_

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>

#include "submax/element_set.hpp"
#include "submax/oracle.hpp"

namespace submax {

inline constexpr std::size_t kDefaultCheckerCap = 12;

/// Exact ratio of two non-negative integers, kept reduced so that equality
/// tests (notably "all bases share a size", ratio == 1) stay exact.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t num, std::int64_t den) {
    std::int64_t g = std::gcd(num, den);
    if (g == 0) return {0, 1};
    return {num / g, den / g};
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational& o) const = default;
  std::string to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

/// Boolean verdict plus a witness of failure (sets S subset T and element x,
/// with the roles documented per check).
struct PropertyCheck {
  bool holds = true;
  ElementSet witness_small;
  ElementSet witness_large;
  std::size_t witness_element = 0;

  explicit operator bool() const { return holds; }
};

struct ClassificationReport {
  bool is_independence_system = false;
  bool is_matroid = false;
  std::optional<int> p_extendible;  // smallest valid p, or nothing below the cap
  Rational p_system;
  std::map<std::size_t, std::size_t> basis_sizes;  // size -> number of bases
  bool has_two_disjoint_bases = false;

  std::string to_string() const;
};

/// Nonempty and downward closed, verified over all 2^n subsets.
bool check_independence_system(const MembershipOracle& sys,
                               std::size_t cap = kDefaultCheckerCap);

/// The augmentation axiom: for independent S1, S2 with |S1| > |S2| some
/// element of S1 \ S2 extends S2. (The smaller set augments from the larger.)
bool check_matroid(const MembershipOracle& sys, std::size_t cap = kDefaultCheckerCap);

/// Smallest p <= cap_p such that whenever independent A is a proper subset of
/// independent B and A + x is independent for some x outside A, at most p
/// elements of B \ A can be removed to make room for x inside B. Exhaustive
/// over all triples and all repair subsets.
std::optional<int> p_extendible_parameter(const MembershipOracle& sys, int cap_p = 8,
                                          std::size_t cap = kDefaultCheckerCap);

/// Largest basis size over smallest basis size, as an exact rational.
Rational p_system_parameter(const MembershipOracle& sys, std::size_t cap = kDefaultCheckerCap);

/// Diminishing returns, checked over all nested pairs and outside elements
/// with relative slack 1e-9 to absorb floating-point summation error.
/// On failure the witness holds (S, T, x) with S subset of T.
PropertyCheck check_submodular(const ValueOracle& f, std::size_t cap = kDefaultCheckerCap);

/// f(S + x) >= f(S) for all S and x, same slack. Witness holds (S, S+x, x).
PropertyCheck check_monotone(const ValueOracle& f, std::size_t cap = kDefaultCheckerCap);

bool has_two_disjoint_bases(const MembershipOracle& sys, std::size_t cap = kDefaultCheckerCap);

/// Runs every structural check and collects the results.
ClassificationReport classify_system(const MembershipOracle& sys, int cap_p = 8,
                                     std::size_t cap = kDefaultCheckerCap);

}  // namespace submax

#endif  // SUBMAX_CHECKERS_HPP_
