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

#include "submax/checkers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <vector>

#include "submax/errors.hpp"

namespace submax {
namespace {

constexpr double kRelativeSlack = 1e-9;

void check_cap(std::size_t n, std::size_t cap, const char* who) {
  if (n > cap) {
    throw CapExceededError(std::string(who) + ": ground set of size " + std::to_string(n) +
                           " exceeds the cap of " + std::to_string(cap));
  }
}

/// Membership of every subset of 0..n-1, indexed by bitmask.
std::vector<bool> membership_table(const MembershipOracle& sys, std::size_t n) {
  std::vector<bool> member(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < member.size(); ++mask) {
    member[mask] = sys.contains(ElementSet::from_mask(n, mask));
  }
  return member;
}

std::vector<double> value_table(const ValueOracle& f, std::size_t n) {
  std::vector<double> value(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < value.size(); ++mask) {
    value[mask] = f(ElementSet::from_mask(n, mask));
  }
  return value;
}

/// Smallest |Y| with Y inside `pool` and (b \ Y) + x independent, searched in
/// ascending size so the common no-repair case costs one lookup. The full
/// pool always works when (b & ~pool) + x is independent, so the search
/// terminates.
int min_repair_size(const std::vector<bool>& member, std::uint64_t b, std::uint64_t pool,
                    std::uint64_t xbit) {
  if (member[b | xbit]) return 0;
  std::vector<std::size_t> bits;
  for (std::uint64_t rest = pool; rest != 0; rest &= rest - 1) {
    bits.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  }
  std::size_t len = bits.size();
  for (std::size_t size = 1; size <= len; ++size) {
    // Gosper's hack over compact index masks of the pool
    std::uint64_t compact = (std::uint64_t{1} << size) - 1;
    std::uint64_t limit = std::uint64_t{1} << len;
    while (compact < limit) {
      std::uint64_t y = 0;
      for (std::uint64_t c = compact; c != 0; c &= c - 1) {
        y |= std::uint64_t{1} << bits[static_cast<std::size_t>(std::countr_zero(c))];
      }
      if (member[(b & ~y) | xbit]) return static_cast<int>(size);
      std::uint64_t low = compact & (~compact + 1);
      std::uint64_t ripple = compact + low;
      compact = ripple | (((compact ^ ripple) >> 2) / low);
    }
  }
  return static_cast<int>(len);
}

/// Bases = members with no single-element independent extension.
std::vector<std::uint64_t> basis_masks(const std::vector<bool>& member, std::size_t n) {
  std::vector<std::uint64_t> bases;
  for (std::uint64_t mask = 0; mask < member.size(); ++mask) {
    if (!member[mask]) continue;
    bool maximal = true;
    for (std::size_t x = 0; x < n && maximal; ++x) {
      if (!(mask >> x & 1) && member[mask | (std::uint64_t{1} << x)]) maximal = false;
    }
    if (maximal) bases.push_back(mask);
  }
  return bases;
}

bool independence_system_from_table(const std::vector<bool>& member, std::size_t n) {
  bool nonempty = std::any_of(member.begin(), member.end(), [](bool b) { return b; });
  if (!nonempty) return false;
  for (std::uint64_t mask = 0; mask < member.size(); ++mask) {
    if (!member[mask]) continue;
    // single-element deletions suffice: closure under them gives closure
    // under all subsets by induction
    for (std::size_t x = 0; x < n; ++x) {
      if ((mask >> x & 1) && !member[mask & ~(std::uint64_t{1} << x)]) return false;
    }
  }
  return true;
}

double slack_for(double a, double b, double c, double d) {
  double scale = std::max({1.0, std::fabs(a), std::fabs(b), std::fabs(c), std::fabs(d)});
  return kRelativeSlack * scale;
}

}  // namespace

std::string ClassificationReport::to_string() const {
  std::string out;
  out += "independence_system: ";
  out += is_independence_system ? "true" : "false";
  out += "\nmatroid: ";
  out += is_matroid ? "true" : "false";
  out += "\np_extendible: ";
  out += p_extendible ? std::to_string(*p_extendible) : std::string("none under cap");
  out += "\np_system: " + p_system.to_string();
  out += "\nbasis_sizes:";
  for (const auto& [size, count] : basis_sizes) {
    out += " " + std::to_string(size) + "x" + std::to_string(count);
  }
  out += "\ntwo_disjoint_bases: ";
  out += has_two_disjoint_bases ? "true" : "false";
  return out;
}

bool check_independence_system(const MembershipOracle& sys, std::size_t cap) {
  std::size_t n = sys.ground_size();
  check_cap(n, cap, "check_independence_system");
  return independence_system_from_table(membership_table(sys, n), n);
}

bool check_matroid(const MembershipOracle& sys, std::size_t cap) {
  std::size_t n = sys.ground_size();
  check_cap(n, cap, "check_matroid");
  auto member = membership_table(sys, n);
  if (!independence_system_from_table(member, n)) return false;
  std::vector<std::uint64_t> members;
  for (std::uint64_t mask = 0; mask < member.size(); ++mask) {
    if (member[mask]) members.push_back(mask);
  }
  for (std::uint64_t larger : members) {
    int larger_size = std::popcount(larger);
    for (std::uint64_t smaller : members) {
      if (std::popcount(smaller) >= larger_size) continue;
      std::uint64_t candidates = larger & ~smaller;
      bool augmentable = false;
      while (candidates != 0 && !augmentable) {
        std::uint64_t bit = candidates & (~candidates + 1);
        if (member[smaller | bit]) augmentable = true;
        candidates &= candidates - 1;
      }
      if (!augmentable) return false;
    }
  }
  return true;
}

std::optional<int> p_extendible_parameter(const MembershipOracle& sys, int cap_p,
                                          std::size_t cap) {
  std::size_t n = sys.ground_size();
  check_cap(n, cap, "p_extendible_parameter");
  auto member = membership_table(sys, n);

  int worst = 1;  // parameters are positive by convention even when no repair is ever needed
  for (std::uint64_t b = 1; b < member.size(); ++b) {
    if (!member[b]) continue;
    // proper subsets of b via submask enumeration
    for (std::uint64_t a = (b - 1) & b;; a = (a - 1) & b) {
      if (member[a]) {
        for (std::size_t x = 0; x < n; ++x) {
          std::uint64_t xbit = std::uint64_t{1} << x;
          if (a & xbit) continue;
          if (!member[a | xbit]) continue;
          int best = min_repair_size(member, b, b & ~a, xbit);
          if (best > worst) worst = best;
          if (worst > cap_p) return std::nullopt;
        }
      }
      if (a == 0) break;
    }
  }
  return worst;
}

Rational p_system_parameter(const MembershipOracle& sys, std::size_t cap) {
  std::size_t n = sys.ground_size();
  check_cap(n, cap, "p_system_parameter");
  auto member = membership_table(sys, n);
  auto bases = basis_masks(member, n);
  if (bases.empty()) return Rational::of(1, 1);
  int min_size = std::popcount(bases.front());
  int max_size = min_size;
  for (std::uint64_t b : bases) {
    min_size = std::min(min_size, std::popcount(b));
    max_size = std::max(max_size, std::popcount(b));
  }
  if (min_size == 0) {
    // the lone basis is the empty set; treat the degenerate family as a 1-system
    return max_size == 0 ? Rational::of(1, 1) : Rational::of(max_size, 1);
  }
  return Rational::of(max_size, min_size);
}

PropertyCheck check_submodular(const ValueOracle& f, std::size_t cap) {
  std::size_t n = f.ground_size();
  check_cap(n, cap, "check_submodular");
  auto value = value_table(f, n);
  PropertyCheck result;
  // every (S, T) with S subset of T, via submask enumeration of T
  for (std::uint64_t t = 0; t < value.size(); ++t) {
    std::uint64_t s = t;
    while (true) {
      for (std::size_t x = 0; x < n; ++x) {
        std::uint64_t xbit = std::uint64_t{1} << x;
        if (t & xbit) continue;
        double gain_large = value[t | xbit] - value[t];
        double gain_small = value[s | xbit] - value[s];
        if (gain_large >
            gain_small + slack_for(value[t | xbit], value[t], value[s | xbit], value[s])) {
          result.holds = false;
          result.witness_small = ElementSet::from_mask(n, s);
          result.witness_large = ElementSet::from_mask(n, t);
          result.witness_element = x;
          return result;
        }
      }
      if (s == 0) break;
      s = (s - 1) & t;
    }
  }
  return result;
}

PropertyCheck check_monotone(const ValueOracle& f, std::size_t cap) {
  std::size_t n = f.ground_size();
  check_cap(n, cap, "check_monotone");
  auto value = value_table(f, n);
  PropertyCheck result;
  for (std::uint64_t s = 0; s < value.size(); ++s) {
    for (std::size_t x = 0; x < n; ++x) {
      std::uint64_t xbit = std::uint64_t{1} << x;
      if (s & xbit) continue;
      if (value[s | xbit] < value[s] - slack_for(value[s | xbit], value[s], 0.0, 0.0)) {
        result.holds = false;
        result.witness_small = ElementSet::from_mask(n, s);
        result.witness_large = ElementSet::from_mask(n, s | xbit);
        result.witness_element = x;
        return result;
      }
    }
  }
  return result;
}

bool has_two_disjoint_bases(const MembershipOracle& sys, std::size_t cap) {
  std::size_t n = sys.ground_size();
  check_cap(n, cap, "has_two_disjoint_bases");
  auto member = membership_table(sys, n);
  auto bases = basis_masks(member, n);
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = i + 1; j < bases.size(); ++j) {
      if ((bases[i] & bases[j]) == 0) return true;
    }
  }
  return false;
}

ClassificationReport classify_system(const MembershipOracle& sys, int cap_p, std::size_t cap) {
  std::size_t n = sys.ground_size();
  check_cap(n, cap, "classify_system");
  ClassificationReport report;
  report.is_independence_system = check_independence_system(sys, cap);
  report.is_matroid = check_matroid(sys, cap);
  report.p_extendible = p_extendible_parameter(sys, cap_p, cap);
  report.p_system = p_system_parameter(sys, cap);
  auto member = membership_table(sys, n);
  for (std::uint64_t b : basis_masks(member, n)) {
    report.basis_sizes[static_cast<std::size_t>(std::popcount(b))]++;
  }
  report.has_two_disjoint_bases = has_two_disjoint_bases(sys, cap);
  return report;
}

}  // namespace submax
