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

#ifndef SUBMAX_ORACLE_HPP_
#define SUBMAX_ORACLE_HPP_

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "submax/element_set.hpp"

namespace submax {

/// Declared structure of an independence system, carried as metadata on the
/// membership oracle. "general" promises nothing beyond nonempty + downward
/// closed.
struct SystemClass {
  enum class Kind { kMatroid, kPExtendible, kPSystem, kGeneral };

  Kind kind = Kind::kGeneral;
  int p = 1;

  static SystemClass matroid() { return {Kind::kMatroid, 1}; }
  static SystemClass p_extendible(int p) { return {Kind::kPExtendible, p}; }
  static SystemClass p_system(int p) { return {Kind::kPSystem, p}; }
  static SystemClass general() { return {Kind::kGeneral, 1}; }

  std::string to_string() const;
};

/// Counted-access evaluator for a set function f : 2^U -> R.
///
/// Copies share the underlying query counter; views produced by restrict_to /
/// restrict_complement also share it, so the counter always reflects the total
/// number of evaluations charged to the root function. Evaluation caching is
/// off by default; when enabled, cache hits do not increment the counter.
class ValueOracle {
 public:
  using Evaluator = std::function<double(const ElementSet&)>;

  ValueOracle() = default;
  ValueOracle(std::size_t ground_size, Evaluator eval, bool nonneg_declared = true,
              bool enable_cache = false);

  /// Evaluates f on s and increments the shared query counter (unless the
  /// value was served from the cache).
  double operator()(const ElementSet& s) const;

  std::size_t ground_size() const { return n_; }
  std::uint64_t queries() const { return counter_->load(std::memory_order_relaxed); }
  void reset_queries() { counter_->store(0, std::memory_order_relaxed); }
  bool nonneg_declared() const { return nonneg_; }
  bool cache_active() const { return cache_ != nullptr; }

  /// For complement-restricted views: the set of legal-argument elements.
  /// Empty optional means the oracle is total on 2^U.
  const std::optional<ElementSet>& domain() const { return domain_; }

  /// Validating wrapper: evaluations additionally assert the declared
  /// non-negativity and, for domain-restricted views, that the argument stays
  /// inside the domain. Production algorithm paths never pay for these checks.
  ValueOracle checked() const;

 private:
  friend ValueOracle restrict_to(const ValueOracle&, const ElementSet&);
  friend ValueOracle restrict_complement(const ValueOracle&, const ElementSet&);

  struct Cache {
    std::mutex mutex;
    std::unordered_map<ElementSet, double, ElementSetHash> map;
  };

  std::size_t n_ = 0;
  Evaluator eval_;
  bool nonneg_ = true;
  bool checked_ = false;
  std::optional<ElementSet> domain_;
  std::shared_ptr<std::atomic<std::uint64_t>> counter_;
  std::shared_ptr<Cache> cache_;
};

/// Counted-access membership predicate for an independence system.
class MembershipOracle {
 public:
  using Predicate = std::function<bool(const ElementSet&)>;

  MembershipOracle() = default;
  MembershipOracle(std::size_t ground_size, Predicate pred,
                   SystemClass declared = SystemClass::general());

  /// True iff s is independent; increments the query counter.
  bool contains(const ElementSet& s) const;

  std::size_t ground_size() const { return n_; }
  std::uint64_t queries() const { return counter_->load(std::memory_order_relaxed); }
  void reset_queries() { counter_->store(0, std::memory_order_relaxed); }
  const SystemClass& declared_class() const { return declared_; }

 private:
  std::size_t n_ = 0;
  Predicate pred_;
  SystemClass declared_;
  std::shared_ptr<std::atomic<std::uint64_t>> counter_;
};

/// f(A + x) - f(A). Two oracle queries (fewer when the cache serves one).
double marginal_gain(const ValueOracle& f, const ElementSet& base, std::size_t element);

/// f|_R : S -> f(S & R). Total on 2^U; queries count on the parent.
ValueOracle restrict_to(const ValueOracle& f, const ElementSet& restriction);

/// f restricted to the ground set U \ excluded. Evaluates like f, but only
/// subsets of U \ excluded are legal arguments; the checked() wrapper rejects
/// anything else, and algorithms keep candidates inside the domain.
ValueOracle restrict_complement(const ValueOracle& f, const ElementSet& excluded);

}  // namespace submax

#endif  // SUBMAX_ORACLE_HPP_
