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

#include "submax/oracle.hpp"

namespace submax {

std::string SystemClass::to_string() const {
  switch (kind) {
    case Kind::kMatroid:
      return "matroid";
    case Kind::kPExtendible:
      return std::to_string(p) + "-extendible";
    case Kind::kPSystem:
      return std::to_string(p) + "-system";
    case Kind::kGeneral:
      return "general";
  }
  return "general";
}

ValueOracle::ValueOracle(std::size_t ground_size, Evaluator eval, bool nonneg_declared,
                         bool enable_cache)
    : n_(ground_size),
      eval_(std::move(eval)),
      nonneg_(nonneg_declared),
      counter_(std::make_shared<std::atomic<std::uint64_t>>(0)) {
  if (enable_cache) cache_ = std::make_shared<Cache>();
}

double ValueOracle::operator()(const ElementSet& s) const {
  if (s.universe_size() != n_) {
    throw std::invalid_argument("ValueOracle: argument from a different ground set");
  }
  if (checked_ && domain_ && !s.is_subset_of(*domain_)) {
    throw std::domain_error("ValueOracle: argument outside the restricted domain " +
                            domain_->to_string());
  }
  double v;
  if (cache_) {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->map.find(s);
    if (it != cache_->map.end()) {
      v = it->second;
    } else {
      counter_->fetch_add(1, std::memory_order_relaxed);
      v = eval_(s);
      cache_->map.emplace(s, v);
    }
  } else {
    counter_->fetch_add(1, std::memory_order_relaxed);
    v = eval_(s);
  }
  if (checked_ && nonneg_ && v < 0.0) {
    throw std::logic_error("ValueOracle: declared non-negative but returned " +
                           std::to_string(v) + " on " + s.to_string());
  }
  return v;
}

ValueOracle ValueOracle::checked() const {
  ValueOracle c = *this;
  c.checked_ = true;
  return c;
}

MembershipOracle::MembershipOracle(std::size_t ground_size, Predicate pred, SystemClass declared)
    : n_(ground_size),
      pred_(std::move(pred)),
      declared_(declared),
      counter_(std::make_shared<std::atomic<std::uint64_t>>(0)) {}

bool MembershipOracle::contains(const ElementSet& s) const {
  if (s.universe_size() != n_) {
    throw std::invalid_argument("MembershipOracle: argument from a different ground set");
  }
  counter_->fetch_add(1, std::memory_order_relaxed);
  return pred_(s);
}

double marginal_gain(const ValueOracle& f, const ElementSet& base, std::size_t element) {
  if (element >= f.ground_size()) {
    throw std::invalid_argument("marginal_gain: element index out of range");
  }
  return f(base.with(element)) - f(base);
}

ValueOracle restrict_to(const ValueOracle& f, const ElementSet& restriction) {
  if (restriction.universe_size() != f.ground_size()) {
    throw std::invalid_argument("restrict_to: restriction from a different ground set");
  }
  ValueOracle g;
  g.n_ = f.ground_size();
  g.nonneg_ = f.nonneg_;
  g.counter_ = f.counter_;  // queries count on the parent
  if (f.cache_) g.cache_ = std::make_shared<ValueOracle::Cache>();
  ElementSet r = restriction;
  auto parent = f.eval_;
  g.eval_ = [parent, r](const ElementSet& s) { return parent(s & r); };
  return g;
}

ValueOracle restrict_complement(const ValueOracle& f, const ElementSet& excluded) {
  if (excluded.universe_size() != f.ground_size()) {
    throw std::invalid_argument("restrict_complement: exclusion from a different ground set");
  }
  ValueOracle g = f;
  ElementSet keep = excluded.complement();
  g.domain_ = f.domain_ ? (*f.domain_ & keep) : keep;
  if (f.cache_) g.cache_ = std::make_shared<ValueOracle::Cache>();
  return g;
}

}  // namespace submax
