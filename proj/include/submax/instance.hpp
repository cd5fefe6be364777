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

#ifndef SUBMAX_INSTANCE_HPP_
#define SUBMAX_INSTANCE_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "submax/functions.hpp"
#include "submax/systems.hpp"

namespace submax {

/// A serialized pairing of an objective and an independence system over the
/// same ground set, in a versioned key-value text format that diffs cleanly.
struct Instance {
  std::string name;
  std::size_t n = 0;
  FunctionSpec function;
  SystemSpec system;
  std::optional<int> expected_p;
  std::optional<std::vector<std::string>> labels;

  GroundSet ground_set() const { return labels ? GroundSet(n, *labels) : GroundSet(n); }
  ValueOracle value_oracle(bool enable_cache = false) const {
    return make_value_oracle(function, n, enable_cache);
  }
  MembershipOracle membership_oracle() const { return make_membership_oracle(system, n); }
};

/// Parses the "submax-instance v1" format. Throws ParseError on malformed
/// input and std::invalid_argument on dimension mismatches.
Instance parse_instance(std::istream& in);
Instance parse_instance(const std::string& text);
Instance load_instance_file(const std::string& path);

/// Canonical serialization; parse(serialize(x)) reproduces x and serialize is
/// byte-deterministic. Reals carry 17 significant digits.
std::string serialize_instance(const Instance& instance);

/// Assembles the padded instance for a graph (ground set size 2 * |V|).
Instance make_phi_instance(const Graph& g, const std::string& name);

/// %.17g formatting used for every real emitted by the library's text
/// surfaces (instance files and CSV).
std::string format_real(double x);

}  // namespace submax

#endif  // SUBMAX_INSTANCE_HPP_
