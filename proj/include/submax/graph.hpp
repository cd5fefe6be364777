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

#ifndef SUBMAX_GRAPH_HPP_
#define SUBMAX_GRAPH_HPP_

#include <cstddef>
#include <iosfwd>
#include <utility>
#include <vector>

namespace submax {

/// Simple undirected graph: explicit vertex count (isolated vertices allowed)
/// plus a sorted, deduplicated edge list with endpoints stored as (min, max).
/// Self-loops are rejected at construction.
class Graph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  Graph() = default;
  Graph(std::size_t num_vertices, std::vector<Edge> edges);

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool operator==(const Graph& o) const = default;

  // Small catalog used by fixtures and exhaustive tests.
  static Graph path(std::size_t num_vertices);
  static Graph cycle(std::size_t num_vertices);
  /// Star with the center at vertex 0.
  static Graph star(std::size_t num_vertices);
  static Graph complete(std::size_t num_vertices);
  static Graph edgeless(std::size_t num_vertices);

 private:
  std::size_t num_vertices_ = 0;
  std::vector<Edge> edges_;
};

/// Reads the "n m" + m x "u v" format. Throws ParseError on malformed input,
/// self-loops, or out-of-range endpoints.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

}  // namespace submax

#endif  // SUBMAX_GRAPH_HPP_
