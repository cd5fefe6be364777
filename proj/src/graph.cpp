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

#include "submax/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "submax/errors.hpp"

namespace submax {

Graph::Graph(std::size_t num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  for (auto& [u, v] : edges_) {
    if (u == v) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
    if (u >= num_vertices_ || v >= num_vertices_) {
      throw std::invalid_argument("Graph: edge endpoint out of range");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

Graph Graph::path(std::size_t num_vertices) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < num_vertices; ++i) e.emplace_back(i, i + 1);
  return Graph(num_vertices, std::move(e));
}

Graph Graph::cycle(std::size_t num_vertices) {
  if (num_vertices < 3) throw std::invalid_argument("Graph::cycle: needs at least 3 vertices");
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < num_vertices; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, num_vertices - 1);
  return Graph(num_vertices, std::move(e));
}

Graph Graph::star(std::size_t num_vertices) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i < num_vertices; ++i) e.emplace_back(0, i);
  return Graph(num_vertices, std::move(e));
}

Graph Graph::complete(std::size_t num_vertices) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < num_vertices; ++i)
    for (std::size_t j = i + 1; j < num_vertices; ++j) e.emplace_back(i, j);
  return Graph(num_vertices, std::move(e));
}

Graph Graph::edgeless(std::size_t num_vertices) { return Graph(num_vertices, {}); }

Graph read_graph(std::istream& in) {
  std::size_t n = 0, m = 0;
  if (!(in >> n >> m)) throw ParseError("graph: expected header line \"n m\"");
  std::vector<Graph::Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) throw ParseError("graph: expected edge line " + std::to_string(i + 1));
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw ParseError("graph: edge endpoint out of range on line " + std::to_string(i + 2));
    }
    if (u == v) throw ParseError("graph: self-loop on line " + std::to_string(i + 2));
    edges.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  }
  try {
    return Graph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("graph: ") + e.what());
  }
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << " " << g.num_edges() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

}  // namespace submax
