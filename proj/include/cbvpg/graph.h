// Copyright 2026 The cbvpg Authors
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

#ifndef CBVPG_GRAPH_H_
#define CBVPG_GRAPH_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cbvpg {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Sorted list of distinct vertex ids.
using VertexSet = std::vector<Vertex>;

// Sorts and removes duplicates.
VertexSet MakeVertexSet(std::vector<Vertex> ids);

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built; use
// GraphBuilder to assemble one edge at a time.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  // Throws GraphError on self-loops, out-of-range ids or repeated edges.
  static Graph FromEdges(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  int size() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const {
    return matrix_[static_cast<size_t>(u) * n_ + v] != 0;
  }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  bool contains(Vertex v) const { return v >= 0 && v < n_; }
  void CheckVertex(Vertex v) const;

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  friend class GraphBuilder;

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint8_t> matrix_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n);

  int order() const { return n_; }
  // Adds a fresh vertex and returns its id.
  Vertex AddVertex();
  // Idempotent. Throws GraphError on self-loops or out-of-range ids.
  void AddEdge(Vertex u, Vertex v);
  bool HasEdge(Vertex u, Vertex v) const;

  Graph Build() const;

 private:
  int n_;
  std::vector<std::vector<Vertex>> adj_;
};

struct Subgraph {
  Graph graph;
  // to_parent[new id] = id in the parent graph.
  std::vector<Vertex> to_parent;
  // from_parent[parent id] = new id, or -1 when the vertex was dropped.
  std::vector<Vertex> from_parent;

  VertexSet ToParent(std::span<const Vertex> ids) const;
};

// G[w]. Vertices keep their relative order.
Subgraph InducedSubgraph(const Graph& g, std::span<const Vertex> w);

// Contracts w into v. The result has order n-1; ids above w shift down by one.
Graph Contract(const Graph& g, Vertex v, Vertex w);

// Id of x in Contract(g, v, w) (x != w).
inline Vertex ContractedId(Vertex x, Vertex w) { return x > w ? x - 1 : x; }

bool IsSimplicial(const Graph& g, Vertex v);

// Vertex sets of the connected components, ordered by smallest vertex.
std::vector<VertexSet> ConnectedComponents(const Graph& g);

bool IsClique(const Graph& g, std::span<const Vertex> w);

// Text format: "n m" followed by m lines "u v" with u < v.
Graph ParseGraphText(const std::string& text);
std::string FormatGraphText(const Graph& g);

// JSON format: {"n": <int>, "edges": [[u, v], ...]}.
Graph ParseGraphJson(const std::string& text);
std::string FormatGraphJson(const Graph& g);

// Picks JSON when the first non-blank character is '{'.
Graph ParseGraph(const std::string& text);

}  // namespace cbvpg

#endif  // CBVPG_GRAPH_H_
