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

#include "cbvpg/graph.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "json.hpp"

namespace cbvpg {

VertexSet MakeVertexSet(std::vector<Vertex> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

Graph::Graph(int n) : n_(n), adj_(n), matrix_(static_cast<size_t>(n) * n, 0) {
  if (n < 0) throw GraphError("negative vertex count");
}

Graph Graph::FromEdges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const auto& [u, v] : edges) {
    if (b.HasEdge(u, v)) {
      throw GraphError("repeated edge " + std::to_string(u) + " " +
                       std::to_string(v));
    }
    b.AddEdge(u, v);
  }
  return b.Build();
}

void Graph::CheckVertex(Vertex v) const {
  if (!contains(v)) {
    throw GraphError("vertex " + std::to_string(v) + " out of range [0, " +
                     std::to_string(n_) + ")");
  }
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

GraphBuilder::GraphBuilder(int n) : n_(n), adj_(n) {
  if (n < 0) throw GraphError("negative vertex count");
}

Vertex GraphBuilder::AddVertex() {
  adj_.emplace_back();
  return n_++;
}

void GraphBuilder::AddEdge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw GraphError("edge " + std::to_string(u) + " " + std::to_string(v) +
                     " out of range");
  }
  if (u == v) throw GraphError("self-loop at " + std::to_string(u));
  if (HasEdge(u, v)) return;
  adj_[u].push_back(v);
  adj_[v].push_back(u);
}

bool GraphBuilder::HasEdge(Vertex u, Vertex v) const {
  if (u < 0 || u >= n_) return false;
  return std::find(adj_[u].begin(), adj_[u].end(), v) != adj_[u].end();
}

Graph GraphBuilder::Build() const {
  Graph g(n_);
  g.adj_ = adj_;
  int twice = 0;
  for (Vertex u = 0; u < n_; ++u) {
    std::sort(g.adj_[u].begin(), g.adj_[u].end());
    twice += static_cast<int>(g.adj_[u].size());
    for (Vertex v : g.adj_[u]) g.matrix_[static_cast<size_t>(u) * n_ + v] = 1;
  }
  g.m_ = twice / 2;
  return g;
}

VertexSet Subgraph::ToParent(std::span<const Vertex> ids) const {
  std::vector<Vertex> out;
  out.reserve(ids.size());
  for (Vertex v : ids) out.push_back(to_parent.at(v));
  return MakeVertexSet(std::move(out));
}

Subgraph InducedSubgraph(const Graph& g, std::span<const Vertex> w) {
  Subgraph s;
  s.from_parent.assign(g.order(), -1);
  for (Vertex v : w) {
    g.CheckVertex(v);
    if (s.from_parent[v] != -1) throw GraphError("repeated vertex in subset");
    s.from_parent[v] = 0;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (s.from_parent[v] == -1) continue;
    s.from_parent[v] = static_cast<Vertex>(s.to_parent.size());
    s.to_parent.push_back(v);
  }
  GraphBuilder b(static_cast<int>(s.to_parent.size()));
  for (Vertex nu = 0; nu < b.order(); ++nu) {
    for (Vertex pv : g.neighbors(s.to_parent[nu])) {
      Vertex nv = s.from_parent[pv];
      if (nv > nu) b.AddEdge(nu, nv);
    }
  }
  s.graph = b.Build();
  return s;
}

Graph Contract(const Graph& g, Vertex v, Vertex w) {
  g.CheckVertex(v);
  g.CheckVertex(w);
  if (v == w) throw GraphError("cannot contract a vertex with itself");
  GraphBuilder b(g.order() - 1);
  for (const auto& [a, c] : g.edges()) {
    Vertex x = a == w ? v : a;
    Vertex y = c == w ? v : c;
    if (x == y) continue;
    b.AddEdge(ContractedId(x, w), ContractedId(y, w));
  }
  return b.Build();
}

bool IsSimplicial(const Graph& g, Vertex v) {
  g.CheckVertex(v);
  return IsClique(g, g.neighbors(v));
}

bool IsClique(const Graph& g, std::span<const Vertex> w) {
  for (size_t i = 0; i < w.size(); ++i) {
    for (size_t j = i + 1; j < w.size(); ++j) {
      if (!g.adjacent(w[i], w[j])) return false;
    }
  }
  return true;
}

std::vector<VertexSet> ConnectedComponents(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] != -1) continue;
    VertexSet members{s};
    comp[s] = static_cast<int>(out.size());
    for (size_t head = 0; head < members.size(); ++head) {
      for (Vertex u : g.neighbors(members[head])) {
        if (comp[u] == -1) {
          comp[u] = comp[s];
          members.push_back(u);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

namespace {

long long ReadInt(std::istringstream& in, const char* what) {
  long long x;
  if (!(in >> x)) throw GraphError(std::string("expected ") + what);
  return x;
}

}  // namespace

Graph ParseGraphText(const std::string& text) {
  std::istringstream in(text);
  long long n = ReadInt(in, "vertex count");
  long long m = ReadInt(in, "edge count");
  if (n < 0 || m < 0) throw GraphError("negative count in header");
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (long long i = 0; i < m; ++i) {
    long long u = ReadInt(in, "edge endpoint");
    long long v = ReadInt(in, "edge endpoint");
    if (!(0 <= u && u < v && v < n)) {
      throw GraphError("edge " + std::to_string(u) + " " + std::to_string(v) +
                       " violates 0 <= u < v < n");
    }
    Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v)};
    if (!seen.insert(e).second) {
      throw GraphError("repeated edge " + std::to_string(u) + " " +
                       std::to_string(v));
    }
    edges.push_back(e);
  }
  std::string rest;
  if (in >> rest) throw GraphError("trailing data after edge list");
  return Graph::FromEdges(static_cast<int>(n), edges);
}

std::string FormatGraphText(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph ParseGraphJson(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("malformed graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw GraphError("graph JSON needs an integer field \"n\"");
  }
  long long n = j["n"].get<long long>();
  if (n < 0) throw GraphError("negative vertex count");
  std::vector<Edge> edges;
  std::set<Edge> seen;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw GraphError("\"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        throw GraphError("each edge must be a pair of integers");
      }
      long long u = e[0].get<long long>(), v = e[1].get<long long>();
      if (!(0 <= u && u < v && v < n)) {
        throw GraphError("edge " + std::to_string(u) + " " +
                         std::to_string(v) + " violates 0 <= u < v < n");
      }
      Edge ed{static_cast<Vertex>(u), static_cast<Vertex>(v)};
      if (!seen.insert(ed).second) throw GraphError("repeated edge");
      edges.push_back(ed);
    }
  }
  return Graph::FromEdges(static_cast<int>(n), edges);
}

std::string FormatGraphJson(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  j["edges"] = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j.dump() + "\n";
}

Graph ParseGraph(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? ParseGraphJson(text) : ParseGraphText(text);
  }
  throw GraphError("empty graph input");
}

}  // namespace cbvpg
