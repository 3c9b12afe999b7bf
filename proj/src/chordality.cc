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

#include "cbvpg/chordality.h"

#include <algorithm>

namespace cbvpg {

bool IsHole(const Graph& g, const std::vector<Vertex>& cycle) {
  const int k = static_cast<int>(cycle.size());
  if (k < 4) return false;
  for (Vertex v : cycle) {
    if (!g.contains(v)) return false;
  }
  if (MakeVertexSet(cycle).size() != cycle.size()) return false;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

std::vector<Vertex> EliminationOrder(const Graph& g) {
  const int n = g.order();
  std::vector<int> weight(n, 0);
  std::vector<bool> visited(n, false);
  std::vector<Vertex> visit;
  visit.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!visited[v] && (best == -1 || weight[v] > weight[best])) best = v;
    }
    visited[best] = true;
    visit.push_back(best);
    for (Vertex u : g.neighbors(best)) {
      if (!visited[u]) ++weight[u];
    }
  }
  std::reverse(visit.begin(), visit.end());
  return visit;
}

namespace {

struct Witness {
  Vertex center, a, b;
};

// First vertex (in elimination order) whose later neighbours are not a
// clique, with a nonadjacent pair of them.
std::optional<Witness> FindPeoViolation(const Graph& g) {
  std::vector<Vertex> order = EliminationOrder(g);
  std::vector<int> pos(g.order());
  for (int i = 0; i < g.order(); ++i) pos[order[i]] = i;
  for (Vertex v : order) {
    std::vector<Vertex> later;
    for (Vertex u : g.neighbors(v)) {
      if (pos[u] > pos[v]) later.push_back(u);
    }
    for (size_t i = 0; i < later.size(); ++i) {
      for (size_t j = i + 1; j < later.size(); ++j) {
        if (!g.adjacent(later[i], later[j])) {
          return Witness{v, later[i], later[j]};
        }
      }
    }
  }
  return std::nullopt;
}

// Shortest a-b path avoiding N[center] \ {a, b}; closed with center it is a
// hole.
std::optional<Hole> HoleThrough(const Graph& g, Vertex center, Vertex a,
                                Vertex b) {
  const int n = g.order();
  std::vector<bool> blocked(n, false);
  blocked[center] = true;
  for (Vertex u : g.neighbors(center)) blocked[u] = true;
  blocked[a] = blocked[b] = false;
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> queue{a};
  parent[a] = a;
  for (size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    if (x == b) break;
    for (Vertex y : g.neighbors(x)) {
      if (blocked[y] || parent[y] != -1) continue;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  if (parent[b] == -1) return std::nullopt;
  Hole h;
  h.cycle.push_back(center);
  std::vector<Vertex> path;
  for (Vertex x = b; x != a; x = parent[x]) path.push_back(x);
  path.push_back(a);
  std::reverse(path.begin(), path.end());
  h.cycle.insert(h.cycle.end(), path.begin(), path.end());
  return h;
}

}  // namespace

bool IsChordal(const Graph& g) { return !FindPeoViolation(g).has_value(); }

std::optional<Hole> FindHole(const Graph& g) {
  auto witness = FindPeoViolation(g);
  if (!witness) return std::nullopt;
  if (auto h = HoleThrough(g, witness->center, witness->a, witness->b)) {
    return h;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    auto nb = g.neighbors(v);
    for (size_t i = 0; i < nb.size(); ++i) {
      for (size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        if (auto h = HoleThrough(g, v, nb[i], nb[j])) return h;
      }
    }
  }
  // Unreachable: a non-chordal graph has a hole through some vertex.
  throw GraphError("internal: PEO violation without a hole");
}

}  // namespace cbvpg
