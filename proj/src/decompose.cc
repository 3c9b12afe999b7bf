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

#include "cbvpg/decompose.h"

#include <algorithm>
#include <stdexcept>

namespace cbvpg {

PruneResult PruneSimplicial(const Graph& g) {
  const int n = g.order();
  std::vector<bool> alive(n, true);
  std::vector<int> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
  RemovalLog log;
  auto live_neighbors = [&](Vertex v) {
    std::vector<Vertex> out;
    for (Vertex u : g.neighbors(v)) {
      if (alive[u]) out.push_back(u);
    }
    return out;
  };
  bool removed = true;
  while (removed) {
    removed = false;
    for (Vertex v = 0; v < n; ++v) {
      if (!alive[v] || degree[v] > 2) continue;
      std::vector<Vertex> nb = live_neighbors(v);
      if (nb.size() == 2 && !g.adjacent(nb[0], nb[1])) continue;
      alive[v] = false;
      for (Vertex u : nb) --degree[u];
      log.push_back({v, nb});
      removed = true;
      break;
    }
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < n; ++v) {
    if (alive[v]) keep.push_back(v);
  }
  return {InducedSubgraph(g, keep), std::move(log)};
}

Graph ReplayRemovals(const Subgraph& core, const RemovalLog& log, int n) {
  GraphBuilder b(n);
  for (const auto& [u, v] : core.graph.edges()) {
    b.AddEdge(core.to_parent[u], core.to_parent[v]);
  }
  for (auto it = log.rbegin(); it != log.rend(); ++it) {
    for (Vertex u : it->neighbors) b.AddEdge(it->vertex, u);
  }
  return b.Build();
}

HolePattern HoleStructure::pattern() const {
  HolePattern p;
  for (const auto& t : triangles) p.triangles.push_back(static_cast<int>(t.size()));
  for (const auto& s : s_pairs) p.s_pair.push_back(!s.empty());
  return p;
}

HoleStructure StructureOfHoleGraph(const HolePattern& p) {
  const int k = p.length();
  HoleStructure hs;
  for (int i = 0; i < k; ++i) hs.hole.cycle.push_back(i);
  hs.triangles.resize(k);
  hs.s_pairs.resize(k);
  Vertex next = k;
  for (int i = 0; i < k; ++i) {
    for (int t = 0; t < p.triangles[i]; ++t, next += 3) {
      hs.triangles[i].push_back({next, next + 1, next + 2});
    }
  }
  for (int i = 0; i < k; ++i) {
    if (p.s_pair[i]) {
      hs.s_pairs[i] = {next, next + 1};
      next += 2;
    }
  }
  hs.types = PatternTypes(p);
  return hs;
}

VertexSet StructureVertices(const HoleStructure& hs) {
  std::vector<Vertex> out = hs.hole.cycle;
  for (const auto& ts : hs.triangles) {
    for (const auto& t : ts) out.insert(out.end(), t.begin(), t.end());
  }
  for (const auto& s : hs.s_pairs) out.insert(out.end(), s.begin(), s.end());
  return MakeVertexSet(std::move(out));
}

Graph StructureGraph(const HoleStructure& hs) {
  VertexSet all = StructureVertices(hs);
  GraphBuilder b(all.empty() ? 0 : all.back() + 1);
  const int k = hs.length();
  for (int i = 0; i < k; ++i) {
    Vertex v = hs.hole.at(i), w = hs.hole.at(i + 1);
    b.AddEdge(v, w);
    for (const auto& t : hs.triangles[i]) {
      for (int a = 0; a < 3; ++a) {
        b.AddEdge(v, t[a]);
        for (int c = a + 1; c < 3; ++c) b.AddEdge(t[a], t[c]);
      }
    }
    if (!hs.s_pairs[i].empty()) {
      const auto& s = hs.s_pairs[i];
      b.AddEdge(s[0], s[1]);
      for (Vertex x : s) {
        b.AddEdge(x, v);
        b.AddEdge(x, w);
      }
    }
  }
  return b.Build();
}

std::vector<VertexType> ClassifyTypes(const std::vector<int>& triangle_counts,
                                      const std::vector<int>& s_sizes) {
  const int k = static_cast<int>(triangle_counts.size());
  if (static_cast<int>(s_sizes.size()) != k) {
    throw std::logic_error("triangle and S-set lists differ in length");
  }
  std::vector<VertexType> types(k);
  for (int i = 0; i < k; ++i) {
    int before = s_sizes[(i + k - 1) % k], after = s_sizes[i];
    if ((before != 0 && before != 2) || (after != 0 && after != 2)) {
      throw std::logic_error("S-set size outside {0, 2}");
    }
    bool s = before == 2 || after == 2;
    switch (triangle_counts[i]) {
      case 0:
        types[i] = s ? VertexType::kType2 : VertexType::kType0;
        break;
      case 1:
        if (before == 2 && after == 2) {
          throw std::logic_error("triangle with S-sets on both sides");
        }
        types[i] = s ? VertexType::kType3 : VertexType::kType1;
        break;
      case 2:
        if (s) throw std::logic_error("two triangles next to an S-set");
        types[i] = VertexType::kType4;
        break;
      default:
        throw std::logic_error("more than two triangles at a hole vertex");
    }
  }
  return types;
}

Decomposition DecomposeAroundHole(const Graph& core, const Hole& hole) {
  if (!IsHole(core, hole.cycle)) {
    return StructureError{"the given cycle is not a hole of the core"};
  }
  if (auto d = FindDiamond(core)) {
    return Certificate{FamilyTag::kDiamond, *d, std::nullopt};
  }
  const int k = hole.length();
  const int n = core.order();
  std::vector<int> pos(n, -1);
  for (int i = 0; i < k; ++i) pos[hole.cycle[i]] = i;

  // Class of every non-hole vertex: i for U_i, k + i for S_i.
  std::vector<int> cls(n, -1);
  for (Vertex x = 0; x < n; ++x) {
    if (pos[x] != -1) continue;
    std::vector<int> on;
    for (Vertex u : core.neighbors(x)) {
      if (pos[u] != -1) on.push_back(pos[u]);
    }
    std::sort(on.begin(), on.end());
    if (on.size() == 1) {
      cls[x] = on[0];
    } else if (on.size() == 2 && on[1] == on[0] + 1) {
      cls[x] = k + on[0];
    } else if (on.size() == 2 && on[0] == 0 && on[1] == k - 1) {
      cls[x] = 2 * k - 1;
    } else {
      return StructureError{"vertex " + std::to_string(x) +
                            " sees the hole in " + std::to_string(on.size()) +
                            " non-consecutive or missing positions"};
    }
  }
  for (const auto& [u, v] : core.edges()) {
    if (pos[u] == -1 && pos[v] == -1 && cls[u] != cls[v]) {
      return StructureError{"vertices " + std::to_string(u) + " and " +
                            std::to_string(v) +
                            " join two different attachment sets"};
    }
  }
  std::vector<std::vector<Vertex>> members(2 * k);
  for (Vertex x = 0; x < n; ++x) {
    if (cls[x] != -1) members[cls[x]].push_back(x);
  }

  HoleStructure hs;
  hs.hole = hole;
  hs.triangles.resize(k);
  hs.s_pairs.resize(k);
  for (int i = 0; i < k; ++i) {
    const auto& s = members[k + i];
    if (!IsClique(core, s)) {
      return StructureError{"S-set " + std::to_string(i) + " is not a clique"};
    }
    if (s.size() >= 3) {
      return Certificate{FamilyTag::kK5,
                         MakeVertexSet({hole.at(i), hole.at(i + 1), s[0], s[1],
                                        s[2]}),
                         std::nullopt};
    }
    if (s.size() == 1) {
      return StructureError{"S-set " + std::to_string(i) +
                            " has a single vertex; prune the graph first"};
    }
    hs.s_pairs[i] = s;
  }
  for (int i = 0; i < k; ++i) {
    Subgraph u = InducedSubgraph(core, members[i]);
    for (const auto& comp : ConnectedComponents(u.graph)) {
      VertexSet clique = u.ToParent(comp);
      if (!IsClique(core, clique)) {
        return StructureError{"U-set " + std::to_string(i) +
                              " is not a union of cliques"};
      }
      if (clique.size() >= 4) {
        return Certificate{FamilyTag::kK5,
                           MakeVertexSet({hole.at(i), clique[0], clique[1],
                                          clique[2], clique[3]}),
                           std::nullopt};
      }
      if (clique.size() < 3) {
        return StructureError{"U-set " + std::to_string(i) +
                              " has a clique on fewer than three vertices; "
                              "prune the graph first"};
      }
      hs.triangles[i].push_back({clique[0], clique[1], clique[2]});
    }
  }
  for (int i = 0; i < k; ++i) {
    std::vector<Triangle> around = hs.triangles[i];
    const auto& before = hs.s_pairs[(i + k - 1) % k];
    const auto& after = hs.s_pairs[i];
    if (!before.empty()) around.push_back({before[0], before[1], hole.at(i - 1)});
    if (!after.empty()) around.push_back({after[0], after[1], hole.at(i + 1)});
    if (around.size() >= 3) {
      std::vector<Vertex> verts{hole.at(i)};
      for (int t = 0; t < 3; ++t) {
        verts.insert(verts.end(), around[t].begin(), around[t].end());
      }
      return Certificate{FamilyTag::kH0, MakeVertexSet(std::move(verts)),
                         std::nullopt};
    }
  }
  std::vector<int> counts, sizes;
  for (int i = 0; i < k; ++i) {
    counts.push_back(static_cast<int>(hs.triangles[i].size()));
    sizes.push_back(static_cast<int>(hs.s_pairs[i].size()));
  }
  hs.types = ClassifyTypes(counts, sizes);
  return hs;
}

}  // namespace cbvpg
