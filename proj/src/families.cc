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

#include "cbvpg/families.h"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <variant>

#include "cbvpg/chordality.h"

namespace cbvpg {

namespace {

constexpr std::array<std::pair<FamilyTag, std::string_view>, 8> kNames = {{
    {FamilyTag::kK5, "K5"},
    {FamilyTag::kDiamond, "K4-e"},
    {FamilyTag::kH0, "H0"},
    {FamilyTag::kF1, "F1"},
    {FamilyTag::kF2, "F2"},
    {FamilyTag::kF3, "F3"},
    {FamilyTag::kF4, "F4"},
    {FamilyTag::kF5, "F5"},
}};

void AddTriangleAt(GraphBuilder& b, Vertex host) {
  Vertex a = b.AddVertex(), c = b.AddVertex(), d = b.AddVertex();
  for (Vertex x : {a, c, d}) b.AddEdge(host, x);
  b.AddEdge(a, c);
  b.AddEdge(a, d);
  b.AddEdge(c, d);
}

}  // namespace

std::string_view FamilyName(FamilyTag tag) {
  for (const auto& [t, name] : kNames) {
    if (t == tag) return name;
  }
  return "?";
}

std::optional<FamilyTag> ParseFamilyName(std::string_view name) {
  for (const auto& [t, n] : kNames) {
    if (n == name) return t;
  }
  return std::nullopt;
}

int AttachmentLoad(const HolePattern& p, int i) {
  const int k = p.length();
  return p.triangles[i] + (p.s_pair[(i + k - 1) % k] ? 1 : 0) +
         (p.s_pair[i] ? 1 : 0);
}

bool RespectsBounds(const HolePattern& p) {
  if (p.length() < 4 || static_cast<int>(p.s_pair.size()) != p.length()) {
    return false;
  }
  for (int i = 0; i < p.length(); ++i) {
    if (p.triangles[i] < 0 || p.triangles[i] > 2) return false;
    if (AttachmentLoad(p, i) > 2) return false;
  }
  return true;
}

std::vector<VertexType> PatternTypes(const HolePattern& p) {
  const int k = p.length();
  std::vector<VertexType> types(k);
  for (int i = 0; i < k; ++i) {
    bool has_s = p.s_pair[i] || p.s_pair[(i + k - 1) % k];
    int t = p.triangles[i];
    if (t == 2) {
      types[i] = VertexType::kType4;
    } else if (t == 1) {
      types[i] = has_s ? VertexType::kType3 : VertexType::kType1;
    } else {
      types[i] = has_s ? VertexType::kType2 : VertexType::kType0;
    }
  }
  return types;
}

Graph MakeHoleGraph(const HolePattern& p) {
  const int k = p.length();
  if (k < 4 || static_cast<int>(p.s_pair.size()) != k) {
    throw std::invalid_argument("hole pattern needs k >= 4 and k S-flags");
  }
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i) b.AddEdge(i, (i + 1) % k);
  for (int i = 0; i < k; ++i) {
    if (p.triangles[i] < 0) throw std::invalid_argument("negative count");
    for (int t = 0; t < p.triangles[i]; ++t) AddTriangleAt(b, i);
  }
  for (int i = 0; i < k; ++i) {
    if (!p.s_pair[i]) continue;
    Vertex s = b.AddVertex(), s2 = b.AddVertex();
    for (Vertex x : {s, s2}) {
      b.AddEdge(x, i);
      b.AddEdge(x, (i + 1) % k);
    }
    b.AddEdge(s, s2);
  }
  return b.Build();
}

Graph MakeK5() {
  GraphBuilder b(5);
  for (Vertex u = 0; u < 5; ++u) {
    for (Vertex v = u + 1; v < 5; ++v) b.AddEdge(u, v);
  }
  return b.Build();
}

Graph MakeDiamond() {
  // 0 and 3 are the nonadjacent pair.
  GraphBuilder b(4);
  b.AddEdge(0, 1);
  b.AddEdge(0, 2);
  b.AddEdge(1, 2);
  b.AddEdge(1, 3);
  b.AddEdge(2, 3);
  return b.Build();
}

Graph MakeH0() {
  GraphBuilder b(1);
  for (int t = 0; t < 3; ++t) AddTriangleAt(b, 0);
  return b.Build();
}

Graph MakeTreeMember(const Graph& tree, const std::vector<int>& plan) {
  const int n = tree.order();
  if (n < 2) throw std::invalid_argument("tree must be nontrivial");
  if (tree.size() != n - 1 || ConnectedComponents(tree).size() != 1) {
    throw std::invalid_argument("not a tree");
  }
  if (static_cast<int>(plan.size()) != n) {
    throw std::invalid_argument("plan size differs from tree order");
  }
  for (Vertex v = 0; v < n; ++v) {
    int d = tree.degree(v);
    if (d > 3) throw std::invalid_argument("tree degree exceeds three");
    int want = d == 1 ? 2 : d == 2 ? 1 : 0;
    if (plan[v] != want) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " of degree " +
                                  std::to_string(d) + " needs " +
                                  std::to_string(want) + " triangles");
    }
  }
  GraphBuilder b(n);
  for (const auto& [u, v] : tree.edges()) b.AddEdge(u, v);
  for (Vertex v = 0; v < n; ++v) {
    for (int t = 0; t < plan[v]; ++t) AddTriangleAt(b, v);
  }
  return b.Build();
}

Graph MakeF1(int path_length) {
  if (path_length < 2) throw std::invalid_argument("F1 needs a path of >= 2");
  GraphBuilder t(path_length);
  for (int i = 0; i + 1 < path_length; ++i) t.AddEdge(i, i + 1);
  std::vector<int> plan(path_length, 1);
  plan.front() = plan.back() = 2;
  return MakeTreeMember(t.Build(), plan);
}

Graph MakeF2(int k) {
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("F2 needs even k >= 4");
  HolePattern p{std::vector<int>(k, 1), std::vector<bool>(k, false)};
  p.triangles[0] = 2;
  return MakeHoleGraph(p);
}

Graph MakeF3(int k) {
  if (k < 5 || k % 2 == 0) throw std::invalid_argument("F3 needs odd k >= 5");
  return MakeHoleGraph({std::vector<int>(k, 1), std::vector<bool>(k, false)});
}

Graph MakeF5(int k) {
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("F5 needs even k >= 4");
  HolePattern p{std::vector<int>(k, 1), std::vector<bool>(k, false)};
  p.s_pair[0] = true;
  return MakeHoleGraph(p);
}

int F4Spec::length() const {
  int k = static_cast<int>(gaps.size());
  for (const auto& g : gaps) k += static_cast<int>(g.size());
  return k;
}

void ValidateF4Spec(const F4Spec& spec) {
  if (spec.gaps.empty()) {
    throw std::invalid_argument("F4 needs at least one Type-4 vertex");
  }
  for (const auto& gap : spec.gaps) {
    if (std::count(gap.begin(), gap.end(), GapType::kType0) != 1) {
      throw std::invalid_argument("each F4 gap needs exactly one Type-0 vertex");
    }
  }
  if (spec.length() % 2 == 0) throw std::invalid_argument("F4 hole must be odd");
  if (spec.length() < 5) throw std::invalid_argument("F4 hole too short");
}

HolePattern F4Pattern(const F4Spec& spec) {
  ValidateF4Spec(spec);
  HolePattern p;
  for (const auto& gap : spec.gaps) {
    p.triangles.push_back(2);
    for (GapType t : gap) p.triangles.push_back(t == GapType::kType1 ? 1 : 0);
  }
  p.s_pair.assign(p.triangles.size(), false);
  return p;
}

Graph MakeF4(const F4Spec& spec) { return MakeHoleGraph(F4Pattern(spec)); }

std::optional<VertexSet> FindK5(const Graph& g) {
  for (const auto& [u, v] : g.edges()) {
    std::vector<Vertex> common;
    for (Vertex w : g.neighbors(u)) {
      if (w > v && g.adjacent(w, v)) common.push_back(w);
    }
    for (size_t a = 0; a < common.size(); ++a) {
      for (size_t b = a + 1; b < common.size(); ++b) {
        if (!g.adjacent(common[a], common[b])) continue;
        for (size_t c = b + 1; c < common.size(); ++c) {
          if (g.adjacent(common[a], common[c]) &&
              g.adjacent(common[b], common[c])) {
            return VertexSet{u, v, common[a], common[b], common[c]};
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<VertexSet> FindDiamond(const Graph& g) {
  for (const auto& [u, v] : g.edges()) {
    std::vector<Vertex> common;
    for (Vertex w : g.neighbors(u)) {
      if (g.adjacent(w, v)) common.push_back(w);
    }
    for (size_t a = 0; a < common.size(); ++a) {
      for (size_t b = a + 1; b < common.size(); ++b) {
        if (!g.adjacent(common[a], common[b])) {
          return MakeVertexSet({u, v, common[a], common[b]});
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<VertexSet> FindH0(const Graph& g) {
  using Triangle = std::array<Vertex, 3>;
  for (Vertex c = 0; c < g.order(); ++c) {
    auto nb = g.neighbors(c);
    std::vector<Triangle> tris;
    for (size_t a = 0; a < nb.size(); ++a) {
      for (size_t b = a + 1; b < nb.size(); ++b) {
        if (!g.adjacent(nb[a], nb[b])) continue;
        for (size_t d = b + 1; d < nb.size(); ++d) {
          if (g.adjacent(nb[a], nb[d]) && g.adjacent(nb[b], nb[d])) {
            tris.push_back({nb[a], nb[b], nb[d]});
          }
        }
      }
    }
    auto apart = [&](const Triangle& x, const Triangle& y) {
      for (Vertex p : x) {
        for (Vertex q : y) {
          if (p == q || g.adjacent(p, q)) return false;
        }
      }
      return true;
    };
    for (size_t i = 0; i < tris.size(); ++i) {
      for (size_t j = i + 1; j < tris.size(); ++j) {
        if (!apart(tris[i], tris[j])) continue;
        for (size_t l = j + 1; l < tris.size(); ++l) {
          if (apart(tris[i], tris[l]) && apart(tris[j], tris[l])) {
            std::vector<Vertex> out{c};
            for (const auto* t : {&tris[i], &tris[j], &tris[l]}) {
              out.insert(out.end(), t->begin(), t->end());
            }
            return MakeVertexSet(std::move(out));
          }
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

// Biconnected components as vertex sets, plus the block of every edge.
struct Blocks {
  std::vector<VertexSet> members;
  std::map<Edge, int> of_edge;

  int Of(Vertex u, Vertex v) const {
    return of_edge.at(u < v ? Edge{u, v} : Edge{v, u});
  }
};

Blocks ComputeBlocks(const Graph& g) {
  const int n = g.order();
  Blocks out;
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> stack;
  int timer = 0;
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
    disc[u] = low[u] = timer++;
    for (Vertex v : g.neighbors(u)) {
      if (v == parent) continue;
      if (disc[v] == -1) {
        stack.emplace_back(u, v);
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          int id = static_cast<int>(out.members.size());
          std::vector<Vertex> verts;
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            verts.push_back(e.first);
            verts.push_back(e.second);
            out.of_edge[{std::min(e.first, e.second),
                         std::max(e.first, e.second)}] = id;
            if (e == Edge{u, v}) break;
          }
          out.members.push_back(MakeVertexSet(std::move(verts)));
        }
      } else if (disc[v] < disc[u]) {
        stack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    if (disc[s] == -1) dfs(s, -1);
  }
  return out;
}

}  // namespace

std::optional<Certificate> FindF1Chordal(const Graph& g) {
  Blocks blocks = ComputeBlocks(g);
  std::vector<std::vector<int>> k4_at(g.order());
  for (int b = 0; b < static_cast<int>(blocks.members.size()); ++b) {
    const VertexSet& m = blocks.members[b];
    if (!IsClique(g, m) || m.size() > 4) {
      throw std::invalid_argument(
          "FindF1Chordal requires a chordal {K5, K4-e}-free graph");
    }
    if (m.size() == 4) {
      for (Vertex v : m) k4_at[v].push_back(b);
    }
  }
  auto spare = [&](Vertex v, std::initializer_list<int> used) {
    std::vector<int> free;
    for (int b : k4_at[v]) {
      if (std::find(used.begin(), used.end(), b) == used.end()) {
        free.push_back(b);
      }
    }
    return free;
  };

  const int n = g.order();
  for (Vertex a = 0; a < n; ++a) {
    if (k4_at[a].size() < 2) continue;
    std::vector<Vertex> parent(n, -1);
    std::vector<Vertex> queue{a};
    parent[a] = a;
    for (size_t h = 0; h < queue.size(); ++h) {
      for (Vertex y : g.neighbors(queue[h])) {
        if (parent[y] == -1) {
          parent[y] = queue[h];
          queue.push_back(y);
        }
      }
    }
    for (Vertex b = a + 1; b < n; ++b) {
      if (parent[b] == -1 || k4_at[b].size() < 2) continue;
      std::vector<Vertex> path;
      for (Vertex x = b; x != a; x = parent[x]) path.push_back(x);
      path.push_back(a);
      std::reverse(path.begin(), path.end());
      const int len = static_cast<int>(path.size());
      std::vector<std::vector<int>> pick(len);
      bool ok = true;
      for (int i = 0; i < len && ok; ++i) {
        int prev = i > 0 ? blocks.Of(path[i - 1], path[i]) : -1;
        int next = i + 1 < len ? blocks.Of(path[i], path[i + 1]) : -1;
        std::vector<int> free = spare(path[i], {prev, next});
        size_t need = (i == 0 || i == len - 1) ? 2 : 1;
        if (free.size() < need) {
          ok = false;
        } else {
          free.resize(need);
          pick[i] = free;
        }
      }
      if (!ok) continue;
      std::vector<Vertex> verts(path.begin(), path.end());
      for (int i = 0; i < len; ++i) {
        for (int blk : pick[i]) {
          for (Vertex x : blocks.members[blk]) verts.push_back(x);
        }
      }
      return Certificate{FamilyTag::kF1, MakeVertexSet(std::move(verts)),
                         std::nullopt};
    }
  }
  return std::nullopt;
}

namespace {

std::string CheckComplete(const Graph& h, int n) {
  if (h.order() != n) return "expected " + std::to_string(n) + " vertices";
  if (h.size() != n * (n - 1) / 2) return "not a complete graph";
  return "";
}

std::string CheckH0(const Graph& h) {
  if (h.order() != 10 || h.size() != 18) {
    return "H0 has 10 vertices and 18 edges";
  }
  for (Vertex c = 0; c < 10; ++c) {
    if (h.degree(c) != 9) continue;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < 10; ++v) {
      if (v != c) rest.push_back(v);
    }
    Subgraph s = InducedSubgraph(h, rest);
    auto comps = ConnectedComponents(s.graph);
    bool ok = comps.size() == 3;
    for (const auto& comp : comps) {
      ok = ok && comp.size() == 3 && IsClique(s.graph, comp);
    }
    if (ok) return "";
  }
  return "no vertex complete to three anticomplete triangles";
}

std::string CheckF1(const Graph& h) {
  std::vector<Vertex> path_vs, tri_vs;
  for (Vertex v = 0; v < h.order(); ++v) {
    (h.degree(v) >= 4 ? path_vs : tri_vs).push_back(v);
  }
  const int k = static_cast<int>(path_vs.size());
  if (k < 2) return "F1 needs a path on at least two vertices";
  if (h.order() != 4 * k + 6 || h.size() != 7 * k + 11) {
    return "vertex/edge counts do not match an F1 member";
  }
  Subgraph p = InducedSubgraph(h, path_vs);
  if (p.graph.size() != k - 1 || ConnectedComponents(p.graph).size() != 1) {
    return "high-degree vertices do not induce a path";
  }
  for (Vertex v = 0; v < k; ++v) {
    if (p.graph.degree(v) > 2) return "high-degree vertices do not induce a path";
  }
  Subgraph t = InducedSubgraph(h, tri_vs);
  std::vector<int> hung(k, 0);
  for (const auto& comp : ConnectedComponents(t.graph)) {
    if (comp.size() != 3 || !IsClique(t.graph, comp)) {
      return "attachments are not disjoint triangles";
    }
    std::vector<Vertex> hosts;
    for (Vertex x : comp) {
      for (Vertex y : h.neighbors(t.to_parent[x])) {
        if (p.from_parent[y] != -1) hosts.push_back(y);
      }
    }
    if (hosts.size() != 3 || hosts[0] != hosts[1] || hosts[1] != hosts[2]) {
      return "a triangle is not complete to exactly one path vertex";
    }
    ++hung[p.from_parent[hosts[0]]];
  }
  for (Vertex v = 0; v < k; ++v) {
    int want = p.graph.degree(v) == 1 ? 2 : 1;
    if (hung[v] != want) return "wrong number of triangles on a path vertex";
  }
  return "";
}

// Hole plus attachments read back from an induced subgraph.
struct ReadStructure {
  std::vector<Vertex> hole;  // ids in h, cyclic order
  HolePattern pattern;
};

std::variant<ReadStructure, std::string> ReadHole(
    const Graph& h, const std::optional<std::vector<Vertex>>& hint_in_h) {
  std::vector<Vertex> core;
  for (Vertex v = 0; v < h.order(); ++v) {
    if (!IsSimplicial(h, v)) core.push_back(v);
  }
  if (core.size() < 4) return std::string("no hole among non-simplicial vertices");
  for (Vertex v : core) {
    int d = 0;
    for (Vertex u : h.neighbors(v)) {
      if (std::binary_search(core.begin(), core.end(), u)) ++d;
    }
    if (d != 2) return std::string("non-simplicial vertices do not form a cycle");
  }
  ReadStructure out;
  out.hole.push_back(core.front());
  Vertex prev = -1, cur = core.front();
  while (true) {
    Vertex next = -1;
    for (Vertex u : h.neighbors(cur)) {
      if (u != prev && std::binary_search(core.begin(), core.end(), u)) {
        next = u;
        break;
      }
    }
    if (next == core.front()) break;
    out.hole.push_back(next);
    prev = cur;
    cur = next;
  }
  if (out.hole.size() != core.size() || !IsHole(h, out.hole)) {
    return std::string("non-simplicial vertices do not form a single hole");
  }
  if (hint_in_h && MakeVertexSet(*hint_in_h) != core) {
    return std::string("claimed hole differs from the witness's hole");
  }
  const int k = static_cast<int>(out.hole.size());
  std::vector<int> pos(h.order(), -1);
  for (int i = 0; i < k; ++i) pos[out.hole[i]] = i;
  // class id: i for U_i, k + i for S_i.
  std::vector<int> cls(h.order(), -1);
  for (Vertex x = 0; x < h.order(); ++x) {
    if (pos[x] != -1) continue;
    std::vector<int> on;
    for (Vertex u : h.neighbors(x)) {
      if (pos[u] != -1) on.push_back(pos[u]);
    }
    std::sort(on.begin(), on.end());
    if (on.size() == 1) {
      cls[x] = on[0];
    } else if (on.size() == 2 && on[1] == on[0] + 1) {
      cls[x] = k + on[0];
    } else if (on.size() == 2 && on[0] == 0 && on[1] == k - 1) {
      cls[x] = k + k - 1;
    } else {
      return std::string("an attachment sees the hole in a forbidden pattern");
    }
  }
  for (const auto& [u, v] : h.edges()) {
    if (pos[u] == -1 && pos[v] == -1 && cls[u] != cls[v]) {
      return std::string("attachment classes are not anticomplete");
    }
  }
  out.pattern.triangles.assign(k, 0);
  out.pattern.s_pair.assign(k, false);
  for (int c = 0; c < 2 * k; ++c) {
    std::vector<Vertex> members;
    for (Vertex x = 0; x < h.order(); ++x) {
      if (cls[x] == c) members.push_back(x);
    }
    if (members.empty()) continue;
    Subgraph s = InducedSubgraph(h, members);
    if (c >= k) {
      if (members.size() != 2 || s.graph.size() != 1) {
        return std::string("an S-set is not an adjacent pair");
      }
      out.pattern.s_pair[c - k] = true;
      continue;
    }
    for (const auto& comp : ConnectedComponents(s.graph)) {
      if (comp.size() != 3 || !IsClique(s.graph, comp)) {
        return std::string("a U-set is not a union of triangles");
      }
      ++out.pattern.triangles[c];
    }
  }
  if (!RespectsBounds(out.pattern)) {
    return std::string("attachments exceed what a hole vertex type allows");
  }
  return out;
}

std::string CheckHoleFamily(const Graph& h, FamilyTag family,
                            const std::optional<std::vector<Vertex>>& hint) {
  auto read = ReadHole(h, hint);
  if (auto* err = std::get_if<std::string>(&read)) return *err;
  const ReadStructure& rs = std::get<ReadStructure>(read);
  const int k = static_cast<int>(rs.hole.size());
  std::vector<VertexType> types = PatternTypes(rs.pattern);
  auto count = [&](VertexType t) {
    return static_cast<int>(std::count(types.begin(), types.end(), t));
  };
  const bool odd = k % 2 == 1;
  switch (family) {
    case FamilyTag::kF2:
      if (odd) return "F2 needs an even hole";
      if (count(VertexType::kType4) != 1 || count(VertexType::kType1) != k - 1) {
        return "F2 needs one Type-4 vertex and the rest Type 1";
      }
      return "";
    case FamilyTag::kF3:
      if (!odd) return "F3 needs an odd hole";
      if (count(VertexType::kType1) != k) return "F3 needs every vertex Type 1";
      return "";
    case FamilyTag::kF4: {
      if (!odd) return "F4 needs an odd hole";
      if (count(VertexType::kType4) == 0) return "F4 needs a Type-4 vertex";
      if (count(VertexType::kType2) + count(VertexType::kType3) != 0) {
        return "F4 admits no Type-2 or Type-3 vertex";
      }
      for (int i = 0; i < k; ++i) {
        if (types[i] != VertexType::kType4) continue;
        int zeros = 0;
        for (int j = 1; j < k; ++j) {
          VertexType t = types[(i + j) % k];
          if (t == VertexType::kType4) break;
          if (t == VertexType::kType0) ++zeros;
        }
        if (zeros != 1) {
          return "F4 needs exactly one Type-0 vertex between consecutive "
                 "Type-4 vertices";
        }
      }
      return "";
    }
    case FamilyTag::kF5: {
      if (odd) return "F5 needs an even hole";
      int pairs = static_cast<int>(std::count(rs.pattern.s_pair.begin(),
                                              rs.pattern.s_pair.end(), true));
      if (pairs != 1 || count(VertexType::kType3) != 2 ||
          count(VertexType::kType1) != k - 2) {
        return "F5 needs two Type-3 vertices sharing one S-pair, the rest "
               "Type 1";
      }
      return "";
    }
    default:
      return "not a hole family";
  }
}

}  // namespace

std::string ExplainCertificate(const Graph& g, const Certificate& c) {
  if (c.vertices.empty()) return "empty vertex set";
  for (Vertex v : c.vertices) {
    if (!g.contains(v)) return "vertex " + std::to_string(v) + " out of range";
  }
  if (MakeVertexSet(c.vertices).size() != c.vertices.size()) {
    return "repeated vertex";
  }
  Subgraph s = InducedSubgraph(g, c.vertices);
  const Graph& h = s.graph;
  std::optional<std::vector<Vertex>> hint;
  if (c.hole) {
    std::vector<Vertex> in_h;
    for (Vertex v : *c.hole) {
      if (!g.contains(v) || s.from_parent[v] == -1) {
        return "hole vertex outside the witness";
      }
      in_h.push_back(s.from_parent[v]);
    }
    if (!IsHole(h, in_h)) return "claimed hole is not a hole";
    hint = in_h;
  }
  switch (c.family) {
    case FamilyTag::kK5:
      return CheckComplete(h, 5);
    case FamilyTag::kDiamond:
      if (h.order() != 4 || h.size() != 5) return "K4-e has 4 vertices, 5 edges";
      return "";
    case FamilyTag::kH0:
      return CheckH0(h);
    case FamilyTag::kF1:
      return CheckF1(h);
    default:
      return CheckHoleFamily(h, c.family, hint);
  }
}

bool CheckCertificate(const Graph& g, const Certificate& c) {
  return ExplainCertificate(g, c).empty();
}

}  // namespace cbvpg
