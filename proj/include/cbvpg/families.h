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

// Forbidden induced subgraphs for contact B0-VPG graphs within circular-arc
// graphs: generators, detectors for the fixed patterns, and a validator that
// re-derives each family's defining structure from a claimed witness.

#ifndef CBVPG_FAMILIES_H_
#define CBVPG_FAMILIES_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cbvpg/graph.h"

namespace cbvpg {

enum class FamilyTag { kK5, kDiamond, kH0, kF1, kF2, kF3, kF4, kF5 };

std::string_view FamilyName(FamilyTag tag);
std::optional<FamilyTag> ParseFamilyName(std::string_view name);

struct Certificate {
  FamilyTag family = FamilyTag::kK5;
  VertexSet vertices;
  // Cyclic order of the hole, for hole-based families.
  std::optional<std::vector<Vertex>> hole;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Classification of a hole vertex by what hangs off it: Type 0 nothing,
// Type 1 one triangle, Type 2 an S-pair but no triangle, Type 3 a triangle
// and an S-pair, Type 4 two triangles.
enum class VertexType { kType0 = 0, kType1, kType2, kType3, kType4 };

// Attachments around a hole v_0 .. v_{k-1}: `triangles[i]` private triangles
// at v_i, `s_pair[i]` whether v_i v_{i+1} carries a shared adjacent pair.
struct HolePattern {
  std::vector<int> triangles;
  std::vector<bool> s_pair;

  int length() const { return static_cast<int>(triangles.size()); }
  friend bool operator==(const HolePattern&, const HolePattern&) = default;
};

// Number of triangle-like attachments at v_i (private triangles plus
// S-pairs on either side); more than two means an H0 centred at v_i.
int AttachmentLoad(const HolePattern& p, int i);
// True when every vertex carries at most two attachments and no triangle
// count exceeds two.
bool RespectsBounds(const HolePattern& p);
// Types of a bound-respecting pattern.
std::vector<VertexType> PatternTypes(const HolePattern& p);

// Graph of a hole with its attachments. Hole vertices are 0..k-1; then, in
// index order, the triangles at each v_i, then the S-pairs of each edge.
Graph MakeHoleGraph(const HolePattern& p);

Graph MakeK5();
Graph MakeDiamond();
// One vertex (0) complete to three pairwise anticomplete triangles.
Graph MakeH0();

// Member of the tree family: `tree` is a tree of maximum degree 3 and
// `plan[v]` the triangles hanging at tree vertex v (2 at leaves, 1 at
// degree-2 vertices, 0 at degree-3 vertices). Tree vertices keep their ids.
Graph MakeTreeMember(const Graph& tree, const std::vector<int>& plan);

// F1 member whose tree is a path on `path_length` >= 2 vertices.
Graph MakeF1(int path_length);
// Even hole, v_0 of Type 4, the rest Type 1.
Graph MakeF2(int k);
// Odd hole, every vertex Type 1.
Graph MakeF3(int k);
// Even hole, v_0 and v_1 of Type 3 sharing one S-pair, the rest Type 1.
Graph MakeF5(int k);

enum class GapType { kType0, kType1 };

// F4 parameters: one Type-4 vertex before each gap; each gap lists the
// vertices up to the next Type-4 vertex and holds exactly one Type 0.
struct F4Spec {
  std::vector<std::vector<GapType>> gaps;

  int length() const;
};

void ValidateF4Spec(const F4Spec& spec);
HolePattern F4Pattern(const F4Spec& spec);
Graph MakeF4(const F4Spec& spec);

std::optional<VertexSet> FindK5(const Graph& g);
std::optional<VertexSet> FindDiamond(const Graph& g);
std::optional<VertexSet> FindH0(const Graph& g);

// Requires g chordal, K5-free and diamond-free (every block is then a clique
// on at most four vertices). Returns an induced F1 member if there is one.
std::optional<Certificate> FindF1Chordal(const Graph& g);

// True iff c.vertices induces a member of c.family in g.
bool CheckCertificate(const Graph& g, const Certificate& c);

// Human-readable reason CheckCertificate rejected; empty when accepted.
std::string ExplainCertificate(const Graph& g, const Certificate& c);

}  // namespace cbvpg

#endif  // CBVPG_FAMILIES_H_
