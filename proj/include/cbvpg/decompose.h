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

#ifndef CBVPG_DECOMPOSE_H_
#define CBVPG_DECOMPOSE_H_

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "cbvpg/chordality.h"
#include "cbvpg/families.h"
#include "cbvpg/graph.h"

namespace cbvpg {

// A simplicial vertex of degree <= 2 and its neighbours at removal time.
struct RemovalEntry {
  Vertex vertex;
  std::vector<Vertex> neighbors;

  friend bool operator==(const RemovalEntry&, const RemovalEntry&) = default;
};

// Removal order, in ids of the pruned graph.
using RemovalLog = std::vector<RemovalEntry>;

struct PruneResult {
  Subgraph core;
  RemovalLog log;
};

// Repeatedly removes the smallest simplicial vertex of degree <= 2.
PruneResult PruneSimplicial(const Graph& g);

// Rebuilds the pruned graph (order n) from its core and removal log.
Graph ReplayRemovals(const Subgraph& core, const RemovalLog& log, int n);

using Triangle = std::array<Vertex, 3>;

// The partition of a core graph around one of its holes. Index i refers to
// hole vertex v_i; s_pairs[i] hangs on the edge v_i v_{i+1}.
struct HoleStructure {
  Hole hole;
  std::vector<std::vector<Triangle>> triangles;
  std::vector<std::vector<Vertex>> s_pairs;
  std::vector<VertexType> types;

  int length() const { return hole.length(); }
  HolePattern pattern() const;
};

// Rebuilds a structure from a hole graph produced by MakeHoleGraph.
HoleStructure StructureOfHoleGraph(const HolePattern& p);

// Every vertex named by the structure.
VertexSet StructureVertices(const HoleStructure& hs);

// The graph a structure describes, on ids 0..max id (unnamed ids isolated).
Graph StructureGraph(const HoleStructure& hs);

struct StructureError {
  std::string reason;
};

using Decomposition = std::variant<HoleStructure, Certificate, StructureError>;

// Partitions the core around `hole`. Certificates are K4-e, K5 or H0, in ids
// of `core`. StructureError means the input is not a circular-arc graph of
// the expected shape.
Decomposition DecomposeAroundHole(const Graph& core, const Hole& hole);

// Types from triangle counts and S-set sizes (s_sizes[i] on v_i v_{i+1}).
// Throws std::logic_error for a combination outside Types 0-4.
std::vector<VertexType> ClassifyTypes(const std::vector<int>& triangle_counts,
                                      const std::vector<int>& s_sizes);

}  // namespace cbvpg

#endif  // CBVPG_DECOMPOSE_H_
