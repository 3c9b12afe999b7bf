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

#ifndef CBVPG_CHORDALITY_H_
#define CBVPG_CHORDALITY_H_

#include <optional>
#include <vector>

#include "cbvpg/graph.h"

namespace cbvpg {

// Chordless cycle v_0 ... v_{k-1}, k >= 4. Indices wrap around.
struct Hole {
  std::vector<Vertex> cycle;

  int length() const { return static_cast<int>(cycle.size()); }
  Vertex at(int i) const {
    int k = length();
    return cycle[((i % k) + k) % k];
  }
  bool odd() const { return length() % 2 == 1; }
};

// True iff `cycle` is a hole of g.
bool IsHole(const Graph& g, const std::vector<Vertex>& cycle);

// Maximum cardinality search; returns a perfect elimination ordering when g
// is chordal (vertices in elimination order).
std::vector<Vertex> EliminationOrder(const Graph& g);

bool IsChordal(const Graph& g);

// Some hole of g, or nullopt when g is chordal. Deterministic.
std::optional<Hole> FindHole(const Graph& g);

}  // namespace cbvpg

#endif  // CBVPG_CHORDALITY_H_
