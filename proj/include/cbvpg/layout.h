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

// Construction of representations: the staircase layout of a hole with its
// attachments, K4 gadgets, reinsertion of pruned vertices, and SVG output.

#ifndef CBVPG_LAYOUT_H_
#define CBVPG_LAYOUT_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "cbvpg/decompose.h"
#include "cbvpg/orientation.h"
#include "cbvpg/representation.h"

namespace cbvpg {

class LayoutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultStride = 4;

// Representation of the structure graph, keyed by the ids in `hs`. The hole
// runs counter-clockwise round a staircase polygon whose sides have length
// `stride` (the bottom and left sides are longer). For odd holes the bottom
// is split at the first unoriented edge. An edge oriented into v gives v's
// segment a unit stub past the corner when v needs that end for a triangle.
// Throws LayoutError when `o` is not feasible for `hs`.
Representation BuildStaircase(const HoleStructure& hs, const Orientation& o,
                              int stride = kDefaultStride);

// Adds a K4 gadget at `p`, a free endpoint of `host`: one unit segment
// continuing the host and two perpendicular ones, all ending at p. Throws
// LayoutError when p is not an endpoint of host or is already in use.
Representation AttachK4(const Representation& rep, Vertex host, Point p,
                        const Triangle& triangle);

// Replays `log` backwards onto a representation of the pruned graph (same
// ids as the log). Degree-1 vertices go perpendicular to a free point of
// their neighbour, degree-2 vertices leave the contact point of their
// neighbours in a free direction. When no spot is free every coordinate is
// doubled first; `refinements` receives the number of doublings.
Representation ReinsertSimplicial(const Representation& rep,
                                  const RemovalLog& log,
                                  int* refinements = nullptr);

// Normalises each part and places them left to right, `gap` units apart.
// The parts must use disjoint vertex ids.
Representation PlaceSideBySide(const std::vector<Representation>& parts,
                               int gap = 2);

// SVG drawing: one line per segment, contact points marked, 10 px per unit,
// y axis pointing up.
std::string RenderSvg(const Representation& rep);

}  // namespace cbvpg

#endif  // CBVPG_LAYOUT_H_
