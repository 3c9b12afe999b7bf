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

#ifndef CBVPG_VERIFY_H_
#define CBVPG_VERIFY_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cbvpg/graph.h"
#include "cbvpg/representation.h"

namespace cbvpg {

enum class ViolationKind {
  kTrivialSegment,
  kInteriorOverlap,
  kMissingAdjacency,
  kExtraContact,
};

std::string_view ViolationName(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<Vertex> vertices;
  std::optional<Point> point;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// Empty iff `rep` is a contact B0-VPG representation of `g`. Throws
// RepresentationError when the vertex sets differ.
std::vector<Violation> VerifyRepresentation(const Graph& g,
                                            const Representation& rep);

std::string FormatViolationsJson(const std::vector<Violation>& violations);

// Consecutive pairs of `cycle` (cyclically) whose segments differ in
// direction. Throws RepresentationError if consecutive segments do not touch.
int CountCorners(const Representation& rep, const std::vector<Vertex>& cycle);

// Replaces the touching collinear segments of adjacent v and w by their
// union and contracts w into v. Throws RepresentationError when the
// segments are not collinear and touching, or when a third segment passes
// through the junction point with that point in its interior.
std::pair<Graph, Representation> MergeCollinear(const Graph& g,
                                                const Representation& rep,
                                                Vertex v, Vertex w);

}  // namespace cbvpg

#endif  // CBVPG_VERIFY_H_
