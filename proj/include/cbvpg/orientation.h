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

// Partial orientations of a hole and the search for a feasible one.
//
// Edge i joins v_i and v_{i+1}. kForward means v_i -> v_{i+1}, i.e. the edge
// is "oriented into" v_{i+1}; geometrically the contact lies on an endpoint
// of v_i's segment and an interior point of v_{i+1}'s segment.

#ifndef CBVPG_ORIENTATION_H_
#define CBVPG_ORIENTATION_H_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cbvpg/decompose.h"
#include "cbvpg/families.h"

namespace cbvpg {

enum class EdgeOrientation { kForward, kBackward, kUnoriented };

using Orientation = std::vector<EdgeOrientation>;

// Result of checking the six feasibility conditions. `condition` is 0 when
// feasible, otherwise the first violated condition (2..6); `index` is the
// hole index the violation was found at (-1 for condition 6).
struct FeasibilityReport {
  int condition = 0;
  int index = -1;

  bool feasible() const { return condition == 0; }
};

// Throws std::invalid_argument when the lengths differ.
FeasibilityReport CheckFeasible(const HoleStructure& hs, const Orientation& o);
bool IsFeasible(const HoleStructure& hs, const Orientation& o);

// A hole structure with no feasible orientation in which no member of
// F1-F5 could be found either.
struct Obstruction {
  std::string reason;
  VertexSet vertices;
};

// Which stage produced the answer.
enum class OrientationSource {
  kProofCase,        // the four-case procedure, result validated
  kExactSearch,      // cycle dynamic programme over the six conditions
  kCertificateSearch // exhaustive certificate search over the hole
};

struct OrientationResult {
  std::variant<Orientation, Certificate, Obstruction> value;
  OrientationSource source = OrientationSource::kProofCase;
  int proof_case = 0;  // 1..4

  const Orientation* orientation() const { return std::get_if<Orientation>(&value); }
  const Certificate* certificate() const { return std::get_if<Certificate>(&value); }
  const Obstruction* obstruction() const { return std::get_if<Obstruction>(&value); }
};

// Certificates are in the ids used by `hs`.
OrientationResult FindFeasibleOrientation(const HoleStructure& hs);

// The four-case procedure alone, unvalidated. Exposed for tests.
std::variant<Orientation, Certificate> ProofProcedure(const HoleStructure& hs,
                                                      int* proof_case = nullptr);

// Smallest feasible orientation in lexicographic order (kForward <
// kBackward < kUnoriented), or none. Linear in the hole length.
std::optional<Orientation> ExactOrientation(const HoleStructure& hs);

// Searches every member of F1-F5 the structure can contain. The hole is the
// only hole of the structure graph, so this search is complete.
std::optional<Certificate> SearchHoleCertificate(const HoleStructure& hs);

std::string OrientationString(const Orientation& o);

}  // namespace cbvpg

#endif  // CBVPG_ORIENTATION_H_
