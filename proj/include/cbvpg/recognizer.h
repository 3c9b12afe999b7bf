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

// Decision procedure for circular-arc inputs. The circular-arc promise is
// not checked: inputs that break the hole structure are reported out of
// scope, and chordal inputs outside the class may be accepted wrongly.

#ifndef CBVPG_RECOGNIZER_H_
#define CBVPG_RECOGNIZER_H_

#include <optional>
#include <string>
#include <vector>

#include "cbvpg/chordality.h"
#include "cbvpg/families.h"
#include "cbvpg/graph.h"
#include "cbvpg/orientation.h"
#include "cbvpg/representation.h"

namespace cbvpg {

enum class Decision { kRepresentable, kNotRepresentable, kOutOfScope };
enum class Branch { kChordal, kNonChordal };

std::string_view DecisionName(Decision d);
std::string_view BranchName(Branch b);

// All ids are those of the input graph.
struct ComponentResult {
  VertexSet vertices;
  Decision decision = Decision::kRepresentable;
  Branch branch = Branch::kChordal;
  std::optional<Certificate> certificate;
  std::optional<Obstruction> obstruction;
  std::optional<Representation> representation;
  // Why the representation is absent, or why the input is out of scope.
  std::string note;

  // Non-chordal components that reached the orientation stage.
  std::optional<Hole> hole;
  std::vector<VertexType> types;
  std::optional<Orientation> orientation;
  int refinements = 0;
};

struct RecognitionResult {
  Decision decision = Decision::kRepresentable;
  Branch branch = Branch::kChordal;
  std::optional<Certificate> certificate;
  std::optional<Obstruction> obstruction;
  std::optional<Representation> representation;
  std::string note;
  std::vector<ComponentResult> components;
};

struct RecognizerOptions {
  // Chordal components up to this size get a representation from the oracle.
  int oracle_cap = 5;
};

RecognitionResult Recognize(const Graph& g, const RecognizerOptions& opts = {});

std::string FormatResultJson(const RecognitionResult& r);
// A few human-readable lines.
std::string FormatResultText(const RecognitionResult& r);

}  // namespace cbvpg

#endif  // CBVPG_RECOGNIZER_H_
