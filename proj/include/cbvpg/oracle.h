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

// Exhaustive placement search for tiny graphs. A negative answer only says
// that no representation fits the given bounds.

#ifndef CBVPG_ORACLE_H_
#define CBVPG_ORACLE_H_

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "cbvpg/graph.h"
#include "cbvpg/representation.h"

namespace cbvpg {

struct OracleBounds {
  int width = 10;    // grid points 0..width-1
  int height = 10;   // grid points 0..height-1
  int max_len = 9;
  int max_vertices = 5;
};

struct OracleStats {
  std::int64_t nodes = 0;  // partial placements tried
};

class OracleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A representation inside the bounds, or none when the search is exhausted.
// Placements are tried in a fixed order, so the answer is deterministic.
// Throws OracleError when the graph exceeds max_vertices or a bound is < 1.
std::optional<Representation> BruteForceSearch(const Graph& g,
                                               const OracleBounds& bounds,
                                               OracleStats* stats = nullptr);

}  // namespace cbvpg

#endif  // CBVPG_ORACLE_H_
