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

#include "cbvpg/oracle.h"

#include <algorithm>
#include <vector>

namespace cbvpg {

namespace {

enum Relation : std::uint8_t { kApart = 0, kTouch = 1, kClash = 2 };

class Search {
 public:
  Search(const Graph& g, const OracleBounds& b) : g_(g), b_(b) {
    for (int dir = 0; dir < 2; ++dir) {
      for (int x = 0; x < b.width; ++x) {
        for (int y = 0; y < b.height; ++y) {
          for (int len = 1; len <= b.max_len; ++len) {
            Segment s{dir == 0, x, y, len};
            Point e = s.end();
            if (e.x < b.width && e.y < b.height) placements_.push_back(s);
          }
        }
      }
    }
    const size_t p = placements_.size();
    relation_.assign(p * p, kApart);
    touching_.resize(p);
    for (size_t i = 0; i < p; ++i) {
      for (size_t j = 0; j < p; ++j) {
        if (i == j) {
          relation_[i * p + j] = kClash;
          continue;
        }
        Meeting m = Meet(placements_[i], placements_[j]).kind;
        Relation r = m == Meeting::kApart     ? kApart
                     : m == Meeting::kContact ? kTouch
                                              : kClash;
        relation_[i * p + j] = r;
        if (r == kTouch) touching_[i].push_back(static_cast<int>(j));
      }
    }
  }

  std::optional<Representation> Run(const std::vector<Vertex>& vertices,
                                    OracleStats* stats) {
    order_ = Order(vertices);
    chosen_.assign(g_.order(), -1);
    nodes_ = 0;
    bool found = Place(0);
    if (stats) stats->nodes += nodes_;
    if (!found) return std::nullopt;
    Representation rep;
    for (Vertex v : order_) rep.segments.emplace(v, placements_[chosen_[v]]);
    return rep;
  }

 private:
  // Most already-ordered neighbours first, then degree, then id; each vertex
  // after a component's first has an earlier neighbour.
  std::vector<Vertex> Order(const std::vector<Vertex>& vertices) const {
    std::vector<Vertex> order;
    std::vector<int> seen(g_.order(), 0);
    std::vector<bool> in(g_.order(), false), want(g_.order(), false);
    for (Vertex v : vertices) want[v] = true;
    for (size_t step = 0; step < vertices.size(); ++step) {
      Vertex best = -1;
      for (Vertex v : vertices) {
        if (in[v]) continue;
        if (best == -1 || seen[v] > seen[best] ||
            (seen[v] == seen[best] && g_.degree(v) > g_.degree(best))) {
          best = v;
        }
      }
      in[best] = true;
      order.push_back(best);
      for (Vertex u : g_.neighbors(best)) {
        if (want[u]) ++seen[u];
      }
    }
    return order;
  }

  bool Consistent(Vertex v, int p, size_t depth) const {
    const size_t n = placements_.size();
    for (size_t i = 0; i < depth; ++i) {
      Vertex u = order_[i];
      Relation r = static_cast<Relation>(relation_[p * n + chosen_[u]]);
      if (r == kClash) return false;
      if ((r == kTouch) != g_.adjacent(u, v)) return false;
    }
    return true;
  }

  bool Try(Vertex v, int p, size_t depth) {
    ++nodes_;
    if (!Consistent(v, p, depth)) return false;
    chosen_[v] = p;
    if (Place(depth + 1)) return true;
    chosen_[v] = -1;
    return false;
  }

  bool Place(size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    Vertex anchor = -1;
    for (size_t i = 0; i < depth; ++i) {
      if (g_.adjacent(order_[i], v)) {
        anchor = order_[i];
        break;
      }
    }
    if (anchor != -1) {
      for (int p : touching_[chosen_[anchor]]) {
        if (Try(v, p, depth)) return true;
      }
      return false;
    }
    for (int p = 0; p < static_cast<int>(placements_.size()); ++p) {
      if (depth == 0 && !Canonical(placements_[p])) continue;
      if (Try(v, p, depth)) return true;
    }
    return false;
  }

  // The very first segment can be reflected into the lower-left quadrant
  // and, on a square grid, rotated to horizontal.
  bool Canonical(const Segment& s) const {
    if (b_.width == b_.height && !s.horizontal) return false;
    return s.x <= (b_.width - 1) / 2 && s.y <= (b_.height - 1) / 2;
  }

  const Graph& g_;
  OracleBounds b_;
  std::vector<Segment> placements_;
  std::vector<std::uint8_t> relation_;
  std::vector<std::vector<int>> touching_;
  std::vector<Vertex> order_;
  std::vector<int> chosen_;
  std::int64_t nodes_ = 0;
};

}  // namespace

std::optional<Representation> BruteForceSearch(const Graph& g,
                                               const OracleBounds& bounds,
                                               OracleStats* stats) {
  if (bounds.width < 1 || bounds.height < 1 || bounds.max_len < 1) {
    throw OracleError("oracle bounds must be at least 1");
  }
  if (g.order() > bounds.max_vertices) {
    throw OracleError("graph has " + std::to_string(g.order()) +
                      " vertices; the oracle cap is " +
                      std::to_string(bounds.max_vertices));
  }
  Search search(g, bounds);
  // Components first: one that cannot be placed alone ends the search.
  auto comps = ConnectedComponents(g);
  if (comps.size() > 1) {
    for (const auto& comp : comps) {
      if (!search.Run(comp, stats)) return std::nullopt;
    }
  }
  std::vector<Vertex> all(g.order());
  for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
  return search.Run(all, stats);
}

}  // namespace cbvpg
