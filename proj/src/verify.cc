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

#include "cbvpg/verify.h"

#include <algorithm>

#include "json.hpp"

namespace cbvpg {

std::string_view ViolationName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kTrivialSegment:
      return "trivial-segment";
    case ViolationKind::kInteriorOverlap:
      return "interior-overlap";
    case ViolationKind::kMissingAdjacency:
      return "missing-adjacency";
    case ViolationKind::kExtraContact:
      return "extra-contact";
  }
  return "?";
}

std::vector<Violation> VerifyRepresentation(const Graph& g,
                                            const Representation& rep) {
  if (static_cast<int>(rep.segments.size()) != g.order() ||
      (!rep.empty() && (rep.segments.begin()->first != 0 ||
                        rep.segments.rbegin()->first != g.order() - 1))) {
    throw RepresentationError("representation covers " +
                              std::to_string(rep.segments.size()) +
                              " vertices, graph has " +
                              std::to_string(g.order()));
  }
  std::vector<Violation> out;
  std::vector<const Segment*> seg(g.order());
  for (const auto& [v, s] : rep.segments) seg[v] = &s;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (seg[v]->len < 1) {
      out.push_back({ViolationKind::kTrivialSegment, {v}, seg[v]->start()});
    }
  }
  std::vector<Violation> contacts;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      SegmentMeeting m = Meet(*seg[u], *seg[v]);
      if (m.kind == Meeting::kOverlap || m.kind == Meeting::kCrossing) {
        out.push_back({ViolationKind::kInteriorOverlap, {u, v}, m.point});
        continue;
      }
      bool touch = m.kind == Meeting::kContact;
      if (touch && !g.adjacent(u, v)) {
        contacts.push_back({ViolationKind::kExtraContact, {u, v}, m.point});
      } else if (!touch && g.adjacent(u, v)) {
        contacts.push_back(
            {ViolationKind::kMissingAdjacency, {u, v}, std::nullopt});
      }
    }
  }
  out.insert(out.end(), contacts.begin(), contacts.end());
  return out;
}

std::string FormatViolationsJson(const std::vector<Violation>& violations) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& v : violations) {
    nlohmann::json e{{"kind", ViolationName(v.kind)}, {"vertices", v.vertices}};
    if (v.point) e["point"] = {v.point->x, v.point->y};
    j.push_back(e);
  }
  return j.dump() + "\n";
}

int CountCorners(const Representation& rep, const std::vector<Vertex>& cycle) {
  const int k = static_cast<int>(cycle.size());
  if (k < 3) throw RepresentationError("a cycle needs at least three vertices");
  int corners = 0;
  for (int i = 0; i < k; ++i) {
    auto a = rep.segments.find(cycle[i]);
    auto b = rep.segments.find(cycle[(i + 1) % k]);
    if (a == rep.segments.end() || b == rep.segments.end()) {
      throw RepresentationError("cycle vertex without a segment");
    }
    if (Meet(a->second, b->second).kind != Meeting::kContact) {
      throw RepresentationError("consecutive cycle segments do not touch");
    }
    if (a->second.horizontal != b->second.horizontal) ++corners;
  }
  return corners;
}

std::pair<Graph, Representation> MergeCollinear(const Graph& g,
                                                const Representation& rep,
                                                Vertex v, Vertex w) {
  g.CheckVertex(v);
  g.CheckVertex(w);
  if (v == w || !g.adjacent(v, w)) {
    throw RepresentationError("merged vertices must be adjacent");
  }
  const Segment& a = rep.at(v);
  const Segment& b = rep.at(w);
  SegmentMeeting m = Meet(a, b);
  if (a.horizontal != b.horizontal || m.kind != Meeting::kContact) {
    throw RepresentationError("segments are not collinear and touching");
  }
  for (const auto& [x, s] : rep.segments) {
    if (x != v && x != w && s.IsInterior(m.point)) {
      throw RepresentationError("a third segment crosses the junction point");
    }
  }
  Point lo = std::min(a.start(), b.start());
  Point hi = std::max(a.end(), b.end());
  Representation out;
  for (const auto& [x, s] : rep.segments) {
    if (x == w) continue;
    out.segments.emplace(ContractedId(x, w), x == v ? Segment::Between(lo, hi) : s);
  }
  return {Contract(g, v, w), std::move(out)};
}

}  // namespace cbvpg
