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

#include "cbvpg/representation.h"

#include <algorithm>
#include <climits>
#include <cstdlib>

#include "json.hpp"

namespace cbvpg {

Segment Segment::Between(Point a, Point b) {
  if (a.x != b.x && a.y != b.y) {
    throw RepresentationError("points are not axis-aligned");
  }
  if (a == b) throw RepresentationError("degenerate segment");
  Point lo = std::min(a, b);
  bool h = a.y == b.y;
  return {h, lo.x, lo.y, h ? std::abs(a.x - b.x) : std::abs(a.y - b.y)};
}

bool Segment::Contains(Point p) const {
  if (horizontal) return p.y == y && x <= p.x && p.x <= x + len;
  return p.x == x && y <= p.y && p.y <= y + len;
}

Box Extent(const Representation& rep) {
  if (rep.empty()) return {};
  Box b{INT_MAX, INT_MAX, INT_MIN, INT_MIN};
  for (const auto& [v, s] : rep.segments) {
    b.min_x = std::min(b.min_x, s.x);
    b.min_y = std::min(b.min_y, s.y);
    b.max_x = std::max(b.max_x, s.end().x);
    b.max_y = std::max(b.max_y, s.end().y);
  }
  return b;
}

Representation Translate(const Representation& rep, int dx, int dy) {
  Representation out;
  for (auto [v, s] : rep.segments) {
    s.x += dx;
    s.y += dy;
    out.segments.emplace(v, s);
  }
  return out;
}

Representation Scale(const Representation& rep, int factor) {
  Representation out;
  for (auto [v, s] : rep.segments) {
    s.x *= factor;
    s.y *= factor;
    s.len *= factor;
    out.segments.emplace(v, s);
  }
  return out;
}

Representation Normalize(const Representation& rep) {
  Box b = Extent(rep);
  return Translate(rep, -b.min_x, -b.min_y);
}

SegmentMeeting Meet(const Segment& a, const Segment& b) {
  if (a.horizontal == b.horizontal) {
    bool same_line = a.horizontal ? a.y == b.y : a.x == b.x;
    if (!same_line) return {};
    int a0 = a.horizontal ? a.x : a.y, b0 = a.horizontal ? b.x : b.y;
    int lo = std::max(a0, b0);
    int hi = std::min(a0 + a.len, b0 + b.len);
    if (lo > hi) return {};
    Point p = a.horizontal ? Point{lo, a.y} : Point{a.x, lo};
    return {lo == hi ? Meeting::kContact : Meeting::kOverlap, p};
  }
  const Segment& h = a.horizontal ? a : b;
  const Segment& v = a.horizontal ? b : a;
  Point p{v.x, h.y};
  if (!h.Contains(p) || !v.Contains(p)) return {};
  if (h.IsInterior(p) && v.IsInterior(p)) return {Meeting::kCrossing, p};
  return {Meeting::kContact, p};
}

std::string FormatRepresentationJson(const Representation& rep) {
  nlohmann::json j;
  j["segments"] = nlohmann::json::array();
  for (const auto& [v, s] : rep.segments) {
    j["segments"].push_back({{"v", v},
                             {"dir", s.horizontal ? "H" : "V"},
                             {"x", s.x},
                             {"y", s.y},
                             {"len", s.len}});
  }
  return j.dump() + "\n";
}

Representation ParseRepresentationJson(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw RepresentationError(std::string("malformed representation JSON: ") +
                              e.what());
  }
  if (j.is_object() && !j.contains("segments") && j.contains("representation")) {
    j = j["representation"];
  }
  if (!j.is_object() || !j.contains("segments") || !j["segments"].is_array()) {
    throw RepresentationError("representation JSON needs a \"segments\" array");
  }
  Representation rep;
  for (const auto& s : j["segments"]) {
    auto need_int = [&](const char* key) {
      if (!s.is_object() || !s.contains(key) || !s[key].is_number_integer()) {
        throw RepresentationError(std::string("segment needs integer \"") +
                                  key + "\"");
      }
      return s[key].get<int>();
    };
    Vertex v = need_int("v");
    if (!s.contains("dir") || !s["dir"].is_string() ||
        (s["dir"] != "H" && s["dir"] != "V")) {
      throw RepresentationError("segment \"dir\" must be \"H\" or \"V\"");
    }
    Segment seg{s["dir"] == "H", need_int("x"), need_int("y"), need_int("len")};
    if (!rep.segments.emplace(v, seg).second) {
      throw RepresentationError("vertex " + std::to_string(v) +
                                " has two segments");
    }
  }
  return rep;
}

}  // namespace cbvpg
