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

#ifndef CBVPG_REPRESENTATION_H_
#define CBVPG_REPRESENTATION_H_

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "cbvpg/graph.h"

namespace cbvpg {

struct Point {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
  Point operator+(Point o) const { return {x + o.x, y + o.y}; }
  Point operator-(Point o) const { return {x - o.x, y - o.y}; }
  Point operator*(int f) const { return {x * f, y * f}; }
};

// Axis-parallel grid segment. Horizontal covers (x..x+len, y), vertical
// covers (x, y..y+len).
struct Segment {
  bool horizontal = true;
  int x = 0;
  int y = 0;
  int len = 1;

  static Segment Between(Point a, Point b);

  Point start() const { return {x, y}; }
  Point end() const { return horizontal ? Point{x + len, y} : Point{x, y + len}; }
  // Unit vector from start to end.
  Point direction() const { return horizontal ? Point{1, 0} : Point{0, 1}; }

  bool Contains(Point p) const;
  bool IsEndpoint(Point p) const { return p == start() || p == end(); }
  bool IsInterior(Point p) const { return Contains(p) && !IsEndpoint(p); }

  friend bool operator==(const Segment&, const Segment&) = default;
};

struct Representation {
  std::map<Vertex, Segment> segments;

  bool empty() const { return segments.empty(); }
  const Segment& at(Vertex v) const { return segments.at(v); }

  friend bool operator==(const Representation&, const Representation&) = default;
};

struct Box {
  int min_x = 0, min_y = 0, max_x = 0, max_y = 0;
};

// Bounding box; all zero when empty.
Box Extent(const Representation& rep);
Representation Translate(const Representation& rep, int dx, int dy);
Representation Scale(const Representation& rep, int factor);
// Translates so the minimum coordinates are zero.
Representation Normalize(const Representation& rep);

// How two segments meet.
enum class Meeting {
  kApart,     // no common point
  kContact,   // one common point, an endpoint of at least one of them
  kOverlap,   // collinear with a common stretch of positive length
  kCrossing,  // perpendicular, common point interior to both
};

struct SegmentMeeting {
  Meeting kind = Meeting::kApart;
  Point point;  // first common point unless kApart
};

SegmentMeeting Meet(const Segment& a, const Segment& b);

class RepresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"segments": [{"v": id, "dir": "H"|"V", "x": int, "y": int, "len": int}]}
std::string FormatRepresentationJson(const Representation& rep);
// Accepts the object above, or any object carrying it under
// "representation".
Representation ParseRepresentationJson(const std::string& text);

}  // namespace cbvpg

#endif  // CBVPG_REPRESENTATION_H_
