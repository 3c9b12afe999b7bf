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

#include "cbvpg/layout.h"

#include <algorithm>
#include <array>
#include <climits>
#include <cstdlib>
#include <set>
#include <sstream>

namespace cbvpg {

namespace {

constexpr std::array<Point, 4> kDirections{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};

// Longest segment handed to a reinserted vertex.
constexpr int kNewLength = 16;
// Refuse to grow coordinates past this.
constexpr int kCoordinateLimit = 1 << 28;

Point Unit(Point from, Point to) {
  return {(to.x > from.x) - (to.x < from.x), (to.y > from.y) - (to.y < from.y)};
}

Point Perp(Point d) { return {-d.y, d.x}; }

bool Occupied(const Representation& rep, Point p, Vertex skip = -1) {
  for (const auto& [v, s] : rep.segments) {
    if (v != skip && s.Contains(p)) return true;
  }
  return false;
}

void Put(Representation& rep, Vertex v, const Segment& s) {
  if (!rep.segments.emplace(v, s).second) {
    throw LayoutError("vertex " + std::to_string(v) + " placed twice");
  }
}

void AttachK4InPlace(Representation& rep, Vertex host, Point p,
                     const Triangle& tri) {
  const Segment& h = rep.at(host);
  if (!h.IsEndpoint(p)) {
    throw LayoutError("K4 point is not an endpoint of the host segment");
  }
  if (Occupied(rep, p, host)) throw LayoutError("K4 point already taken");
  Point out = p == h.end() ? h.direction() : h.direction() * -1;
  std::array<Point, 3> dirs{out, Perp(out), Perp(out) * -1};
  for (Point d : dirs) {
    if (Occupied(rep, p + d)) throw LayoutError("K4 arm blocked");
  }
  for (int i = 0; i < 3; ++i) Put(rep, tri[i], Segment::Between(p, p + dirs[i]));
}

// Staircase corners; side t runs from corner t to corner t+1.
std::vector<Point> StaircaseCorners(int k, int s) {
  std::vector<Point> pts{{0, 0}};
  int m, w;
  if (k % 2 == 0) {
    m = (k - 4) / 2;
    w = (m + 1) * s;
  } else {
    m = (k - 5) / 2;
    w = (m + 2) * s;
    pts.push_back({s, 0});
  }
  pts.push_back({w, 0});
  for (int i = 1; i <= m; ++i) {
    pts.push_back({w - (i - 1) * s, i * s});
    pts.push_back({w - i * s, i * s});
  }
  pts.push_back({w - m * s, (m + 1) * s});
  pts.push_back({0, (m + 1) * s});
  return pts;
}

// Smallest t >= 1 with p + t*d on some segment, or INT_MAX.
int Clearance(const Representation& rep, Point p, Point d) {
  int best = INT_MAX;
  for (const auto& [v, s] : rep.segments) {
    bool along = s.horizontal == (d.y == 0);
    if (along) {
      bool same_line = s.horizontal ? s.y == p.y : s.x == p.x;
      if (!same_line) continue;
      int a = s.horizontal ? s.x - p.x : s.y - p.y;
      int b = a + s.len;
      int sign = s.horizontal ? d.x : d.y;
      int lo = sign > 0 ? a : -b, hi = sign > 0 ? b : -a;
      if (hi >= 1) best = std::min(best, std::max(lo, 1));
    } else {
      Point q = s.horizontal ? Point{p.x, s.y} : Point{s.x, p.y};
      if (!s.Contains(q)) continue;
      int t = d.x != 0 ? (q.x - p.x) * d.x : (q.y - p.y) * d.y;
      if (t >= 1) best = std::min(best, t);
    }
  }
  return best;
}

// Segment from p in direction d as long as possible up to kNewLength
// without meeting anything; none if the first step is blocked.
std::optional<Segment> Ray(const Representation& rep, Point p, Point d) {
  int c = Clearance(rep, p, d);
  if (c < 2) return std::nullopt;
  int len = std::min(c - 1, kNewLength);
  return Segment::Between(p, p + d * len);
}

// Keeps the longest candidate; ties go to the first.
void Consider(std::optional<Segment>& best, std::optional<Segment> s) {
  if (s && (!best || s->len > best->len)) best = s;
}

std::optional<Segment> PlacePendant(const Representation& rep, Vertex a) {
  const Segment& h = rep.at(a);
  const int lo = h.horizontal ? h.x : h.y;
  auto at = [&](int c) { return h.horizontal ? Point{c, h.y} : Point{h.x, c}; };
  std::set<int> used;
  for (const auto& [v, s] : rep.segments) {
    if (v == a) continue;
    SegmentMeeting m = Meet(h, s);
    if (m.kind != Meeting::kApart) used.insert(h.horizontal ? m.point.x : m.point.y);
  }
  // Maximal runs of free coordinates, longest first.
  std::vector<std::pair<int, int>> runs;
  for (int c = lo; c <= lo + h.len;) {
    if (used.count(c)) {
      ++c;
      continue;
    }
    int start = c;
    while (c <= lo + h.len && !used.count(c)) ++c;
    runs.push_back({start, c - 1});
  }
  std::stable_sort(runs.begin(), runs.end(), [](auto x, auto y) {
    return x.second - x.first > y.second - y.first;
  });
  Point n = Perp(h.direction());
  for (const auto& [first, last] : runs) {
    Point p = at((first + last) / 2);
    std::optional<Segment> best;
    Consider(best, Ray(rep, p, n));
    Consider(best, Ray(rep, p, n * -1));
    if (best) return best;
  }
  return std::nullopt;
}

std::optional<Segment> PlaceWedge(const Representation& rep, Vertex a,
                                  Vertex b) {
  const Segment& sa = rep.at(a);
  const Segment& sb = rep.at(b);
  SegmentMeeting m = Meet(sa, sb);
  if (m.kind != Meeting::kContact) {
    throw LayoutError("neighbours of a degree-2 vertex do not touch");
  }
  for (const auto& [v, s] : rep.segments) {
    if (v != a && v != b && s.Contains(m.point)) {
      throw LayoutError("three segments meet at a degree-2 insertion point");
    }
  }
  std::optional<Segment> best;
  for (Point d : kDirections) {
    Point q = m.point + d;
    if (sa.Contains(q) || sb.Contains(q)) continue;
    Consider(best, Ray(rep, m.point, d));
  }
  return best;
}

}  // namespace

Representation AttachK4(const Representation& rep, Vertex host, Point p,
                        const Triangle& triangle) {
  Representation out = rep;
  AttachK4InPlace(out, host, p, triangle);
  return out;
}

Representation BuildStaircase(const HoleStructure& hs, const Orientation& o,
                              int stride) {
  const int k = hs.length();
  if (static_cast<int>(o.size()) != k) {
    throw LayoutError("orientation length differs from the hole");
  }
  if (!IsFeasible(hs, o)) throw LayoutError("orientation is not feasible");
  if (stride < 4) throw LayoutError("stride must be at least 4");
  auto idx = [k](int i) { return ((i % k) + k) % k; };
  int base = 0;
  if (k % 2 == 1) {
    base = static_cast<int>(std::find(o.begin(), o.end(),
                                      EdgeOrientation::kUnoriented) -
                            o.begin());
  }
  const std::vector<Point> pts = StaircaseCorners(k, stride);
  Representation rep;
  std::vector<std::pair<Vertex, Point>> k4_points;
  std::vector<Triangle> k4_triangles;
  for (int t = 0; t < k; ++t) {
    const int i = idx(base + t);
    Point p = pts[t], q = pts[(t + 1) % k];
    Point d = Unit(p, q);
    bool in_start = o[idx(i - 1)] == EdgeOrientation::kForward;
    bool in_end = o[i] == EdgeOrientation::kBackward;
    const auto& tris = hs.triangles[i];
    size_t used = 0;
    if (in_start && used < tris.size()) {
      p = p - d;
      k4_points.push_back({hs.hole.at(i), p});
      k4_triangles.push_back(tris[used++]);
    }
    if (in_end && used < tris.size()) {
      q = q + d;
      k4_points.push_back({hs.hole.at(i), q});
      k4_triangles.push_back(tris[used++]);
    }
    if (used < tris.size()) {
      throw LayoutError("hole vertex has more triangles than incoming edges");
    }
    Put(rep, hs.hole.at(i), Segment::Between(p, q));
  }
  for (size_t j = 0; j < k4_points.size(); ++j) {
    AttachK4InPlace(rep, k4_points[j].first, k4_points[j].second,
                    k4_triangles[j]);
  }
  for (int t = 0; t < k; ++t) {
    const int e = idx(base + t);
    if (hs.s_pairs[e].empty()) continue;
    Point c = pts[(t + 1) % k];
    Point d_in = Unit(pts[t], c);
    Point d_out = Unit(c, pts[(t + 2) % k]);
    std::array<Point, 2> dirs{d_in, d_out * -1};
    if (d_in == d_out) dirs = {Perp(d_in), Perp(d_in) * -1};
    for (int j = 0; j < 2; ++j) {
      if (Occupied(rep, c + dirs[j])) throw LayoutError("S-pair arm blocked");
      Put(rep, hs.s_pairs[e][j], Segment::Between(c, c + dirs[j]));
    }
  }
  return Normalize(rep);
}

Representation ReinsertSimplicial(const Representation& rep,
                                  const RemovalLog& log, int* refinements) {
  Representation out = rep;
  int doublings = 0;
  for (auto it = log.rbegin(); it != log.rend(); ++it) {
    const RemovalEntry& e = *it;
    for (Vertex u : e.neighbors) {
      if (!out.segments.count(u)) {
        throw LayoutError("neighbour " + std::to_string(u) + " not placed");
      }
    }
    std::optional<Segment> s;
    for (int attempt = 0; attempt < 4 && !s; ++attempt) {
      if (attempt > 0) {
        Box b = Extent(out);
        if (std::max({std::abs(b.min_x), std::abs(b.min_y), std::abs(b.max_x),
                      std::abs(b.max_y)}) > kCoordinateLimit / 2) {
          throw LayoutError("coordinates grew too large during reinsertion");
        }
        out = Scale(out, 2);
        ++doublings;
      }
      if (e.neighbors.empty()) {
        Box b = Extent(out);
        int x = out.empty() ? 0 : b.max_x + 2;
        s = Segment{true, x, b.min_y, kNewLength};
      } else if (e.neighbors.size() == 1) {
        s = PlacePendant(out, e.neighbors[0]);
      } else if (e.neighbors.size() == 2) {
        s = PlaceWedge(out, e.neighbors[0], e.neighbors[1]);
      } else {
        throw LayoutError("removal entry with more than two neighbours");
      }
    }
    if (!s) throw LayoutError("no free spot for vertex " + std::to_string(e.vertex));
    Put(out, e.vertex, *s);
  }
  if (refinements) *refinements = doublings;
  return out;
}

Representation PlaceSideBySide(const std::vector<Representation>& parts,
                               int gap) {
  Representation out;
  int x = 0;
  for (const auto& part : parts) {
    if (part.empty()) continue;
    Representation moved = Normalize(part);
    Box b = Extent(moved);
    for (const auto& [v, s] : Translate(moved, x, 0).segments) Put(out, v, s);
    x += b.max_x + gap;
  }
  return out;
}

std::string RenderSvg(const Representation& rep) {
  constexpr int kUnit = 10, kMargin = 10;
  Box b = Extent(rep);
  const int width = (b.max_x - b.min_x) * kUnit + 2 * kMargin;
  const int height = (b.max_y - b.min_y) * kUnit + 2 * kMargin;
  auto px = [&](Point p) {
    return std::pair{kMargin + (p.x - b.min_x) * kUnit,
                     kMargin + (b.max_y - p.y) * kUnit};
  };
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n";
  svg << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\""
      << height << "\" fill=\"white\" stroke=\"#bbbbbb\"/>\n";
  for (const auto& [v, s] : rep.segments) {
    auto [x1, y1] = px(s.start());
    auto [x2, y2] = px(s.end());
    svg << "  <line data-v=\"" << v << "\" x1=\"" << x1 << "\" y1=\"" << y1
        << "\" x2=\"" << x2 << "\" y2=\"" << y2
        << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  std::set<Point> contacts;
  for (auto i = rep.segments.begin(); i != rep.segments.end(); ++i) {
    for (auto j = std::next(i); j != rep.segments.end(); ++j) {
      SegmentMeeting m = Meet(i->second, j->second);
      if (m.kind == Meeting::kContact) contacts.insert(m.point);
    }
  }
  for (Point p : contacts) {
    auto [cx, cy] = px(p);
    svg << "  <circle cx=\"" << cx << "\" cy=\"" << cy
        << "\" r=\"3\" fill=\"#d62728\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace cbvpg
