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

#include "cbvpg/orientation.h"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace cbvpg {

namespace {

using EO = EdgeOrientation;
constexpr EO kF = EO::kForward;
constexpr EO kB = EO::kBackward;
constexpr EO kU = EO::kUnoriented;

// Cyclic views of a structure.
class View {
 public:
  explicit View(const HoleStructure& hs) : hs_(hs), k_(hs.length()) {}

  int k() const { return k_; }
  int idx(int i) const { return ((i % k_) + k_) % k_; }
  VertexType type(int i) const { return hs_.types[idx(i)]; }
  bool s(int i) const { return !hs_.s_pairs[idx(i)].empty(); }
  int tri(int i) const {
    return static_cast<int>(hs_.triangles[idx(i)].size());
  }

  // Condition 2 for edge i.
  bool EdgeOk(int i, EO e) const { return !s(i) || e == kU; }

  // Conditions 3-5 at v_i, given edge i-1 (`in`) and edge i (`out`).
  bool VertexOk(int i, EO in, EO out) const {
    switch (type(i)) {
      case VertexType::kType4:
        return in == kF && out == kB;
      case VertexType::kType3:
        if (s(i) && in != kF) return false;
        if (s(i - 1) && out != kB) return false;
        return true;
      case VertexType::kType1:
        return in == kF || out == kB;
      default:
        return true;
    }
  }

 private:
  const HoleStructure& hs_;
  int k_;
};

// Hole plus the first keep_tri[i] triangles at each v_i and the S-pairs
// flagged in keep_s.
Certificate Pick(const HoleStructure& hs, FamilyTag tag,
                 const std::vector<int>& keep_tri,
                 const std::vector<bool>& keep_s) {
  std::vector<Vertex> vs = hs.hole.cycle;
  for (int i = 0; i < hs.length(); ++i) {
    for (int t = 0; t < keep_tri[i]; ++t) {
      const Triangle& tr = hs.triangles[i][t];
      vs.insert(vs.end(), tr.begin(), tr.end());
    }
    if (keep_s[i]) {
      vs.insert(vs.end(), hs.s_pairs[i].begin(), hs.s_pairs[i].end());
    }
  }
  return {tag, MakeVertexSet(std::move(vs)), hs.hole.cycle};
}

Certificate Whole(const HoleStructure& hs, FamilyTag tag) {
  return {tag, StructureVertices(hs), hs.hole.cycle};
}

Certificate OneTriangleEach(const HoleStructure& hs) {
  const int k = hs.length();
  return Pick(hs, FamilyTag::kF3, std::vector<int>(k, 1),
              std::vector<bool>(k, false));
}

// F1 member on the hole path v_start .. v_{start+len-1}. Each end takes two
// triangles among its private ones and "its outer S-pair plus the outer hole
// neighbour"; inner vertices take one private triangle. Returns the first
// combination that validates against `g`.
std::optional<Certificate> BuildF1(const HoleStructure& hs, const Graph& g,
                                   int start, int len) {
  View w(hs);
  const int k = w.k();
  if (len < 2 || len > k - 1) return std::nullopt;
  std::vector<Vertex> base;
  for (int j = 0; j < len; ++j) base.push_back(hs.hole.at(start + j));
  for (int j = 1; j + 1 < len; ++j) {
    if (w.tri(start + j) < 1) return std::nullopt;
    const Triangle& t = hs.triangles[w.idx(start + j)][0];
    base.insert(base.end(), t.begin(), t.end());
  }
  auto options = [&](int end, int outer_edge, int outer_vertex) {
    std::vector<Triangle> out = hs.triangles[w.idx(end)];
    if (w.s(outer_edge)) {
      const auto& s = hs.s_pairs[w.idx(outer_edge)];
      out.push_back({s[0], s[1], hs.hole.at(outer_vertex)});
    }
    return out;
  };
  const int last = start + len - 1;
  std::vector<Triangle> left = options(start, start - 1, start - 1);
  std::vector<Triangle> right = options(last, last, last + 1);
  for (size_t a = 0; a < left.size(); ++a) {
    for (size_t b = a + 1; b < left.size(); ++b) {
      for (size_t c = 0; c < right.size(); ++c) {
        for (size_t d = c + 1; d < right.size(); ++d) {
          std::vector<Vertex> vs = base;
          for (const Triangle* t : {&left[a], &left[b], &right[c], &right[d]}) {
            vs.insert(vs.end(), t->begin(), t->end());
          }
          VertexSet set = MakeVertexSet(vs);
          if (set.size() != vs.size()) continue;
          Certificate cert{FamilyTag::kF1, std::move(set), std::nullopt};
          if (CheckCertificate(g, cert)) return cert;
        }
      }
    }
  }
  return std::nullopt;
}

// F1 candidate for the proof procedure; an empty (invalid) certificate when
// the path carries none.
Certificate F1Candidate(const HoleStructure& hs, int start, int len) {
  if (auto c = BuildF1(hs, StructureGraph(hs), start, len)) return *c;
  return {FamilyTag::kF1, {}, std::nullopt};
}

// F4 choice by cyclic DP: targets 0 / 1 / 4 per vertex, at least one 4 and
// exactly one 0 between consecutive 4s.
std::optional<std::vector<int>> F4Targets(const View& w) {
  const int k = w.k();
  if (k % 2 == 0) return std::nullopt;
  for (int f = 0; f < k; ++f) {
    if (w.tri(f) < 2) continue;
    // ok[j][z]: positions f+j .. f+k-1 can be completed with `z` zeros seen
    // since the last 4.
    std::vector<std::array<bool, 2>> ok(k + 1);
    ok[k] = {false, true};
    for (int j = k - 1; j >= 1; --j) {
      int c = w.tri(f + j);
      for (int z = 0; z < 2; ++z) {
        bool r = false;
        if (z == 0) r = r || ok[j + 1][1];
        if (c >= 1) r = r || ok[j + 1][z];
        if (c >= 2 && z == 1) r = r || ok[j + 1][0];
        ok[j][z] = r;
      }
    }
    if (!ok[1][0]) continue;
    std::vector<int> target(k, 0);
    target[f] = 4;
    int z = 0;
    for (int j = 1; j < k; ++j) {
      int i = w.idx(f + j), c = w.tri(f + j);
      if (c >= 1 && ok[j + 1][z]) {
        target[i] = 1;
      } else if (c >= 2 && z == 1 && ok[j + 1][0]) {
        target[i] = 4;
        z = 0;
      } else {
        target[i] = 0;
        z = 1;
      }
    }
    return target;
  }
  return std::nullopt;
}

}  // namespace

FeasibilityReport CheckFeasible(const HoleStructure& hs, const Orientation& o) {
  View w(hs);
  const int k = w.k();
  if (static_cast<int>(o.size()) != k) {
    throw std::invalid_argument("orientation length differs from the hole");
  }
  auto e = [&](int i) { return o[w.idx(i)]; };
  for (int i = 0; i < k; ++i) {
    if (!w.EdgeOk(i, e(i))) return {2, i};
  }
  for (int i = 0; i < k; ++i) {
    if (w.type(i) == VertexType::kType4 && !w.VertexOk(i, e(i - 1), e(i))) {
      return {3, i};
    }
  }
  for (int i = 0; i < k; ++i) {
    if (w.type(i) == VertexType::kType3 && !w.VertexOk(i, e(i - 1), e(i))) {
      return {4, i};
    }
  }
  for (int i = 0; i < k; ++i) {
    if (w.type(i) == VertexType::kType1 && !w.VertexOk(i, e(i - 1), e(i))) {
      return {5, i};
    }
  }
  if (k % 2 == 1 && std::find(o.begin(), o.end(), kU) == o.end()) {
    return {6, -1};
  }
  return {};
}

bool IsFeasible(const HoleStructure& hs, const Orientation& o) {
  return CheckFeasible(hs, o).feasible();
}

std::optional<Orientation> ExactOrientation(const HoleStructure& hs) {
  View w(hs);
  const int k = w.k();
  const bool odd = k % 2 == 1;
  constexpr std::array<EO, 3> kAll{kF, kB, kU};
  for (EO first : kAll) {
    if (!w.EdgeOk(0, first)) continue;
    // ok[j][prev][u]: edges j..k-1 can be chosen given edge j-1 = prev and
    // whether an unoriented edge was already used.
    std::vector<std::array<std::array<bool, 2>, 3>> ok(k + 1);
    for (int p = 0; p < 3; ++p) {
      for (int u = 0; u < 2; ++u) {
        ok[k][p][u] = w.VertexOk(0, kAll[p], first) && (!odd || u);
      }
    }
    for (int j = k - 1; j >= 1; --j) {
      for (int p = 0; p < 3; ++p) {
        for (int u = 0; u < 2; ++u) {
          bool r = false;
          for (int c = 0; c < 3 && !r; ++c) {
            r = w.EdgeOk(j, kAll[c]) && w.VertexOk(j, kAll[p], kAll[c]) &&
                ok[j + 1][c][u || kAll[c] == kU];
          }
          ok[j][p][u] = r;
        }
      }
    }
    int p = static_cast<int>(first);
    int u = first == kU;
    if (!ok[1][p][u]) continue;
    Orientation o{first};
    for (int j = 1; j < k; ++j) {
      for (int c = 0; c < 3; ++c) {
        if (w.EdgeOk(j, kAll[c]) && w.VertexOk(j, kAll[p], kAll[c]) &&
            ok[j + 1][c][u || kAll[c] == kU]) {
          o.push_back(kAll[c]);
          p = c;
          u = u || kAll[c] == kU;
          break;
        }
      }
    }
    return o;
  }
  return std::nullopt;
}

std::optional<Certificate> SearchHoleCertificate(const HoleStructure& hs) {
  View w(hs);
  const int k = w.k();
  const Graph g = StructureGraph(hs);
  auto valid = [&](const Certificate& c) -> std::optional<Certificate> {
    if (CheckCertificate(g, c)) return c;
    return std::nullopt;
  };
  bool all_tri = true;
  int two = -1, shared = -1;
  for (int i = 0; i < k; ++i) {
    all_tri = all_tri && w.tri(i) >= 1;
    if (two == -1 && w.tri(i) >= 2) two = i;
    if (shared == -1 && w.s(i)) shared = i;
  }
  if (all_tri && k % 2 == 1) {
    if (auto c = valid(OneTriangleEach(hs))) return c;
  }
  if (all_tri && k % 2 == 0 && two != -1) {
    std::vector<int> keep(k, 1);
    keep[two] = 2;
    if (auto c = valid(Pick(hs, FamilyTag::kF2, keep,
                            std::vector<bool>(k, false)))) {
      return c;
    }
  }
  if (all_tri && k % 2 == 0 && shared != -1) {
    std::vector<bool> keep_s(k, false);
    keep_s[shared] = true;
    if (auto c = valid(Pick(hs, FamilyTag::kF5, std::vector<int>(k, 1),
                            keep_s))) {
      return c;
    }
  }
  if (auto t = F4Targets(w)) {
    std::vector<int> keep(k);
    for (int i = 0; i < k; ++i) keep[i] = (*t)[i] == 4 ? 2 : (*t)[i];
    if (auto c = valid(Pick(hs, FamilyTag::kF4, keep,
                            std::vector<bool>(k, false)))) {
      return c;
    }
  }
  for (int len = 2; len <= k - 1; ++len) {
    for (int start = 0; start < k; ++start) {
      if (auto c = BuildF1(hs, g, start, len)) return c;
    }
  }
  return std::nullopt;
}

std::variant<Orientation, Certificate> ProofProcedure(const HoleStructure& hs,
                                                      int* proof_case) {
  View w(hs);
  const int k = w.k();
  const bool odd = k % 2 == 1;
  auto set_case = [&](int c) {
    if (proof_case) *proof_case = c;
  };
  std::vector<int> others;
  for (int i = 0; i < k; ++i) {
    if (w.type(i) != VertexType::kType1) others.push_back(i);
  }

  if (others.empty()) {
    set_case(1);
    if (odd) return OneTriangleEach(hs);
    return Orientation(k, kF);
  }

  if (others.size() == 1) {
    set_case(2);
    const int r = others[0];
    if (w.type(r) == VertexType::kType4) {
      if (!odd) return Whole(hs, FamilyTag::kF2);
      return OneTriangleEach(hs);
    }
    if (w.type(r) != VertexType::kType0) {
      throw std::logic_error("lone non-Type-1 vertex carries an S-pair");
    }
    Orientation o(k, kF);
    o[w.idx(r - 1)] = kU;
    return o;
  }

  int a = -1;
  if (others.size() == 2) {
    if (others[1] == others[0] + 1) a = others[0];
    if (others[0] == 0 && others[1] == k - 1) a = k - 1;
  }
  if (a != -1) {
    set_case(3);
    const int b = w.idx(a + 1);
    const VertexType ta = w.type(a), tb = w.type(b);
    using VT = VertexType;
    auto is = [](VT t, int n) { return static_cast<int>(t) == n; };
    // Edges b .. a-1 run the long way round from v_b to v_a; edge a joins
    // the two special vertices.
    auto chain = [&](EO dir) { return Orientation(k, dir); };
    if (is(ta, 3) && is(tb, 3)) {
      if (!odd) return Whole(hs, FamilyTag::kF5);
      return OneTriangleEach(hs);
    }
    if ((is(ta, 2) || is(ta, 3)) && (is(tb, 2) || is(tb, 3))) {
      Orientation o = chain(is(tb, 3) ? kB : kF);
      o[a] = kU;
      return o;
    }
    if (is(ta, 4) && is(tb, 4)) return F1Candidate(hs, a, 2);
    if (is(ta, 4) && is(tb, 0)) {
      if (odd) return Whole(hs, FamilyTag::kF4);
      Orientation o = chain(kF);
      o[a] = kB;
      return o;
    }
    if (is(ta, 0) && is(tb, 4)) {
      if (odd) return Whole(hs, FamilyTag::kF4);
      Orientation o = chain(kB);
      o[a] = kF;
      return o;
    }
    if (is(ta, 0) && is(tb, 0)) {
      Orientation o = chain(kF);
      o[a] = kU;
      o[w.idx(a - 1)] = kU;
      return o;
    }
    throw std::logic_error("adjacent special pair with an unmatched S-pair");
  }

  set_case(4);
  Orientation o(k, kU);
  std::vector<bool> fixed(k, false);
  // Returns false on a conflicting assignment.
  auto assign = [&](int e, EO d) {
    e = w.idx(e);
    if (fixed[e] && o[e] != d) return false;
    fixed[e] = true;
    o[e] = d;
    return true;
  };
  auto heavy = [&](int i) {
    return w.type(i) == VertexType::kType3 || w.type(i) == VertexType::kType4;
  };

  // Round 1: each maximal Type-1 run is oriented away from a light flank.
  const int s0 = others[0];
  for (int j = 1; j < k;) {
    if (w.type(s0 + j) != VertexType::kType1) {
      ++j;
      continue;
    }
    int first = s0 + j;
    while (j < k && w.type(s0 + j) == VertexType::kType1) ++j;
    int last = s0 + j - 1;
    if (!heavy(first - 1)) {
      for (int e = first - 1; e < last; ++e) assign(e, kF);
    } else if (!heavy(last + 1)) {
      for (int e = first; e <= last; ++e) assign(e, kB);
    } else {
      return F1Candidate(hs, w.idx(first - 1), last - first + 3);
    }
  }

  // Round 2: edges into Type-4 vertices and into Type-3 vertices on the side
  // away from their S-pair.
  for (int i = 0; i < k; ++i) {
    int bad = -1;
    if (w.type(i) == VertexType::kType4) {
      if (!assign(i - 1, kF)) bad = i - 1;
      if (!assign(i, kB)) bad = i;
    } else if (w.type(i) == VertexType::kType3) {
      if (w.s(i) && !assign(i - 1, kF)) bad = i - 1;
      if (w.s(i - 1) && !assign(i, kB)) bad = i;
    }
    if (bad != -1) return F1Candidate(hs, w.idx(bad), 2);
  }

  if (odd && std::find(o.begin(), o.end(), kU) == o.end()) {
    return Whole(hs, FamilyTag::kF4);
  }
  return o;
}

OrientationResult FindFeasibleOrientation(const HoleStructure& hs) {
  OrientationResult r;
  auto proof = ProofProcedure(hs, &r.proof_case);
  if (auto* o = std::get_if<Orientation>(&proof); o && IsFeasible(hs, *o)) {
    r.value = *o;
    return r;
  }
  if (auto* c = std::get_if<Certificate>(&proof);
      c && CheckCertificate(StructureGraph(hs), *c)) {
    r.value = *c;
    return r;
  }
  if (auto o = ExactOrientation(hs)) {
    r.value = *o;
    r.source = OrientationSource::kExactSearch;
    return r;
  }
  r.source = OrientationSource::kCertificateSearch;
  if (auto c = SearchHoleCertificate(hs)) {
    r.value = *c;
    return r;
  }
  r.value = Obstruction{
      "no feasible orientation exists, yet the hole carries no member of "
      "F1-F5",
      StructureVertices(hs)};
  return r;
}

std::string OrientationString(const Orientation& o) {
  std::string out;
  for (EO e : o) out += e == kF ? '>' : e == kB ? '<' : '-';
  return out;
}

}  // namespace cbvpg
