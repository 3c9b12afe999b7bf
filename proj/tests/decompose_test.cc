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


#include "cbvpg/decompose.h"

#include <gtest/gtest.h>

#include <random>

#include "test_support.h"

namespace cbvpg {
namespace {

using testing::Cycle;
using testing::Extend;

Hole C4Hole() { return Hole{{0, 1, 2, 3}}; }

TEST(PruneSimplicial, PathCascades) {
  PruneResult r = PruneSimplicial(testing::Path(3));
  EXPECT_EQ(r.core.graph.order(), 0);
  EXPECT_EQ(r.log.size(), 3u);
}

TEST(PruneSimplicial, C4WithPendant) {
  PruneResult r = PruneSimplicial(Extend(Cycle(4), 1, {{0, 4}}));
  EXPECT_EQ(r.core.graph, Cycle(4));
  ASSERT_EQ(r.log.size(), 1u);
  EXPECT_EQ(r.log[0], (RemovalEntry{4, {0}}));
}

TEST(PruneSimplicial, TriangleVerticesOfDegreeThreeStay) {
  Graph f3 = MakeF3(5);
  PruneResult r = PruneSimplicial(f3);
  EXPECT_EQ(r.core.graph, f3);
  EXPECT_TRUE(r.log.empty());
}

TEST(PruneSimplicial, IsolatedVerticesGo) {
  PruneResult r = PruneSimplicial(Extend(Cycle(5), 2, {}));
  EXPECT_EQ(r.core.graph, Cycle(5));
  EXPECT_EQ(r.log.size(), 2u);
}

TEST(PruneProperty, ReplayReconstructsAndCoreIsClean) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 12;
    Graph g = testing::RandomGraph(rng, n, 0.15 + 0.05 * (trial % 5));
    PruneResult r = PruneSimplicial(g);
    EXPECT_EQ(ReplayRemovals(r.core, r.log, n), g);
    const Graph& c = r.core.graph;
    for (Vertex v = 0; v < c.order(); ++v) {
      EXPECT_FALSE(c.degree(v) <= 2 && IsSimplicial(c, v));
    }
    for (const RemovalEntry& e : r.log) {
      EXPECT_LE(e.neighbors.size(), 2u);
      if (e.neighbors.size() == 2) {
        EXPECT_TRUE(g.adjacent(e.neighbors[0], e.neighbors[1]));
      }
    }
    // holes survive: every hole of g lies inside the core
    EXPECT_EQ(testing::AllHoleSets(g).size(), testing::AllHoleSets(c).size());
  }
}

TEST(Decompose, OneTriangleAtFirstVertex) {
  Graph g = Extend(Cycle(4), 3, {{4, 5}, {4, 6}, {5, 6}, {0, 4}, {0, 5}, {0, 6}});
  Decomposition d = DecomposeAroundHole(g, C4Hole());
  auto* hs = std::get_if<HoleStructure>(&d);
  ASSERT_NE(hs, nullptr);
  EXPECT_EQ(hs->triangles[0].size(), 1u);
  EXPECT_EQ(hs->triangles[0][0], (Triangle{4, 5, 6}));
  for (int i = 1; i < 4; ++i) EXPECT_TRUE(hs->triangles[i].empty());
  EXPECT_EQ(hs->types, (std::vector<VertexType>{VertexType::kType1, VertexType::kType0,
                                                VertexType::kType0, VertexType::kType0}));
}

TEST(Decompose, OppositeNeighbourhoodIsStructureError) {
  Graph g = Extend(Cycle(4), 1, {{0, 4}, {2, 4}});
  EXPECT_TRUE(std::holds_alternative<StructureError>(DecomposeAroundHole(g, C4Hole())));
}

TEST(Decompose, ThreeCommonNeighboursGiveK5) {
  Graph g = Extend(Cycle(4), 3,
                   {{0, 4}, {1, 4}, {0, 5}, {1, 5}, {0, 6}, {1, 6}, {4, 5}, {4, 6}, {5, 6}});
  Decomposition d = DecomposeAroundHole(g, C4Hole());
  auto* c = std::get_if<Certificate>(&d);
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->family, FamilyTag::kK5);
  EXPECT_EQ(c->vertices, (VertexSet{0, 1, 4, 5, 6}));
  EXPECT_TRUE(IsClique(g, c->vertices));
  EXPECT_TRUE(CheckCertificate(g, *c));
}

TEST(Decompose, ThreeTrianglesGiveH0) {
  HolePattern p{{3, 0, 0, 0}, {false, false, false, false}};
  Graph g = MakeHoleGraph(p);
  Decomposition d = DecomposeAroundHole(g, C4Hole());
  auto* c = std::get_if<Certificate>(&d);
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->family, FamilyTag::kH0);
  EXPECT_TRUE(CheckCertificate(g, *c));
}

TEST(Decompose, TwoTrianglesAndSPairGiveH0) {
  HolePattern p{{2, 0, 0, 0}, {true, false, false, false}};
  Graph g = MakeHoleGraph(p);
  Decomposition d = DecomposeAroundHole(g, C4Hole());
  auto* c = std::get_if<Certificate>(&d);
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->family, FamilyTag::kH0);
  EXPECT_TRUE(CheckCertificate(g, *c));
}

TEST(Decompose, FourCliqueInUGivesK5) {
  Graph g = Extend(Cycle(4), 4, {{4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7},
                                 {0, 4}, {0, 5}, {0, 6}, {0, 7}});
  Decomposition d = DecomposeAroundHole(g, C4Hole());
  auto* c = std::get_if<Certificate>(&d);
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->family, FamilyTag::kK5);
  EXPECT_TRUE(CheckCertificate(g, *c));
}

TEST(Decompose, DiamondComesFirst) {
  // a vertex seeing v0, v1, v2 makes a diamond with the hole
  Graph g = Extend(Cycle(5), 1, {{0, 5}, {1, 5}, {2, 5}});
  Decomposition d = DecomposeAroundHole(g, Hole{{0, 1, 2, 3, 4}});
  auto* c = std::get_if<Certificate>(&d);
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->family, FamilyTag::kDiamond);
  EXPECT_TRUE(CheckCertificate(g, *c));
}

TEST(Decompose, NotAHole) {
  Graph g = Extend(Cycle(5), 0, {{0, 2}});
  EXPECT_TRUE(std::holds_alternative<StructureError>(
      DecomposeAroundHole(g, Hole{{0, 1, 2, 3, 4}})));
}

TEST(ClassifyTypes, Examples) {
  using T = VertexType;
  EXPECT_EQ(ClassifyTypes({0, 0, 0, 0}, {0, 0, 0, 0}),
            (std::vector<T>{T::kType0, T::kType0, T::kType0, T::kType0}));
  EXPECT_EQ(ClassifyTypes({2, 0, 0, 0}, {0, 0, 0, 0})[0], T::kType4);
  EXPECT_EQ(ClassifyTypes({1, 0, 0, 0}, {0, 0, 0, 2})[0], T::kType3);
  EXPECT_EQ(ClassifyTypes({1, 0, 0, 0}, {2, 0, 0, 0})[0], T::kType3);
  EXPECT_EQ(ClassifyTypes({0, 0, 0, 0}, {2, 0, 0, 0})[0], T::kType2);
  EXPECT_EQ(ClassifyTypes({0, 0, 0, 0}, {2, 0, 0, 0})[1], T::kType2);
  EXPECT_EQ(ClassifyTypes({1, 0, 0, 0}, {0, 0, 0, 0})[0], T::kType1);
  EXPECT_THROW(ClassifyTypes({2, 0, 0, 0}, {2, 0, 0, 0}), std::logic_error);
  EXPECT_THROW(ClassifyTypes({3, 0, 0, 0}, {0, 0, 0, 0}), std::logic_error);
}

// Decomposing a generated hole graph recovers its pattern, and the structure
// invariants hold.
TEST(DecomposeProperty, GeneratedPatternsRoundTrip) {
  for (int k = 4; k <= 6; ++k) {
    for (const HolePattern& p : testing::AllPatterns(k)) {
      Graph g = MakeHoleGraph(p);
      Hole hole;
      for (int i = 0; i < k; ++i) hole.cycle.push_back(i);
      Decomposition d = DecomposeAroundHole(g, hole);
      auto* hs = std::get_if<HoleStructure>(&d);
      ASSERT_NE(hs, nullptr);
      EXPECT_EQ(hs->pattern(), p);
      EXPECT_EQ(hs->types, PatternTypes(p));
      EXPECT_EQ(StructureVertices(*hs).size(), static_cast<size_t>(g.order()));
      EXPECT_EQ(StructureGraph(*hs), g);
      for (int i = 0; i < k; ++i) {
        for (const Triangle& t : hs->triangles[i]) {
          for (Vertex u : t) {
            EXPECT_EQ(g.degree(u), 3);
            EXPECT_TRUE(g.adjacent(u, i));
          }
        }
        for (Vertex s : hs->s_pairs[i]) {
          EXPECT_TRUE(g.adjacent(s, i));
          EXPECT_TRUE(g.adjacent(s, (i + 1) % k));
        }
      }
    }
  }
}

}  // namespace
}  // namespace cbvpg
