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

#include <gtest/gtest.h>

#include <random>

#include "test_support.h"

namespace cbvpg {
namespace {

constexpr auto F = EdgeOrientation::kForward;
constexpr auto B = EdgeOrientation::kBackward;
constexpr auto U = EdgeOrientation::kUnoriented;

HoleStructure Structure(std::vector<int> tri, std::vector<bool> s) {
  return StructureOfHoleGraph(HolePattern{std::move(tri), std::move(s)});
}

HoleStructure Plain(int k, int tri) {
  return Structure(std::vector<int>(k, tri), std::vector<bool>(k, false));
}

TEST(CheckFeasible, Examples) {
  EXPECT_TRUE(IsFeasible(Plain(4, 0), {U, U, U, U}));
  FeasibilityReport r = CheckFeasible(Plain(5, 0), {F, F, F, F, F});
  EXPECT_EQ(r.condition, 6);
  EXPECT_TRUE(IsFeasible(Plain(6, 1), {F, F, F, F, F, F}));
  EXPECT_THROW(CheckFeasible(Plain(4, 0), {U, U}), std::invalid_argument);
}

TEST(CheckFeasible, ReportsEachCondition) {
  HoleStructure s = Structure({0, 0, 0, 0}, {true, false, false, false});
  EXPECT_EQ(CheckFeasible(s, {F, U, U, U}).condition, 2);
  HoleStructure t4 = Structure({2, 0, 0, 0}, {false, false, false, false});
  EXPECT_EQ(CheckFeasible(t4, {U, U, U, F}).condition, 3);
  EXPECT_TRUE(IsFeasible(t4, {B, U, U, F}));
  // v0 Type 3 through s_pair[0]: needs the edge from v3 oriented into it
  HoleStructure t3 = Structure({1, 0, 0, 0}, {true, false, false, false});
  EXPECT_EQ(CheckFeasible(t3, {U, U, U, U}).condition, 4);
  EXPECT_TRUE(IsFeasible(t3, {U, U, U, F}));
  HoleStructure t1 = Structure({1, 0, 0, 0}, {false, false, false, false});
  FeasibilityReport r = CheckFeasible(t1, {F, U, U, U});
  EXPECT_EQ(r.condition, 5);
  EXPECT_EQ(r.index, 0);
}

TEST(FindFeasibleOrientation, EvenAllType1IsAllForward) {
  OrientationResult r = FindFeasibleOrientation(Plain(6, 1));
  ASSERT_TRUE(r.orientation());
  EXPECT_EQ(*r.orientation(), Orientation(6, F));
  EXPECT_EQ(r.proof_case, 1);
}

TEST(FindFeasibleOrientation, OddAllType1IsF3) {
  HoleStructure hs = Plain(5, 1);
  OrientationResult r = FindFeasibleOrientation(hs);
  ASSERT_TRUE(r.certificate());
  EXPECT_EQ(r.certificate()->family, FamilyTag::kF3);
  EXPECT_EQ(r.certificate()->vertices.size(), 20u);
  EXPECT_TRUE(CheckCertificate(StructureGraph(hs), *r.certificate()));
}

TEST(FindFeasibleOrientation, SingleType0OpensTheLastEdge) {
  OrientationResult r = FindFeasibleOrientation(Structure({0, 1, 1, 1, 1}, std::vector<bool>(5)));
  ASSERT_TRUE(r.orientation());
  EXPECT_EQ(*r.orientation(), (Orientation{F, F, F, F, U}));
  EXPECT_EQ(r.proof_case, 2);
}

TEST(FindFeasibleOrientation, SingleType4) {
  HoleStructure even = Structure({2, 1, 1, 1}, std::vector<bool>(4));
  OrientationResult r = FindFeasibleOrientation(even);
  ASSERT_TRUE(r.certificate());
  EXPECT_EQ(r.certificate()->family, FamilyTag::kF2);
  EXPECT_TRUE(CheckCertificate(StructureGraph(even), *r.certificate()));

  HoleStructure odd = Structure({2, 1, 1, 1, 1}, std::vector<bool>(5));
  r = FindFeasibleOrientation(odd);
  ASSERT_TRUE(r.certificate());
  EXPECT_EQ(r.certificate()->family, FamilyTag::kF3);
  EXPECT_EQ(r.certificate()->vertices.size(), 20u);
  EXPECT_TRUE(CheckCertificate(StructureGraph(odd), *r.certificate()));
}

TEST(FindFeasibleOrientation, AdjacentType3PairGivesF5) {
  HoleStructure hs = Structure({1, 1, 1, 1}, {true, false, false, false});
  OrientationResult r = FindFeasibleOrientation(hs);
  ASSERT_TRUE(r.certificate());
  EXPECT_EQ(r.certificate()->family, FamilyTag::kF5);
  EXPECT_TRUE(CheckCertificate(StructureGraph(hs), *r.certificate()));
}

TEST(FindFeasibleOrientation, TwoAdjacentType4GiveF1) {
  HoleStructure hs = Structure({2, 2, 1, 1}, std::vector<bool>(4));
  OrientationResult r = FindFeasibleOrientation(hs);
  ASSERT_TRUE(r.certificate());
  EXPECT_EQ(r.certificate()->family, FamilyTag::kF1);
  EXPECT_TRUE(CheckCertificate(StructureGraph(hs), *r.certificate()));
}

TEST(FindFeasibleOrientation, F4SpecGivesF4) {
  F4Spec spec{{{GapType::kType0, GapType::kType1, GapType::kType1, GapType::kType1}}};
  HoleStructure hs = StructureOfHoleGraph(F4Pattern(spec));
  OrientationResult r = FindFeasibleOrientation(hs);
  ASSERT_TRUE(r.certificate());
  EXPECT_EQ(r.certificate()->family, FamilyTag::kF4);
  EXPECT_TRUE(CheckCertificate(StructureGraph(hs), *r.certificate()));
}

// The smallest pattern with neither a feasible orientation nor a member of
// the families: the result is an obstruction, never a bogus certificate.
TEST(FindFeasibleOrientation, GapPatternIsAnObstruction) {
  HoleStructure hs = Structure({1, 1, 0, 0}, {false, true, false, true});
  EXPECT_FALSE(testing::AnyFeasibleOrientation(hs.pattern()));
  OrientationResult r = FindFeasibleOrientation(hs);
  ASSERT_TRUE(r.obstruction());
  EXPECT_FALSE(SearchHoleCertificate(hs));
  EXPECT_FALSE(ExactOrientation(hs));
}

TEST(ExactOrientation, AgreesWithDefinition) {
  for (int k = 4; k <= 6; ++k) {
    for (const HolePattern& p : testing::AllPatterns(k)) {
      HoleStructure hs = StructureOfHoleGraph(p);
      auto o = ExactOrientation(hs);
      EXPECT_EQ(o.has_value(), testing::AnyFeasibleOrientation(p));
      if (o) {
        EXPECT_TRUE(testing::FeasibleByDefinition(p, *o));
      }
    }
  }
}

TEST(OrientationProperty, SoundAndDeterministic) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 2000; ++trial) {
    HolePattern p = testing::RandomPattern(rng, 4 + trial % 9);
    HoleStructure hs = StructureOfHoleGraph(p);
    OrientationResult r = FindFeasibleOrientation(hs);
    if (auto* o = r.orientation()) {
      EXPECT_TRUE(IsFeasible(hs, *o));
      EXPECT_TRUE(testing::FeasibleByDefinition(p, *o));
    } else if (auto* c = r.certificate()) {
      EXPECT_TRUE(CheckCertificate(StructureGraph(hs), *c)) << ExplainCertificate(StructureGraph(hs), *c);
    }
    OrientationResult again = FindFeasibleOrientation(hs);
    EXPECT_EQ(again.value.index(), r.value.index());
    if (r.orientation()) {
      EXPECT_EQ(*again.orientation(), *r.orientation());
    }
  }
}

// A certificate and a feasible orientation never coexist: when the proof
// procedure certifies, no orientation exists.
TEST(OrientationProperty, CertificatesOnlyWhenInfeasible) {
  for (int k = 4; k <= 6; ++k) {
    for (const HolePattern& p : testing::AllPatterns(k)) {
      OrientationResult r = FindFeasibleOrientation(StructureOfHoleGraph(p));
      if (!r.orientation()) {
        EXPECT_FALSE(testing::AnyFeasibleOrientation(p));
      }
    }
  }
}

TEST(OrientationString, Symbols) { EXPECT_EQ(OrientationString({F, B, U}), "><-"); }

}  // namespace
}  // namespace cbvpg
