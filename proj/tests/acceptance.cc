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


// Acceptance run: one PASS/FAIL line per criterion. Exits non-zero when a
// criterion fails that is not listed in kKnownFailures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "cbvpg/layout.h"
#include "cbvpg/oracle.h"
#include "cbvpg/recognizer.h"
#include "cbvpg/verify.h"
#include "test_support.h"

namespace cbvpg {
namespace {

// Patterns with no feasible orientation and no family member exist, so the
// certificate half of criterion 4 cannot hold; see the README.
const std::set<int> kKnownFailures{4};

using Clock = std::chrono::steady_clock;

double Since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Representations collected for the geometric checks, with the holes the
// pipeline traced on them.
struct Emitted {
  Graph graph;
  Representation rep;
  std::vector<std::vector<Vertex>> holes;
};

std::vector<Emitted> emitted;

void Keep(const Graph& g, const RecognitionResult& r) {
  if (!r.representation) return;
  Emitted e{g, *r.representation, {}};
  for (const ComponentResult& c : r.components) {
    if (c.hole) e.holes.push_back(c.hole->cycle);
  }
  emitted.push_back(std::move(e));
}

bool Rejects(const Graph& g, FamilyTag tag, std::string* why) {
  RecognitionResult r = Recognize(g);
  if (r.decision != Decision::kNotRepresentable || !r.certificate) {
    *why = "no certificate";
    return false;
  }
  if (r.certificate->family != tag) {
    *why = "family " + std::string(FamilyName(r.certificate->family));
    return false;
  }
  if (!CheckCertificate(g, *r.certificate)) {
    *why = ExplainCertificate(g, *r.certificate);
    return false;
  }
  return true;
}

Outcome BaseForbidden() {
  Outcome o;
  std::string why;
  for (auto [g, tag] : {std::pair{MakeDiamond(), FamilyTag::kDiamond},
                        std::pair{MakeK5(), FamilyTag::kK5},
                        std::pair{MakeH0(), FamilyTag::kH0}}) {
    if (!Rejects(g, tag, &why)) {
      o.pass = false;
      o.detail += std::string(FamilyName(tag)) + ": " + why + "; ";
    }
  }
  OracleBounds b;
  b.width = 8;
  b.height = 8;
  b.max_len = 7;
  OracleStats stats;
  auto t = Clock::now();
  bool found = BruteForceSearch(MakeDiamond(), b, &stats).has_value();
  double secs = Since(t);
  if (found || secs >= 60) o.pass = false;
  char buf[160];
  std::snprintf(buf, sizeof buf, "oracle K4-e 8x8 len 7: %s, %lld nodes, %.2f s (limit 60 s)",
                found ? "found" : "exhausted", static_cast<long long>(stats.nodes), secs);
  o.detail += buf;
  return o;
}

Outcome FamilySweep() {
  using G = GapType;
  std::vector<std::tuple<std::string, FamilyTag, Graph>> cases;
  for (int k = 2; k <= 5; ++k) cases.push_back({"F1 k=" + std::to_string(k), FamilyTag::kF1, MakeF1(k)});
  for (int k : {4, 6, 8}) cases.push_back({"F2 k=" + std::to_string(k), FamilyTag::kF2, MakeF2(k)});
  for (int k : {5, 7, 9}) cases.push_back({"F3 k=" + std::to_string(k), FamilyTag::kF3, MakeF3(k)});
  std::vector<F4Spec> specs{
      {{{G::kType0, G::kType1, G::kType1, G::kType1}}},
      {{{G::kType1, G::kType0, G::kType1}, {G::kType0, G::kType1, G::kType1, G::kType1}}},
      {{{G::kType0, G::kType1}, {G::kType0, G::kType1, G::kType1}, {G::kType1, G::kType1, G::kType0}}}};
  for (const F4Spec& s : specs) {
    cases.push_back({"F4 k=" + std::to_string(s.length()), FamilyTag::kF4, MakeF4(s)});
  }
  for (int k : {4, 6, 8}) cases.push_back({"F5 k=" + std::to_string(k), FamilyTag::kF5, MakeF5(k)});
  Outcome o;
  double slowest = 0;
  for (const auto& [name, tag, g] : cases) {
    std::string why;
    auto t = Clock::now();
    bool ok = Rejects(g, tag, &why);
    double secs = Since(t);
    slowest = std::max(slowest, secs);
    if (!ok || secs >= 1) {
      o.pass = false;
      o.detail += name + ": " + (ok ? "too slow" : why) + "; ";
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu instances, slowest %.3f s (limit 1 s each)", cases.size(),
                slowest);
  o.detail += buf;
  return o;
}

Outcome ConstructiveSweep() {
  Outcome o;
  auto t = Clock::now();
  int built = 0, bad = 0;
  auto run = [&](const HolePattern& p) {
    Graph g = MakeHoleGraph(p);
    RecognitionResult r = Recognize(g);
    ++built;
    if (r.decision != Decision::kRepresentable || !r.representation ||
        !VerifyRepresentation(g, *r.representation).empty()) {
      ++bad;
      return;
    }
    Keep(g, r);
  };
  for (int k = 4; k <= 12; k += 2) {
    run(HolePattern{std::vector<int>(k, 1), std::vector<bool>(k, false)});
  }
  std::mt19937 rng(2024);
  int random_ok = 0;
  while (random_ok < 1000) {
    HolePattern p = testing::RandomPattern(rng, std::uniform_int_distribution<int>(4, 12)(rng));
    if (!FindFeasibleOrientation(StructureOfHoleGraph(p)).orientation()) continue;
    run(p);
    ++random_ok;
  }
  double secs = Since(t);
  o.pass = bad == 0 && secs < 60;
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d instances (5 all-Type-1 even holes + 1000 random), %d bad, %.2f s (limit 60 s)",
                built, bad, secs);
  o.detail = buf;
  return o;
}

Outcome OrientationCompleteness() {
  Outcome o;
  auto t = Clock::now();
  long total = 0, mismatch = 0, certified = 0, bad_cert = 0, uncertified = 0;
  std::vector<HolePattern> gaps_k4;
  for (int k = 4; k <= 7; ++k) {
    for (const HolePattern& p : testing::AllPatterns(k)) {
      ++total;
      HoleStructure hs = StructureOfHoleGraph(p);
      OrientationResult r = FindFeasibleOrientation(hs);
      bool exists = testing::AnyFeasibleOrientation(p);
      if ((r.orientation() != nullptr) != exists) ++mismatch;
      if (r.orientation() && !testing::FeasibleByDefinition(p, *r.orientation())) ++mismatch;
      if (auto* c = r.certificate()) {
        ++certified;
        if (!CheckCertificate(StructureGraph(hs), *c)) ++bad_cert;
      }
      if (r.obstruction()) {
        ++uncertified;
        if (k == 4) gaps_k4.push_back(p);
      }
    }
  }
  double secs = Since(t);
  // Independent check that the uncertified k=4 patterns contain no member of
  // any family, by subset scan through the validator.
  int scanned = 0, members = 0;
  for (const HolePattern& p : gaps_k4) {
    Graph g = MakeHoleGraph(p);
    if (g.order() > 20) continue;
    ++scanned;
    if (testing::ScanForForbidden(g)) ++members;
  }
  o.pass = mismatch == 0 && bad_cert == 0 && uncertified == 0 && secs < 600;
  char buf[320];
  std::snprintf(buf, sizeof buf,
                "%ld patterns k=4..7, %ld existence mismatches, %ld certificates (%ld invalid), "
                "%ld infeasible without certificate; subset scan of %d such k=4 graphs found %d "
                "family members; %.1f s (limit 600 s)",
                total, mismatch, certified, bad_cert, uncertified, scanned, members, secs);
  o.detail = buf;
  return o;
}

Outcome OracleAgreement() {
  Outcome o;
  auto t = Clock::now();
  int decided = 0, skipped = 0, disagree = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : testing::NonIsomorphicGraphs(n)) {
      RecognitionResult r = Recognize(g);
      if (r.decision == Decision::kOutOfScope) {
        ++skipped;
        continue;
      }
      ++decided;
      Keep(g, r);
      auto rep = BruteForceSearch(g, OracleBounds{});
      bool representable = r.decision == Decision::kRepresentable;
      if (rep.has_value() != representable) ++disagree;
      if (rep) emitted.push_back({g, *rep, {}});
    }
  }
  double secs = Since(t);
  o.pass = disagree == 0 && secs < 900;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%d graphs decided, %d out of scope, %d disagreements, %.1f s (limit 900 s)",
                decided, skipped, disagree, secs);
  o.detail = buf;
  return o;
}

// Cyclic order of a vertex set inducing a cycle.
std::vector<Vertex> CycleOrder(const Graph& g, const std::vector<Vertex>& w) {
  std::vector<Vertex> out{w[0]};
  Vertex prev = -1, cur = w[0];
  while (true) {
    Vertex next = -1;
    for (Vertex u : w) {
      if (u != prev && u != cur && g.adjacent(cur, u)) {
        next = u;
        break;
      }
    }
    if (next == w[0]) break;
    out.push_back(next);
    prev = cur;
    cur = next;
  }
  return out;
}

Outcome GeometricProperties() {
  Outcome o;
  long holes = 0, odd_corner_count = 0, odd_without_straight = 0;
  for (const Emitted& e : emitted) {
    std::vector<std::vector<Vertex>> traced = e.holes;
    if (e.graph.order() <= 14) {
      for (const auto& w : testing::AllHoleSets(e.graph)) traced.push_back(CycleOrder(e.graph, w));
    }
    for (const auto& h : traced) {
      ++holes;
      int corners = CountCorners(e.rep, h);
      if (corners % 2 != 0) ++odd_corner_count;
      if (h.size() % 2 == 1 && corners >= static_cast<int>(h.size())) ++odd_without_straight;
    }
  }
  std::mt19937 rng(7);
  std::vector<std::tuple<int, Vertex, Vertex>> pairs;
  for (int i = 0; i < static_cast<int>(emitted.size()); ++i) {
    const Emitted& e = emitted[i];
    for (const auto& [v, w] : e.graph.edges()) {
      const Segment &a = e.rep.at(v), &b = e.rep.at(w);
      if (a.horizontal == b.horizontal && Meet(a, b).kind == Meeting::kContact) {
        pairs.push_back({i, v, w});
      }
    }
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  int merged = 0, excluded = 0, merge_bad = 0;
  for (const auto& [i, v, w] : pairs) {
    if (merged == 100) break;
    try {
      auto [cg, crep] = MergeCollinear(emitted[i].graph, emitted[i].rep, v, w);
      if (!VerifyRepresentation(cg, crep).empty()) ++merge_bad;
      ++merged;
    } catch (const RepresentationError&) {
      ++excluded;
    }
  }
  o.pass = odd_corner_count == 0 && odd_without_straight == 0 && merged == 100 && merge_bad == 0;
  char buf[320];
  std::snprintf(buf, sizeof buf,
                "%zu representations, %ld holes traced: %ld odd corner counts, %ld odd holes "
                "without a straight join; merges %d/100 verifier-clean failures %d "
                "(%d sampled pairs skipped: a third segment's interior holds the junction)",
                emitted.size(), holes, odd_corner_count, odd_without_straight, merged, merge_bad,
                excluded);
  o.detail = buf;
  return o;
}

Outcome PruningRoundTrip() {
  Outcome o;
  std::mt19937 rng(99);
  int replay_bad = 0, reinserted = 0, reinsert_bad = 0;
  auto check = [&](const Graph& g) {
    PruneResult pr = PruneSimplicial(g);
    if (ReplayRemovals(pr.core, pr.log, g.order()) != g) ++replay_bad;
    RecognitionResult r = Recognize(g);
    if (r.decision != Decision::kRepresentable || pr.log.empty()) return;
    if (pr.core.graph.order() == 0) {
      ++reinserted;
      if (!VerifyRepresentation(g, ReinsertSimplicial({}, pr.log)).empty()) ++reinsert_bad;
      return;
    }
    if (!r.representation) return;
    ++reinserted;
    if (!VerifyRepresentation(g, *r.representation).empty()) ++reinsert_bad;
    Keep(g, r);
  };
  for (int i = 0; i < 500; ++i) {
    check(testing::RandomGraph(rng, 4 + i % 16, 0.08 + 0.02 * (i % 8)));
  }
  int built = 0;
  while (built < 300) {
    HolePattern p = testing::RandomPattern(rng, 4 + built % 7);
    if (!FindFeasibleOrientation(StructureOfHoleGraph(p)).orientation()) continue;
    check(testing::AddPendants(rng, MakeHoleGraph(p), 1 + built % 10));
    ++built;
  }
  o.pass = replay_bad == 0 && reinsert_bad == 0;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "500 random graphs + 300 pendant-extended holes: %d replay mismatches; "
                "%d reinsertions, %d not verifier-clean",
                replay_bad, reinserted, reinsert_bad);
  o.detail = buf;
  return o;
}

int Run() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"base forbidden graphs", BaseForbidden},
      {"family sweep", FamilySweep},
      {"constructive sweep", ConstructiveSweep},
      {"orientation completeness", OrientationCompleteness},
      {"oracle agreement", OracleAgreement},
      {"geometric properties", GeometricProperties},
      {"pruning round-trip", PruningRoundTrip},
  };
  // The geometric checks cover representations emitted by every other
  // criterion, so they run last.
  std::vector<Outcome> outcomes(criteria.size());
  for (size_t i : {0, 1, 2, 3, 4, 6, 5}) outcomes[i] = criteria[i].second();
  int unexpected = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    const Outcome& o = outcomes[i];
    bool known = kKnownFailures.count(id) > 0;
    std::printf("criterion %d %s: %s%s | %s\n", id, o.pass ? "PASS" : "FAIL",
                criteria[i].first.c_str(), !o.pass && known ? " (known)" : "", o.detail.c_str());
    if (!o.pass && !known) ++unexpected;
    if (o.pass && known) std::printf("note: criterion %d is listed as known failing but passed\n", id);
  }
  return unexpected == 0 ? 0 : 1;
}

}  // namespace
}  // namespace cbvpg

int main() { return cbvpg::Run(); }
