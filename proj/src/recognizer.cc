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

#include "cbvpg/recognizer.h"

#include <sstream>
#include <stdexcept>

#include "cbvpg/decompose.h"
#include "cbvpg/layout.h"
#include "cbvpg/oracle.h"
#include "cbvpg/verify.h"
#include "json.hpp"

namespace cbvpg {

std::string_view DecisionName(Decision d) {
  switch (d) {
    case Decision::kRepresentable:
      return "representable";
    case Decision::kNotRepresentable:
      return "not-representable";
    case Decision::kOutOfScope:
      return "out-of-scope";
  }
  return "?";
}

std::string_view BranchName(Branch b) {
  return b == Branch::kChordal ? "chordal" : "non-chordal";
}

namespace {

Certificate MapCertificate(const Certificate& c, const Subgraph& s) {
  Certificate out{c.family, s.ToParent(c.vertices), std::nullopt};
  if (c.hole) {
    std::vector<Vertex> h;
    for (Vertex v : *c.hole) h.push_back(s.to_parent.at(v));
    out.hole = h;
  }
  return out;
}

Representation MapRepresentation(const Representation& rep, const Subgraph& s) {
  Representation out;
  for (const auto& [v, seg] : rep.segments) out.segments.emplace(s.to_parent.at(v), seg);
  return out;
}

void Reject(ComponentResult& r, Certificate c) {
  r.decision = Decision::kNotRepresentable;
  r.certificate = std::move(c);
}

// Decision for a chordal, diamond-free, K5-free component (local ids).
void ChordalBranch(const Graph& h, const RecognizerOptions& opts,
                   ComponentResult& r) {
  if (auto h0 = FindH0(h)) return Reject(r, {FamilyTag::kH0, *h0, std::nullopt});
  if (auto f1 = FindF1Chordal(h)) return Reject(r, *f1);
  if (h.order() <= opts.oracle_cap) {
    if (auto rep = BruteForceSearch(h, {10, 10, 9, opts.oracle_cap})) {
      r.representation = *rep;
    } else {
      r.note = "oracle-exhausted";
    }
    return;
  }
  PruneResult pr = PruneSimplicial(h);
  if (pr.core.graph.order() == 0) {
    r.representation = ReinsertSimplicial({}, pr.log, &r.refinements);
    return;
  }
  r.note = "chordal-construction-out-of-scope";
}

void NonChordalBranch(const Graph& h, ComponentResult& r) {
  PruneResult pr = PruneSimplicial(h);
  const Subgraph& core = pr.core;
  std::optional<Hole> hole = FindHole(core.graph);
  if (!hole) throw std::logic_error("pruning removed every hole");
  Hole mapped;
  for (Vertex v : hole->cycle) mapped.cycle.push_back(core.to_parent[v]);
  r.hole = mapped;
  Decomposition d = DecomposeAroundHole(core.graph, *hole);
  if (auto* err = std::get_if<StructureError>(&d)) {
    r.decision = Decision::kOutOfScope;
    r.note = err->reason;
    return;
  }
  if (auto* c = std::get_if<Certificate>(&d)) {
    return Reject(r, MapCertificate(*c, core));
  }
  const HoleStructure& hs = std::get<HoleStructure>(d);
  r.types = hs.types;
  OrientationResult o = FindFeasibleOrientation(hs);
  if (auto* c = o.certificate()) return Reject(r, MapCertificate(*c, core));
  if (auto* ob = o.obstruction()) {
    r.decision = Decision::kNotRepresentable;
    r.obstruction = Obstruction{ob->reason, core.ToParent(ob->vertices)};
    return;
  }
  r.orientation = *o.orientation();
  Representation rep =
      MapRepresentation(BuildStaircase(hs, *o.orientation()), core);
  r.representation = ReinsertSimplicial(rep, pr.log, &r.refinements);
}

ComponentResult RecognizeComponent(const Graph& h,
                                   const RecognizerOptions& opts) {
  ComponentResult r;
  r.branch = IsChordal(h) ? Branch::kChordal : Branch::kNonChordal;
  if (auto d = FindDiamond(h)) {
    Reject(r, {FamilyTag::kDiamond, *d, std::nullopt});
  } else if (auto k5 = FindK5(h)) {
    Reject(r, {FamilyTag::kK5, *k5, std::nullopt});
  } else if (r.branch == Branch::kChordal) {
    ChordalBranch(h, opts, r);
  } else {
    NonChordalBranch(h, r);
  }
  if (r.representation && !VerifyRepresentation(h, *r.representation).empty()) {
    throw std::logic_error("constructed representation failed verification");
  }
  if (r.certificate && !CheckCertificate(h, *r.certificate)) {
    throw std::logic_error("emitted certificate failed validation: " +
                           ExplainCertificate(h, *r.certificate));
  }
  return r;
}

nlohmann::json CertificateJson(const Certificate& c) {
  nlohmann::json j{{"family", FamilyName(c.family)}, {"vertices", c.vertices}};
  if (c.hole) j["hole"] = *c.hole;
  return j;
}

nlohmann::json RepresentationJson(const Representation& rep) {
  return nlohmann::json::parse(FormatRepresentationJson(rep));
}

template <typename R>
void Common(nlohmann::json& j, const R& r) {
  j["decision"] = DecisionName(r.decision);
  j["branch"] = BranchName(r.branch);
  if (r.certificate) j["certificate"] = CertificateJson(*r.certificate);
  if (r.obstruction) {
    j["obstruction"] = {{"reason", r.obstruction->reason},
                        {"vertices", r.obstruction->vertices}};
  }
  if (r.representation) j["representation"] = RepresentationJson(*r.representation);
  if (!r.note.empty()) j["note"] = r.note;
}

}  // namespace

RecognitionResult Recognize(const Graph& g, const RecognizerOptions& opts) {
  RecognitionResult out;
  out.branch = IsChordal(g) ? Branch::kChordal : Branch::kNonChordal;
  std::vector<Representation> parts;
  bool all_drawn = true;
  for (const VertexSet& comp : ConnectedComponents(g)) {
    Subgraph s = InducedSubgraph(g, comp);
    ComponentResult local = RecognizeComponent(s.graph, opts);
    ComponentResult r = local;
    r.vertices = comp;
    if (local.certificate) r.certificate = MapCertificate(*local.certificate, s);
    if (local.obstruction) {
      r.obstruction->vertices = s.ToParent(local.obstruction->vertices);
    }
    if (local.representation) {
      r.representation = MapRepresentation(*local.representation, s);
      parts.push_back(*r.representation);
    } else {
      all_drawn = false;
    }
    if (local.hole) {
      r.hole = Hole{};
      for (Vertex v : local.hole->cycle) r.hole->cycle.push_back(s.to_parent[v]);
    }
    out.components.push_back(std::move(r));
  }
  for (const ComponentResult& c : out.components) {
    if (c.decision != Decision::kNotRepresentable) continue;
    out.decision = Decision::kNotRepresentable;
    out.certificate = c.certificate;
    out.obstruction = c.obstruction;
    break;
  }
  if (out.decision == Decision::kRepresentable) {
    for (const ComponentResult& c : out.components) {
      if (c.decision == Decision::kOutOfScope) {
        out.decision = Decision::kOutOfScope;
        out.note = c.note;
        break;
      }
    }
  }
  if (out.decision == Decision::kRepresentable) {
    if (all_drawn) {
      out.representation = PlaceSideBySide(parts);
    } else {
      for (const ComponentResult& c : out.components) {
        if (!c.representation) {
          out.note = c.note;
          break;
        }
      }
    }
  }
  return out;
}

std::string FormatResultJson(const RecognitionResult& r) {
  nlohmann::json j;
  Common(j, r);
  j["components"] = nlohmann::json::array();
  for (const ComponentResult& c : r.components) {
    nlohmann::json cj{{"vertices", c.vertices}};
    Common(cj, c);
    if (c.hole) cj["hole"] = c.hole->cycle;
    if (!c.types.empty()) {
      std::vector<int> t;
      for (VertexType x : c.types) t.push_back(static_cast<int>(x));
      cj["types"] = t;
    }
    if (c.orientation) cj["orientation"] = OrientationString(*c.orientation);
    if (c.refinements) cj["refinements"] = c.refinements;
    j["components"].push_back(cj);
  }
  return j.dump() + "\n";
}

std::string FormatResultText(const RecognitionResult& r) {
  std::ostringstream out;
  out << "decision: " << DecisionName(r.decision) << "\n";
  out << "branch: " << BranchName(r.branch) << "\n";
  out << "components: " << r.components.size() << "\n";
  if (r.certificate) {
    out << "certificate: " << FamilyName(r.certificate->family) << " on";
    for (Vertex v : r.certificate->vertices) out << ' ' << v;
    out << "\n";
  }
  if (r.obstruction) out << "obstruction: " << r.obstruction->reason << "\n";
  if (r.representation) {
    out << "representation: " << r.representation->segments.size()
        << " segments\n";
  }
  if (!r.note.empty()) out << "note: " << r.note << "\n";
  return out.str();
}

}  // namespace cbvpg
