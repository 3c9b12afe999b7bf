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

// Command-line front end. Exit codes: 0 success / representable / found,
// 1 not representable / violations / exhausted, 2 errors and out-of-scope.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cbvpg/families.h"
#include "cbvpg/layout.h"
#include "cbvpg/oracle.h"
#include "cbvpg/recognizer.h"
#include "cbvpg/verify.h"
#include "json.hpp"

namespace {

using namespace cbvpg;

constexpr int kError = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void Diagnose(const std::string& msg) {
  bool color = std::getenv("NO_COLOR") == nullptr && isatty(STDERR_FILENO);
  std::cerr << (color ? "\033[31merror:\033[0m " : "error: ") << msg << "\n";
}

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void WriteOutput(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

F4Spec ReadF4Spec(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed F4 spec: ") + e.what());
  }
  if (!j.is_object() || !j.contains("gaps") || !j["gaps"].is_array()) {
    throw UsageError("F4 spec needs a \"gaps\" array");
  }
  F4Spec spec;
  for (const auto& gap : j["gaps"]) {
    if (!gap.is_array()) throw UsageError("each gap must be an array of 0/1");
    std::vector<GapType> g;
    for (const auto& t : gap) {
      if (t == 0) {
        g.push_back(GapType::kType0);
      } else if (t == 1) {
        g.push_back(GapType::kType1);
      } else {
        throw UsageError("gap entries must be 0 (Type 0) or 1 (Type 1)");
      }
    }
    spec.gaps.push_back(std::move(g));
  }
  return spec;
}

Graph Generate(const std::string& family, int k, const std::string& f4_file) {
  auto need_k = [&](const char* flag) {
    if (k < 0) throw UsageError(family + " needs " + flag);
    return k;
  };
  try {
    if (family == "k5") return MakeK5();
    if (family == "diamond" || family == "k4-e") return MakeDiamond();
    if (family == "h0") return MakeH0();
    if (family == "f1") return MakeF1(need_k("--path-len"));
    if (family == "f2") return MakeF2(need_k("--k"));
    if (family == "f3") return MakeF3(need_k("--k"));
    if (family == "f5") return MakeF5(need_k("--k"));
    if (family == "f4") {
      if (f4_file.empty()) throw UsageError("f4 needs --f4-spec");
      return MakeF4(ReadF4Spec(ReadInput(f4_file)));
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown family " + family +
                   " (k5, diamond, h0, f1, f2, f3, f4, f5)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Contact B0-VPG recognition for circular-arc graphs.\n"
      "Inputs are PROMISED to be circular-arc graphs; this is not checked. "
      "Inputs that break the hole structure are reported out of scope, and a "
      "chordal graph outside the class may be accepted wrongly."};
  app.require_subcommand(1);

  std::string graph_file, rep_file, out_file, family, f4_file;
  bool json = false;
  std::vector<int> grid{10, 10};
  int max_len = 9, cap = 5, k = -1, path_len = -1;

  auto* recognize = app.add_subcommand("recognize", "decide representability");
  recognize->add_option("graph", graph_file, "graph file, - for stdin")->required();
  recognize->add_flag("--json", json, "print the full result as JSON");

  auto* verify = app.add_subcommand("verify", "check a representation");
  verify->add_option("graph", graph_file, "graph file, - for stdin")->required();
  verify->add_option("representation", rep_file,
                     "representation or recognize --json output")
      ->required();

  auto* oracle = app.add_subcommand("oracle", "exhaustive search (tiny graphs)");
  oracle->add_option("graph", graph_file, "graph file, - for stdin")->required();
  oracle->add_option("--grid", grid, "grid width and height")->expected(2);
  oracle->add_option("--max-len", max_len, "longest segment");
  oracle->add_option("--cap", cap, "largest vertex count accepted");

  auto* gen = app.add_subcommand("gen", "write a forbidden graph");
  gen->add_option("family", family, "k5, diamond, h0, f1, f2, f3, f4, f5")->required();
  gen->add_option("--k", k, "hole length (f2, f3, f5)");
  gen->add_option("--path-len", path_len, "path length (f1)");
  gen->add_option("--f4-spec", f4_file, "JSON file {\"gaps\": [[0,1,1], ...]}");
  gen->add_flag("--json", json, "JSON graph format");

  auto* render = app.add_subcommand("render", "draw a representation as SVG");
  render->add_option("representation", rep_file, "representation file")->required();
  render->add_option("-o,--output", out_file, "SVG file, stdout by default");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*recognize) {
      Graph g = ParseGraph(ReadInput(graph_file));
      RecognitionResult r = Recognize(g);
      std::cout << (json ? FormatResultJson(r) : FormatResultText(r));
      switch (r.decision) {
        case Decision::kRepresentable:
          return 0;
        case Decision::kNotRepresentable:
          return 1;
        case Decision::kOutOfScope:
          Diagnose("out of scope: " + r.note);
          return kError;
      }
    }
    if (*verify) {
      Graph g = ParseGraph(ReadInput(graph_file));
      Representation rep = ParseRepresentationJson(ReadInput(rep_file));
      auto violations = VerifyRepresentation(g, rep);
      std::cout << FormatViolationsJson(violations);
      return violations.empty() ? 0 : 1;
    }
    if (*oracle) {
      Graph g = ParseGraph(ReadInput(graph_file));
      auto rep = BruteForceSearch(g, {grid[0], grid[1], max_len, cap});
      if (!rep) {
        std::cout << "exhausted\n";
        return 1;
      }
      std::cout << FormatRepresentationJson(*rep);
      return 0;
    }
    if (*gen) {
      if (k >= 0 && path_len >= 0) throw UsageError("give --k or --path-len, not both");
      Graph g = Generate(family, k >= 0 ? k : path_len, f4_file);
      std::cout << (json ? FormatGraphJson(g) : FormatGraphText(g));
      return 0;
    }
    if (*render) {
      Representation rep = ParseRepresentationJson(ReadInput(rep_file));
      WriteOutput(out_file, RenderSvg(rep));
      return 0;
    }
  } catch (const std::exception& e) {
    Diagnose(e.what());
    return kError;
  }
  return kError;
}
