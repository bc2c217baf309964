// Copyright 2026 The Postulatum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.
//
//   postulatum construct --program <name> --scene <path> [--svg <path>] [--trace <path>]
//   postulatum verify --prop <id> [--trials <n>] [--seed <u64>] [--tol <x>]
//   postulatum analyze --graph <path> [--strict]
//   postulatum render --scene <path> --svg <path>
//
// Exit status: 0 success, 1 a failed assertion, check or rule, 2 bad input.

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "postulatum/construction.hpp"
#include "postulatum/k_checker.hpp"
#include "postulatum/render.hpp"
#include "postulatum/scene_io.hpp"
#include "postulatum/verifier.hpp"

namespace {

using namespace postulatum;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitBadInput = 2;

// Thrown for input problems; main prints it and exits 2.
struct InputError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw InputError{"cannot write " + path};
}

construct::Scene load_scene(const std::string& path) {
  try {
    return construct::parse_scene(read_file(path));
  } catch (const GeometryError& e) {
    throw InputError{path + ": " + e.what()};
  }
}

std::optional<construct::ConstructionProgram> program_named(const std::string& name) {
  if (name == "parallel_i31") return construct::prog_parallel_i31();
  if (name == "bolyai") return construct::prog_bolyai();
  if (name == "copy_angle") return construct::prog_copy_angle();
  return std::nullopt;
}

struct ConstructArgs {
  std::string program;
  std::string scene;
  std::string svg;
  std::string trace;
};

int cmd_construct(const ConstructArgs& a) {
  const std::optional<construct::ConstructionProgram> prog = program_named(a.program);
  if (!prog) throw InputError{"unknown program '" + a.program + "'"};
  const construct::Scene givens = load_scene(a.scene);
  construct::Trace trace;
  try {
    trace = construct::run_program(*prog, givens);
  } catch (const GeometryError& e) {
    throw InputError{a.scene + ": " + e.what()};
  }
  const std::string text = construct::format_trace(trace);
  if (a.trace.empty()) {
    std::cout << text;
  } else {
    write_file(a.trace, text);
  }
  if (!a.svg.empty()) write_file(a.svg, render::render_svg(trace));
  if (!trace.ok()) {
    const construct::TraceFailure& f = *trace.failure;
    std::cerr << "postulatum: " << a.program << " failed at step " << f.step << ": "
              << f.message << "\n";
    return kExitFailed;
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string prop;
  std::uint64_t trials = 1000;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
};

std::uint64_t default_seed() {
  const char* env = std::getenv("POSTULATUM_SEED");
  if (env == nullptr || *env == '\0') return 42;
  std::uint64_t v = 0;
  const std::string_view s(env);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InputError{"POSTULATUM_SEED is not an unsigned 64-bit integer: " + std::string(s)};
  }
  return v;
}

int cmd_verify(const VerifyArgs& a) {
  verify::TrialConfig cfg;
  cfg.proposition = a.prop;
  cfg.trials = a.trials;
  cfg.seed = a.seed ? *a.seed : default_seed();
  cfg.tolerance = a.tol;
  verify::VerificationReport report;
  try {
    report = verify::run_trials(cfg);
  } catch (const GeometryError& e) {
    throw InputError{e.what()};
  }
  std::cout << verify::format_report(report);
  return report.failures == 0 ? kExitOk : kExitFailed;
}

struct AnalyzeArgs {
  std::string graph;
  bool strict = false;
};

int cmd_analyze(const AnalyzeArgs& a) {
  kgraph::DepGraph g;
  try {
    g = kgraph::parse_graph(read_file(a.graph));
  } catch (const GeometryError& e) {
    throw InputError{a.graph + ": " + e.what()};
  }
  const kgraph::Analysis analysis = kgraph::analyze(g);
  std::cout << kgraph::format_analysis(analysis);
  bool failed = !analysis.violations.empty();
  if (a.strict) {
    const std::vector<std::string> unused = kgraph::unused_properties(g);
    std::cout << "unused-properties: " << unused.size() << "\n";
    for (const std::string& p : unused) std::cout << "  " << p << "\n";
    failed |= !unused.empty();
  }
  return failed ? kExitFailed : kExitOk;
}

struct RenderArgs {
  std::string scene;
  std::string svg;
};

int cmd_render(const RenderArgs& a) {
  const construct::Scene scene = load_scene(a.scene);
  try {
    write_file(a.svg, render::render_svg(scene));
  } catch (const GeometryError& e) {
    throw InputError{a.scene + ": " + e.what()};
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constructions, randomized checks and dependency analysis for parallel theory"};
  app.require_subcommand(1);

  ConstructArgs construct_args;
  CLI::App* construct_cmd = app.add_subcommand("construct", "Run a construction program on a scene");
  construct_cmd->add_option("--program", construct_args.program, "parallel_i31 | bolyai | copy_angle")
      ->required();
  construct_cmd->add_option("--scene", construct_args.scene, "Scene file with the givens")->required();
  construct_cmd->add_option("--svg", construct_args.svg, "Write a figure of the trace");
  construct_cmd->add_option("--trace", construct_args.trace, "Write the trace here instead of stdout");

  VerifyArgs verify_args;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run seeded trials of a proposition");
  verify_cmd->add_option("--prop", verify_args.prop, "i27_i29 | fp | i30 | 4.1 | 4.2 | 4.3 | bolyai")
      ->required();
  verify_cmd->add_option("--trials", verify_args.trials, "Number of trials")
      ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
  verify_cmd->add_option("--seed", verify_args.seed, "Seed (default $POSTULATUM_SEED, else 42)");
  verify_cmd->add_option("--tol", verify_args.tol, "Override the decision tolerance");

  AnalyzeArgs analyze_args;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Check a dependency graph against K2-K4");
  analyze_cmd->add_option("--graph", analyze_args.graph, "Graph file (.kg)")->required();
  analyze_cmd->add_flag("--strict", analyze_args.strict, "Also fail on unused properties");

  RenderArgs render_args;
  CLI::App* render_cmd = app.add_subcommand("render", "Draw a scene file as SVG");
  render_cmd->add_option("--scene", render_args.scene, "Scene file")->required();
  render_cmd->add_option("--svg", render_args.svg, "Output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*construct_cmd) return cmd_construct(construct_args);
    if (*verify_cmd) return cmd_verify(verify_args);
    if (*analyze_cmd) return cmd_analyze(analyze_args);
    return cmd_render(render_args);
  } catch (const InputError& e) {
    std::cerr << "postulatum: " << e.message << "\n";
    return kExitBadInput;
  } catch (const GeometryError& e) {
    std::cerr << "postulatum: " << e.what() << "\n";
    return kExitBadInput;
  }
}
