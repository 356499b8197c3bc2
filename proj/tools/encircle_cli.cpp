#include "encircle/mec.hpp"
#include "encircle/pipeline.hpp"
#include "encircle/scenario.hpp"
#include "encircle/svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iostream>
#include <span>
#include <string>

#ifndef ENCIRCLE_VERSION
#define ENCIRCLE_VERSION "unknown"
#endif

namespace {

enum ExitCode : int { kOk = 0, kParse = 2, kAlgorithm = 3, kIo = 4 };

using Json = nlohmann::ordered_json;

Json circle_json(const encircle::MecResult<double>& m) {
  return {{"cx", m.circle.center.x()}, {"cy", m.circle.center.y()}, {"r", m.circle.radius}, {"support", m.support}};
}

int cmd_generate(std::size_t count, std::size_t capacity, double extent, std::uint64_t seed, double altitude,
                 const std::string& out) {
  const auto scenario = encircle::generate_scenario(count, capacity, extent, {seed}, altitude);
  encircle::save_scenario(scenario, out);
  return kOk;
}

int cmd_run(const std::string& scenario_path, const std::string& out, const std::string& svg) {
  const auto scenario = encircle::load_scenario(scenario_path);
  const auto report = encircle::run_pipeline(scenario);
  encircle::write_text(out, encircle::report_to_json(report));
  if (!svg.empty()) encircle::render_svg(scenario, report, svg);
  return kOk;
}

int cmd_mec(const std::string& scenario_path, bool oracle) {
  const auto scenario = encircle::load_scenario(scenario_path);
  std::vector<encircle::Point2d> points;
  for (const auto& n : scenario.nodes) points.push_back(n.point);
  const std::span<const encircle::Point2d> view(points);

  const auto welzl = encircle::mec_welzl(view, scenario.seed, scenario.tolerance);
  Json out = circle_json(welzl);
  int code = kOk;
  if (oracle) {
    const auto brute = encircle::mec_bruteforce(view, scenario.tolerance);
    const double diff = std::abs(welzl.circle.radius - brute.circle.radius);
    const bool agree = diff <= 1e-9 * std::max(1.0, brute.circle.radius);
    out["oracle"] = circle_json(brute);
    out["agree"] = agree;
    if (!agree) code = kAlgorithm;
  }
  std::cout << out.dump(2) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constrained enclosing-circle UAV placement and link evaluation"};
  app.require_subcommand(1);

  std::size_t count = 0, capacity = 2;
  double extent = 1000.0, altitude = encircle::kDefaultAltitude;
  std::uint64_t seed = 0;
  std::string out, scenario_path, svg;
  bool oracle = false;

  auto* generate = app.add_subcommand("generate", "Write a random scenario file");
  generate->add_option("--count", count, "Number of nodes")->required()->check(CLI::Range(std::size_t{2}, std::size_t{1} << 24));
  generate->add_option("--capacity", capacity, "Maximum number of covered nodes")->required()->check(CLI::Range(std::size_t{2}, std::size_t{1} << 24));
  generate->add_option("--extent", extent, "Side of the square deployment area (m)")->required()->check(CLI::NonNegativeNumber);
  generate->add_option("--seed", seed, "RNG seed")->required();
  generate->add_option("--altitude", altitude, "UAV altitude (m)")->check(CLI::PositiveNumber);
  generate->add_option("--out", out, "Output scenario file")->required();

  auto* run = app.add_subcommand("run", "Place the UAV and evaluate every link");
  run->add_option("--scenario", scenario_path, "Scenario JSON")->required();
  run->add_option("--out", out, "Report JSON")->required();
  run->add_option("--svg", svg, "Optional SVG rendering");

  auto* mec = app.add_subcommand("mec", "Print the minimum enclosing circle of all nodes");
  mec->add_option("--scenario", scenario_path, "Scenario JSON")->required();
  mec->add_flag("--oracle", oracle, "Cross-check against the brute-force solver");

  auto* version = app.add_subcommand("version", "Print the version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*generate) return cmd_generate(count, capacity, extent, seed, altitude, out);
    if (*run) return cmd_run(scenario_path, out, svg);
    if (*mec) return cmd_mec(scenario_path, oracle);
    if (*version) {
      std::cout << "encircle " << ENCIRCLE_VERSION << "\n";
      return kOk;
    }
  } catch (const encircle::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const encircle::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kAlgorithm;
  }
  return kOk;
}
