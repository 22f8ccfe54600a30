#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hsgon/error.hpp"
#include "hsgon/gen.hpp"
#include "hsgon/report.hpp"

using namespace hsgon;

namespace {

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::ParseError:
    case ErrorCode::UnknownLetter:
    case ErrorCode::AlphabetMismatch:
    case ErrorCode::InfiniteIndex:
    case ErrorCode::NotTransitive:
    case ErrorCode::NotPermutation:
    case ErrorCode::IoError:
      return 2;
    case ErrorCode::DensityMismatch:
    case ErrorCode::NotDisjoint:
    case ErrorCode::NotCovering:
    case ErrorCode::IndexOne:
      return 3;
    case ErrorCode::StateSpaceTooLarge:
    case ErrorCode::GuardExceeded:
    case ErrorCode::TooManyTerms:
    case ErrorCode::RetriesExhausted:
    case ErrorCode::BudgetExhausted:
      return 4;
    default:
      return 1;
  }
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

CosetPartition load_partition(const std::string& path, std::uint64_t guard) {
  return verify_partition(parse_partition(read_json_file(path)), guard);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schreier graphs, coset partitions of free groups and their vanishing sums"};
  app.require_subcommand(1);

  std::string path;
  unsigned k_max = 8;
  std::string svg_dir;
  bool timing = false;
  std::uint64_t state_guard = kDefaultStateGuard;

  auto* graph = app.add_subcommand("graph", "Schreier graph of a subgroup: index, period, A, det(I - zA)");
  graph->add_option("subgroup", path, "subgroup JSON file")->required();

  auto* census = app.add_subcommand("census", "Count positive words of each length in every part");
  census->add_option("partition", path, "partition JSON file")->required();
  census->add_option("--kmax", k_max, "longest word length")->capture_default_str();
  census->add_option("--state-guard", state_guard, "bound on explored states")->capture_default_str();

  auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis of a coset partition");
  analyze_cmd->add_option("partition", path, "partition JSON file")->required();
  analyze_cmd->add_option("--kmax", k_max, "series terms checked against n^k")->capture_default_str();
  analyze_cmd->add_option("--svg-dir", svg_dir, "write one SVG per polygon here");
  analyze_cmd->add_flag("--timing", timing, "add wall-clock seconds under \"timing\"");
  analyze_cmd->add_option("--state-guard", state_guard, "bound on explored states")->capture_default_str();

  GenConfig gen;
  unsigned target = 0;
  std::size_t budget = 2000;
  auto* random = app.add_subcommand("random", "Emit a random coset partition as JSON");
  random->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
  random->add_option("--depth", gen.depth, "refinement steps")->capture_default_str();
  random->add_option("--rank", gen.rank, "number of free generators")->capture_default_str();
  random->add_option("--guard", gen.guard, "largest index a part may reach")->capture_default_str();
  random->add_option("--target-period", target, "retry until the largest period equals this");
  random->add_option("--budget", budget, "attempts allowed for --target-period")->capture_default_str();
  random->add_option("--coherent", gen.coherent_percent, "percent of lifts sharing one permutation per vertex")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*graph) {
      print(graph_report(parse_subgroup(read_json_file(path))));
    } else if (*census) {
      print(census_report(load_partition(path, state_guard), k_max, state_guard));
    } else if (*analyze_cmd) {
      const auto start = std::chrono::steady_clock::now();
      const CosetPartition partition = load_partition(path, state_guard);
      AnalyzeOptions options;
      options.k_max = k_max;
      options.svg_dir = svg_dir;
      Analysis a = analyze(partition, options);
      if (timing) {
        a.report["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
      }
      print(a.report);
      for (const auto& v : a.violations) std::cerr << v << '\n';
      if (!a.violations.empty()) return 1;
    } else if (*random) {
      gen.state_guard = state_guard;
      print(partition_json(target == 0 ? generate(gen) : generate_with_period(gen, target, budget)));
    }
  } catch (const Error& e) {
    Json err = {{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
    if (!e.info().empty()) {
      Json info = Json::array();
      for (std::size_t x : e.info()) info.push_back(x);
      err["info"] = info;
    }
    std::cerr << err.dump() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", "Internal"}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }
  return 0;
}
