#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fuzzyaf/cli.hpp"

namespace {

using namespace fuzzyaf;

std::uint64_t budget_from_env() {
  const char* env = std::getenv("FAF_BUDGET");
  if (env == nullptr || *env == '\0') return default_budget;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used == std::string(env).size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  std::cerr << "warning: ignoring invalid FAF_BUDGET='" << env << "'\n";
  return default_budget;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solver for fuzzy argumentation frameworks under Goedel semantics"};
  app.require_subcommand(1);

  std::string format = "auto";
  std::string semantics = "grounded";
  std::string engine = "scc";
  std::string lattice = "breakpoints";
  bool no_prune = false;
  const std::uint64_t budget = budget_from_env();

  cli::SolveRequest solve;
  std::size_t max_extensions = 10000;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Enumerate the extensions of a framework");
  solve_cmd->add_option("-i,--input", solve.input, "Framework file (fapx or JSON)")->required();
  solve_cmd->add_option("-s,--semantics", semantics,
                        "conflict_free|admissible|complete|preferred|grounded|stable")
      ->capture_default_str();
  solve_cmd->add_option("-e,--engine", engine, "scc|direct")->capture_default_str();
  solve_cmd->add_option("-l,--lattice", lattice, "breakpoints|grid:k")->capture_default_str();
  solve_cmd->add_option("-m,--max-extensions", max_extensions, "Print at most this many extensions (0 = unlimited)")
      ->capture_default_str();
  solve_cmd->add_flag("--no-prune", no_prune, "Keep attacks that are tolerable at full degrees");
  solve_cmd->add_option("--trace", solve.trace_path, "Write one JSON line per recursive call to this file");
  solve_cmd->add_option("-f,--format", format, "auto|fapx|json")->capture_default_str();

  cli::CheckRequest check;
  std::string check_semantics = "all";
  CLI::App* check_cmd = app.add_subcommand("check", "Test a fuzzy set against each semantics with both checkers");
  check_cmd->add_option("-i,--input", check.input, "Framework file")->required();
  check_cmd->add_option("-x,--extension", check.extension, "Fuzzy set to check (arg lines or JSON)")->required();
  check_cmd->add_option("-s,--semantics", check_semantics, "A semantics name, or all")->capture_default_str();
  check_cmd->add_option("-c,--candidates", check.candidates, "Candidate set C (defaults to all arguments)");
  check_cmd->add_option("-l,--lattice", lattice, "breakpoints|grid:k")->capture_default_str();
  check_cmd->add_flag("--no-prune", no_prune, "Keep attacks that are tolerable at full degrees");
  check_cmd->add_option("-f,--format", format, "auto|fapx|json")->capture_default_str();

  std::string scc_input;
  std::string scc_output = "-";
  CLI::App* scc_cmd = app.add_subcommand("scc", "Export the component graph as DOT");
  scc_cmd->add_option("-i,--input", scc_input, "Framework file")->required();
  scc_cmd->add_option("-o,--output", scc_output, "DOT file, - for stdout")->capture_default_str();
  scc_cmd->add_option("-f,--format", format, "auto|fapx|json")->capture_default_str();

  cli::BenchRequest bench;
  std::string engines = "scc,direct";
  std::string bench_semantics = "preferred";
  CLI::App* bench_cmd = app.add_subcommand("bench", "Time both engines and compare their outputs");
  auto* bench_input = bench_cmd->add_option("-i,--input", bench.input, "Framework file");
  auto* bench_gen = bench_cmd->add_option("-g,--generate", bench.generator,
                                          "chain(k) | cycle(n, degree) | layered(w, d)");
  bench_input->excludes(bench_gen);
  bench_cmd->add_option("-e,--engines", engines, "Comma-separated engines")->capture_default_str();
  bench_cmd->add_option("-s,--semantics", bench_semantics, "Semantics")->capture_default_str();
  bench_cmd->add_option("-l,--lattice", lattice, "breakpoints|grid:k")->capture_default_str();
  bench_cmd->add_option("-r,--repetitions", bench.repetitions, "Runs per engine")->capture_default_str();
  bench_cmd->add_flag("--no-prune", no_prune, "Keep attacks that are tolerable at full degrees");
  bench_cmd->add_option("-f,--format", format, "auto|fapx|json")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::exit_usage;
  }

  try {
    const InputFormat fmt = input_format_from_string(format);
    const cli::LatticeSpec lat = cli::LatticeSpec::parse(lattice);
    if (*solve_cmd) {
      solve.format = fmt;
      solve.semantics = semantics_from_string(semantics);
      solve.engine = cli::engine_from_string(engine);
      solve.lattice = lat;
      solve.prune = !no_prune;
      solve.budget = budget;
      if (max_extensions == 0) solve.max_extensions.reset();
      else solve.max_extensions = max_extensions;
      return cli::cmd_solve(solve, std::cout, std::cerr);
    }
    if (*check_cmd) {
      check.format = fmt;
      if (check_semantics != "all") check.semantics = semantics_from_string(check_semantics);
      check.lattice = lat;
      check.prune = !no_prune;
      check.budget = budget;
      return cli::cmd_check(check, std::cout, std::cerr);
    }
    if (*scc_cmd) return cli::cmd_scc_dot(scc_input, scc_output, fmt, std::cout, std::cerr);
    if (*bench_cmd) {
      if (bench.input.empty() && bench.generator.empty()) {
        std::cerr << "error: bench needs --input or --generate\n";
        return cli::exit_usage;
      }
      bench.format = fmt;
      bench.semantics = semantics_from_string(bench_semantics);
      bench.lattice = lat;
      bench.prune = !no_prune;
      bench.budget = budget;
      bench.engines.clear();
      std::size_t start = 0;
      while (start <= engines.size()) {
        const std::size_t comma = engines.find(',', start);
        const std::string name = engines.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!name.empty()) bench.engines.push_back(cli::engine_from_string(name));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      return cli::cmd_bench(bench, std::cout, std::cerr);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::exit_usage;
  }
  return cli::exit_usage;
}
