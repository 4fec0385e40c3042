#ifndef FUZZYAF_CLI_HPP
#define FUZZYAF_CLI_HPP

// The commands behind the fafsolve tool. Each takes a request, writes its
// result to `out` and diagnostics to `err`, and returns the process exit code.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fuzzyaf/format.hpp"
#include "fuzzyaf/generators.hpp"
#include "fuzzyaf/recursive.hpp"
#include "fuzzyaf/report.hpp"
#include "fuzzyaf/semantics.hpp"

namespace fuzzyaf::cli {

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_parse = 2, exit_budget = 3, exit_mismatch = 4 };

enum class Engine { scc, direct };

inline std::string_view to_string(Engine e) { return e == Engine::scc ? "scc" : "direct"; }

inline Engine engine_from_string(std::string_view s) {
  if (s == "scc") return Engine::scc;
  if (s == "direct") return Engine::direct;
  throw std::invalid_argument("unknown engine '" + std::string(s) + "'");
}

/// "breakpoints" or "grid:k" with k >= 2.
struct LatticeSpec {
  int grid = 0;  // 0 selects the breakpoint lattice

  static LatticeSpec parse(std::string_view s) {
    if (s == "breakpoints") return {};
    if (s.rfind("grid:", 0) == 0) {
      const std::string k(s.substr(5));
      if (k.empty() || !std::all_of(k.begin(), k.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
          k.size() > 6) {
        throw std::invalid_argument("grid step must be an integer: '" + std::string(s) + "'");
      }
      const int step = std::stoi(k);
      if (step < 2) throw std::invalid_argument("grid step must be at least 2");
      return {step};
    }
    throw std::invalid_argument("unknown lattice spec '" + std::string(s) + "'");
  }

  std::string to_string() const { return grid == 0 ? "breakpoints" : "grid:" + std::to_string(grid); }

  DegreeLattice resolve(const Framework& faf) const {
    return grid == 0 ? breakpoint_lattice(faf) : grid_lattice(faf, grid);
  }
};

struct SolveRequest {
  std::string input;
  InputFormat format = InputFormat::automatic;
  SemanticsKind semantics = SemanticsKind::grounded;
  Engine engine = Engine::scc;
  LatticeSpec lattice;
  std::optional<std::size_t> max_extensions = 10000;  // nullopt = unlimited
  bool prune = true;
  std::uint64_t budget = default_budget;
  std::string trace_path;  // empty = no trace
};

struct SolveResult {
  ExtensionSet extensions;
  bool truncated = false;
  double elapsed_ms = 0;
};

namespace detail {

/// Thrown for unreadable files; reported like a parse failure.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Framework load(const std::string& path, InputFormat format) { return parse_faf(read_file(path), format); }

inline double millis_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

inline void require_engine_supports(Engine engine, SemanticsKind kind) {
  if (engine == Engine::scc && (kind == SemanticsKind::stable || kind == SemanticsKind::conflict_free)) {
    throw std::invalid_argument("engine 'scc' does not support semantics '" + std::string(fuzzyaf::to_string(kind)) +
                                "'; use --engine direct");
  }
}

}  // namespace detail

/// Runs one engine on a framework; grounded goes through the single-pass
/// component algorithm on the scc engine.
inline ExtensionSet run_engine(const Framework& faf, SemanticsKind kind, Engine engine, const DegreeLattice& lattice,
                               const EngineOptions& opts) {
  detail::require_engine_supports(engine, kind);
  if (engine == Engine::direct) return enumerate_extensions(faf, faf.args(), kind, lattice, opts.budget);
  if (kind == SemanticsKind::grounded && !opts.trace) return {grounded_scc(faf, faf.args())};
  return gf_enumerate(faf, faf.args(), kind, lattice, opts);
}

inline SolveResult solve(const Framework& faf, const SolveRequest& req, std::ostream* trace = nullptr) {
  EngineOptions opts;
  opts.prune = req.prune;
  opts.budget = req.budget;
  if (trace) opts.trace = [trace](const TraceRecord& r) { *trace << trace_to_json(r).dump() << '\n'; };
  const DegreeLattice lattice = req.lattice.resolve(faf);
  const auto t0 = std::chrono::steady_clock::now();
  SolveResult res;
  res.extensions = run_engine(faf, req.semantics, req.engine, lattice, opts);
  res.elapsed_ms = detail::millis_since(t0);
  res.truncated = req.max_extensions && res.extensions.size() > *req.max_extensions;
  return res;
}

inline nlohmann::ordered_json solve_result_json(const Framework& faf, const SolveRequest& req, const SolveResult& res) {
  nlohmann::ordered_json j;
  j["input"] = req.input;
  j["semantics"] = fuzzyaf::to_string(req.semantics);
  j["engine"] = to_string(req.engine);
  j["lattice"] = req.lattice.to_string();
  j["prune"] = req.prune;
  j["extensions"] = extensions_to_json(faf.universe(), res.extensions,
                                       req.max_extensions ? *req.max_extensions : res.extensions.size());
  j["count"] = res.extensions.size();
  j["truncated"] = res.truncated;
  j["elapsed_ms"] = res.elapsed_ms;
  return j;
}

inline int cmd_solve(const SolveRequest& req, std::ostream& out, std::ostream& err) {
  Framework faf;
  try {
    faf = detail::load(req.input, req.format);
  } catch (const std::exception& e) {
    err << "error: " << req.input << ": " << e.what() << '\n';
    return exit_parse;
  }
  try {
    std::ofstream trace_file;
    if (!req.trace_path.empty()) {
      trace_file.open(req.trace_path);
      if (!trace_file) {
        err << "error: cannot write trace '" << req.trace_path << "'\n";
        return exit_usage;
      }
    }
    const SolveResult res = solve(faf, req, req.trace_path.empty() ? nullptr : &trace_file);
    out << solve_result_json(faf, req, res).dump(2) << '\n';
    return exit_ok;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (set FAF_BUDGET to raise it)\n";
    return exit_budget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

struct CheckRequest {
  std::string input;
  std::string extension;
  std::optional<SemanticsKind> semantics;  // nullopt = every semantics
  std::string candidates;                  // optional C file
  InputFormat format = InputFormat::automatic;
  LatticeSpec lattice;
  bool prune = true;
  std::uint64_t budget = default_budget;
};

/// Verdicts from the direct checker and from the recursive checker (null
/// where the semantics has no recursive form).
inline int cmd_check(const CheckRequest& req, std::ostream& out, std::ostream& err) {
  Framework faf;
  FuzzySet ext;
  FuzzySet cand;
  try {
    faf = detail::load(req.input, req.format);
    ext = parse_fuzzy_set(detail::read_file(req.extension), faf);
    cand = req.candidates.empty() ? faf.args() : parse_fuzzy_set(detail::read_file(req.candidates), faf);
  } catch (const UnknownArgument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_parse;
  }
  if (!fuzzy_subset(ext, faf.args())) {
    err << "error: the extension exceeds some argument's degree\n";
    return exit_usage;
  }
  if (!fuzzy_subset(cand, faf.args())) {
    err << "error: C exceeds some argument's degree\n";
    return exit_usage;
  }
  std::vector<SemanticsKind> kinds;
  if (req.semantics) kinds.push_back(*req.semantics);
  else
    kinds = {SemanticsKind::conflict_free, SemanticsKind::admissible, SemanticsKind::complete,
             SemanticsKind::preferred,     SemanticsKind::grounded,   SemanticsKind::stable};
  try {
    const DegreeLattice lattice = req.lattice.resolve(faf);
    EngineOptions opts;
    opts.prune = req.prune;
    opts.budget = req.budget;
    nlohmann::ordered_json j;
    j["input"] = req.input;
    j["extension"] = fuzzy_set_to_json(faf.universe(), ext);
    auto& verdicts = j["verdicts"] = nlohmann::ordered_json::array();
    for (SemanticsKind k : kinds) {
      nlohmann::ordered_json v;
      v["semantics"] = fuzzyaf::to_string(k);
      v["direct"] = is_extension(faf, cand, ext, k, lattice, req.budget);
      if (k == SemanticsKind::stable || k == SemanticsKind::conflict_free) v["scc"] = nullptr;
      else v["scc"] = gf_check(faf, cand, ext, k, lattice, opts);
      verdicts.push_back(std::move(v));
    }
    out << j.dump(2) << '\n';
    return exit_ok;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return exit_budget;
  }
}

/// Writes the condensation DOT to `output` ("-" or empty for `out`).
inline int cmd_scc_dot(const std::string& input, const std::string& output, InputFormat format, std::ostream& out,
                       std::ostream& err) {
  Framework faf;
  try {
    faf = detail::load(input, format);
  } catch (const std::exception& e) {
    err << "error: " << input << ": " << e.what() << '\n';
    return exit_parse;
  }
  const std::string dot = condensation_dot(faf);
  if (output.empty() || output == "-") {
    out << dot;
    return exit_ok;
  }
  std::ofstream f(output);
  if (!f || !(f << dot)) {
    err << "error: cannot write '" << output << "'\n";
    return exit_parse;
  }
  return exit_ok;
}

struct BenchRequest {
  std::string input;      // file path, or
  std::string generator;  // generator spec
  InputFormat format = InputFormat::automatic;
  std::vector<Engine> engines{Engine::scc, Engine::direct};
  SemanticsKind semantics = SemanticsKind::preferred;
  LatticeSpec lattice;
  int repetitions = 5;
  bool prune = true;
  std::uint64_t budget = default_budget;
};

struct EngineTiming {
  Engine engine;
  std::vector<double> runs_ms;
  double median_ms = 0;
  ExtensionSet output;
};

inline double median(std::vector<double> v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

/// Times each engine and compares their outputs; a mismatch is exit 4.
inline int cmd_bench(const BenchRequest& req, std::ostream& out, std::ostream& err) {
  Framework faf;
  try {
    faf = req.generator.empty() ? detail::load(req.input, req.format) : generate(req.generator);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return req.generator.empty() ? exit_parse : exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_parse;
  }
  if (req.repetitions < 1 || req.engines.empty()) {
    err << "error: need at least one engine and one repetition\n";
    return exit_usage;
  }
  std::vector<EngineTiming> timings;
  try {
    const DegreeLattice lattice = req.lattice.resolve(faf);
    EngineOptions opts;
    opts.prune = req.prune;
    opts.budget = req.budget;
    for (Engine e : req.engines) detail::require_engine_supports(e, req.semantics);
    for (Engine e : req.engines) {
      EngineTiming t{e, {}, 0, {}};
      for (int r = 0; r < req.repetitions; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        ExtensionSet res = run_engine(faf, req.semantics, e, lattice, opts);
        t.runs_ms.push_back(detail::millis_since(t0));
        if (r == 0) t.output = std::move(res);
      }
      t.median_ms = median(t.runs_ms);
      timings.push_back(std::move(t));
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return exit_budget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  nlohmann::ordered_json j;
  j["input"] = req.generator.empty() ? req.input : req.generator;
  j["semantics"] = fuzzyaf::to_string(req.semantics);
  j["lattice"] = req.lattice.to_string();
  j["arguments"] = faf.argument_count();
  j["attacks"] = faf.attacks().size();
  j["repetitions"] = req.repetitions;
  bool equal = true;
  auto& engines = j["engines"] = nlohmann::ordered_json::array();
  for (const EngineTiming& t : timings) {
    engines.push_back({{"engine", to_string(t.engine)}, {"median_ms", t.median_ms}, {"runs_ms", t.runs_ms},
                       {"extensions", t.output.size()}});
    if (!(t.output == timings.front().output)) equal = false;
  }
  j["outputs_equal"] = equal;
  auto find = [&](Engine e) -> const EngineTiming* {
    for (const auto& t : timings) {
      if (t.engine == e) return &t;
    }
    return nullptr;
  };
  const EngineTiming* scc = find(Engine::scc);
  const EngineTiming* direct = find(Engine::direct);
  if (scc && direct) j["speedup"] = direct->median_ms / std::max(scc->median_ms, 1e-6);
  out << j.dump(2) << '\n';
  if (!equal) {
    err << "error: engines disagree on the extension set\n";
    return exit_mismatch;
  }
  return exit_ok;
}

}  // namespace fuzzyaf::cli

#endif  // FUZZYAF_CLI_HPP
