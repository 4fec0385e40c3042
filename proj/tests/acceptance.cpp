// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fuzzyaf/cli.hpp"
#include "fuzzyaf/fuzzyaf.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"
#include "support/random_faf.hpp"

namespace {

using namespace fuzzyaf;
using namespace fuzzyaf::testing;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Verdict {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;  // printed under the verdict line

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

int failures = 0;

void report(int id, const std::string& title, const Verdict& v) {
  std::printf("[%s] AC%d %s: %s\n", v.pass ? "PASS" : "FAIL", id, title.c_str(), v.detail.c_str());
  for (const std::string& n : v.notes) std::printf("       %s\n", n.c_str());
  std::fflush(stdout);
  if (!v.pass) ++failures;
}

bool contains(const ExtensionSet& exts, const FuzzySet& e) { return std::find(exts.begin(), exts.end(), e) != exts.end(); }

// ---------------------------------------------------------------------------

Verdict example_one() {
  Verdict v;
  const auto t0 = Clock::now();
  const Framework faf = load_sample("example1.fapx");
  const FuzzySet want =
      faf.make_set({{"A", "0.8"}, {"B", "0.2"}, {"C", "0.6"}, {"D", "0.4"}, {"E", "0.6"}, {"F", "0.4"}});
  const DegreeLattice lat = breakpoint_lattice(faf);
  for (cli::Engine engine : {cli::Engine::scc, cli::Engine::direct}) {
    const ExtensionSet got = cli::run_engine(faf, SemanticsKind::grounded, engine, lat, {});
    if (got != ExtensionSet{want}) v.fail(std::string(cli::to_string(engine)) + " engine returned a different set");
  }
  if (!is_complete(faf, faf.args(), want)) v.fail("is_complete rejects the extension");
  if (!gf_check(faf, faf.args(), want, SemanticsKind::complete, lat)) v.fail("gf_check(complete) rejects it");
  const double ms = ms_since(t0);
  if (ms >= 1000) v.fail("took " + fmt(ms) + " ms");
  if (v.pass) v.detail = "grounded = " + to_display(faf.universe(), want) + " on both engines, complete by both checkers, " +
                         fmt(ms) + " ms";
  return v;
}

Verdict example_two() {
  Verdict v;
  const auto t0 = Clock::now();
  const Framework faf = load_sample("example2.fapx");
  const FuzzySet e_first = faf.make_set({{"A", "0.2"}, {"B", "0.8"}, {"C", "0.2"}, {"D", "0.8"}, {"E", "0.2"},
                                         {"F", "0.8"}, {"G", "0.8"}, {"H", "0.2"}, {"I", "0.2"}});
  const FuzzySet e_second = faf.make_set({{"A", "0.8"}, {"B", "0.2"}, {"C", "0.5"}, {"D", "0.5"}, {"E", "0.5"},
                                          {"F", "0.5"}, {"G", "0.5"}, {"H", "0.5"}, {"I", "0.5"}});
  const ExtensionSet pr =
      cli::run_engine(faf, SemanticsKind::preferred, cli::Engine::scc, breakpoint_lattice(faf), {});
  const double ms = ms_since(t0);
  if (!contains(pr, e_first)) v.fail("E' missing");
  if (!contains(pr, e_second)) v.fail("E'' missing");
  if (ms >= 10000) v.fail("took " + fmt(ms) + " ms");
  if (v.pass) {
    v.detail = "both named extensions among " + std::to_string(pr.size()) + " preferred, " + fmt(ms) + " ms";
  }
  return v;
}

// Instances shared by criteria 3, 5 and 6.
struct Instance {
  Framework faf;
  DegreeLattice lattice;
  ExtensionSet complete;
  ExtensionSet preferred;
};

Verdict differential(std::vector<Instance>& instances) {
  Verdict v;
  Rng rng(20240601);
  RandomShape shape;
  shape.max_args = 5;
  shape.max_attacks = 8;
  const auto t0 = Clock::now();
  std::size_t mismatches = 0;
  std::size_t comparisons = 0;
  for (int i = 0; i < 250; ++i) {
    Instance inst{random_faf(rng, shape), {}, {}, {}};
    inst.lattice = breakpoint_lattice(inst.faf);
    const FuzzySet& c = inst.faf.args();
    for (SemanticsKind k : {SemanticsKind::admissible, SemanticsKind::complete, SemanticsKind::preferred}) {
      const ExtensionSet dir = enumerate_extensions(inst.faf, c, k, inst.lattice);
      const ExtensionSet rec = gf_enumerate(inst.faf, c, k, inst.lattice);
      ++comparisons;
      if (rec != dir) {
        if (mismatches++ == 0) {
          v.notes.push_back(std::string(to_string(k)) + " mismatch on " + to_structured(inst.faf).dump());
        }
      }
      if (k == SemanticsKind::complete) inst.complete = dir;
      if (k == SemanticsKind::preferred) inst.preferred = dir;
    }
    ++comparisons;
    if (!(grounded_scc(inst.faf, c) == grounded(inst.faf, c))) {
      if (mismatches++ == 0) v.notes.push_back("grounded mismatch on " + to_structured(inst.faf).dump());
    }
    instances.push_back(std::move(inst));
  }
  const double ms = ms_since(t0);
  if (mismatches) v.fail(std::to_string(mismatches) + " mismatches");
  if (ms >= 300000) v.fail("took " + fmt(ms) + " ms");
  if (v.pass) {
    v.detail = std::to_string(instances.size()) + " frameworks, " + std::to_string(comparisons) +
               " set comparisons, 0 mismatches, " + fmt(ms) + " ms";
  }
  return v;
}

Verdict crisp_reduction() {
  Verdict v;
  Rng rng(1977);
  const DegreeLattice crisp{std::vector<Degree>{}};
  std::size_t mismatches = 0;
  const int count = 150;
  auto masks = [](const ExtensionSet& exts) {
    std::set<std::uint32_t> out;
    for (const FuzzySet& e : exts) out.insert(static_cast<std::uint32_t>(oracle::to_mask(e)));
    return out;
  };
  for (int i = 0; i < count; ++i) {
    const Framework faf = random_crisp_faf(rng, 6, 12);
    const oracle::DungAF af = oracle::to_dung(faf);
    bool ok = true;
    for (cli::Engine engine : {cli::Engine::direct, cli::Engine::scc}) {
      const ExtensionSet gr = cli::run_engine(faf, SemanticsKind::grounded, engine, crisp, {});
      ok = ok && gr.size() == 1 && oracle::to_mask(gr.front()) == af.grounded();
      ok = ok && masks(cli::run_engine(faf, SemanticsKind::complete, engine, crisp, {})) == af.all_complete();
      ok = ok && masks(cli::run_engine(faf, SemanticsKind::preferred, engine, crisp, {})) == af.all_preferred();
    }
    if (!ok && mismatches++ == 0) v.notes.push_back("first mismatch: " + to_structured(faf).dump());
  }
  if (mismatches) v.fail(std::to_string(mismatches) + " of " + std::to_string(count) + " frameworks disagree");
  else v.detail = std::to_string(count) + " crisp frameworks, grounded/complete/preferred agree with the classical oracle";
  return v;
}

Verdict grounded_properties(const std::vector<Instance>& instances) {
  Verdict v;
  for (const Instance& inst : instances) {
    const FuzzySet& c = inst.faf.args();
    const FuzzySet g = grounded(inst.faf, c);
    if (!(characteristic(inst.faf, c, g) == g)) v.fail("not a fixed point on " + to_structured(inst.faf).dump());
    for (int r = 0; r < 10; ++r) {
      if (!(grounded(inst.faf, c) == g) || !(grounded_scc(inst.faf, c) == g)) {
        v.fail("repeated runs differ on " + to_structured(inst.faf).dump());
      }
    }
    for (const FuzzySet& e : inst.complete) {
      if (!fuzzy_subset(g, e)) v.fail("not within a complete extension on " + to_structured(inst.faf).dump());
    }
    if (!contains(inst.complete, g)) v.fail("missing from complete output on " + to_structured(inst.faf).dump());
  }
  if (v.pass) v.detail = std::to_string(instances.size()) + " instances: fixed point, stable over 10 runs, least complete";
  return v;
}

Verdict stable_preferred(const std::vector<Instance>& instances) {
  Verdict v;
  std::size_t not_preferred = 0, differ = 0, with_stable = 0;
  nlohmann::ordered_json witness;
  for (const Instance& inst : instances) {
    const ExtensionSet st = enumerate_extensions(inst.faf, inst.faf.args(), SemanticsKind::stable, inst.lattice);
    if (!st.empty()) ++with_stable;
    bool subset = true;
    for (const FuzzySet& s : st) subset = subset && contains(inst.preferred, s);
    if (!subset) ++not_preferred;
    if (st != inst.preferred) {
      ++differ;
      if (witness.is_null()) {
        witness["finding"] = subset ? "stable extensions are a strict subset of the preferred extensions"
                                    : "a stable extension is not preferred";
        witness["framework"] = to_structured(inst.faf);
        witness["stable"] = extensions_to_json(inst.faf.universe(), st, st.size());
        witness["preferred"] = extensions_to_json(inst.faf.universe(), inst.preferred, inst.preferred.size());
      }
    }
  }
  const std::string counts = std::to_string(instances.size()) + " instances, " + std::to_string(with_stable) +
                             " with a stable extension, " + std::to_string(not_preferred) +
                             " with a non-preferred stable extension, " + std::to_string(differ) +
                             " where the families differ";
  if (not_preferred) v.fail("stable not within preferred; " + counts);
  if (differ) v.fail("stable and preferred do not coincide; " + counts);
  if (v.pass) v.detail = counts;
  if (!witness.is_null()) v.notes.push_back("witness " + witness.dump());
  return v;
}

Verdict performance() {
  Verdict v;
  const Framework faf = generate("chain(4)");
  const DegreeLattice lat = breakpoint_lattice(faf);
  std::vector<double> scc_ms, direct_ms;
  ExtensionSet scc_out, direct_out;
  for (int r = 0; r < 5; ++r) {
    auto t0 = Clock::now();
    scc_out = cli::run_engine(faf, SemanticsKind::preferred, cli::Engine::scc, lat, {});
    scc_ms.push_back(ms_since(t0));
    t0 = Clock::now();
    direct_out = cli::run_engine(faf, SemanticsKind::preferred, cli::Engine::direct, lat, {});
    direct_ms.push_back(ms_since(t0));
  }
  const double scc = cli::median(scc_ms), direct = cli::median(direct_ms);
  const double speedup = direct / std::max(scc, 1e-6);
  if (scc_out != direct_out) v.fail("engines disagree");
  if (speedup < 10) v.fail("speedup " + fmt(speedup));
  if (scc >= 2000) v.fail("scc took " + fmt(scc) + " ms");
  if (v.pass) {
    v.detail = "median scc " + fmt(scc) + " ms, direct " + fmt(direct) + " ms, speedup " +
               fmt(speedup) + "x, " + std::to_string(scc_out.size()) + " identical extensions";
  }
  return v;
}

Verdict invariant_suites() {
  Verdict v;
  std::size_t total_cases = 0, passed = 0;
  const auto& props = all_properties();
  for (const Property& p : props) {
    const PropertyOutcome out = run_property(p);
    total_cases += out.cases;
    if (out.failure) {
      v.fail(p.module + "/" + p.name + " failed");
      v.notes.push_back(p.module + "/" + p.name + ": " + *out.failure);
    } else {
      ++passed;
    }
  }
  const std::string summary = std::to_string(passed) + "/" + std::to_string(props.size()) + " properties hold over " +
                              std::to_string(total_cases) + " random cases";
  if (v.pass) v.detail = summary;
  else v.detail += "; " + summary;
  return v;
}

}  // namespace

int main() {
  report(1, "Example 1 grounded", example_one());
  report(2, "Example 2 preferred", example_two());
  std::vector<Instance> instances;
  report(3, "differential equivalence", differential(instances));
  report(4, "crisp reduction", crisp_reduction());
  report(5, "grounded properties", grounded_properties(instances));
  report(6, "stable/preferred coincidence", stable_preferred(instances));
  report(7, "chain(4) performance", performance());
  report(8, "invariant suites", invariant_suites());
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
