#ifndef FUZZYAF_RECURSIVE_HPP
#define FUZZYAF_RECURSIVE_HPP

// SCC-recursive evaluation.
//
// For a component S and a (partial) extension E fixed on the components
// before S, three fuzzy sets over S summarise everything S needs to know:
//
//   limited   L(x) = max over outside members B of E attacking x of min(E(B), rho_Bx)
//   residual  R(x) = min(A(x), 1 - L(x))
//   defended  D(x) = min(R(x), min over outside attackers B of 1 - min(bw_E(B), rho_Bx))
//
// where bw_E(B) is B's degree after the best single weakening by a member
// of E. S is then solved on the restriction of the framework to R with
// candidate set D ∩ C, recursing whenever that restriction (after dropping
// attacks that are tolerable at full strength) splits into several
// components, and falling back to the brute-force base function otherwise.

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fuzzyaf/attacks.hpp"
#include "fuzzyaf/framework.hpp"
#include "fuzzyaf/scc.hpp"
#include "fuzzyaf/semantics.hpp"

namespace fuzzyaf {

struct SccContext {
  FuzzySet scc;        // component members at full degree
  FuzzySet limited;    // L
  FuzzySet residual;   // R
  FuzzySet defended;   // D
  Framework restricted_faf;  // framework restricted to R
};

/// One record per recursive invocation, for debugging and walkthroughs.
struct TraceRecord {
  int depth = 0;
  enum class Kind { component, base } kind = Kind::component;
  std::shared_ptr<const Universe> universe;
  FuzzySet members;    // component (kind == component) or the base framework's arguments
  FuzzySet limited;
  FuzzySet residual;
  FuzzySet defended;
  FuzzySet candidates;  // C' handed to the sub-problem
  std::size_t attacks = 0;  // attacks in the framework being solved
  ExtensionSet results;
};

using TraceSink = std::function<void(const TraceRecord&)>;

struct EngineOptions {
  /// Drop attacks that are tolerable even at full degrees before looking for
  /// components. Never changes results; exposes finer decompositions.
  bool prune = true;
  std::uint64_t budget = default_budget;
  /// Optional; called once per component visit and once per base-function call.
  TraceSink trace;
};

/// Removes every attack (A,B) with min(A(A), rho_AB) + A(B) <= 1. Such an
/// attack is tolerable for every fuzzy subset, so no semantics can see it.
inline Framework prune_tolerable_attacks(const Framework& faf) {
  std::vector<Attack> kept;
  kept.reserve(faf.attacks().size());
  for (const Attack& at : faf.attacks()) {
    if (!is_tolerable(faf.degree(at.from), at.degree, faf.degree(at.to))) kept.push_back(at);
  }
  if (kept.size() == faf.attacks().size()) return faf;
  return Framework(faf.universe_ptr(), faf.args(), std::move(kept));
}

namespace detail {

inline bool is_component(const Framework& faf, const FuzzySet& scc) {
  const SccPartition p = compute_sccs(faf);
  const auto members = scc.support();
  if (members.empty() || !faf.contains(members.front())) return false;
  const std::size_t ord = p.index[members.front()];
  return ord != SccPartition::npos && p.components[ord] == members && p.as_fuzzy_set(faf, ord) == scc;
}

inline void require_component(const Framework& faf, const FuzzySet& scc) {
  if (!is_component(faf, scc)) throw std::invalid_argument("set is not a strongly connected component of the framework");
}

inline FuzzySet limited_unchecked(const Framework& faf, const FuzzySet& scc, const FuzzySet& e) {
  FuzzySet out = faf.empty_set();
  for (ArgIndex x : scc.support()) {
    Degree l;
    for (const Incident& in : faf.attackers(x)) {
      if (!scc[in.other].is_zero()) continue;
      l = max_degree(l, tnorm(e[in.other], in.degree));
    }
    out.set(x, l);
  }
  return out;
}

inline SccContext context_unchecked(const Framework& faf, const FuzzySet& scc, const FuzzySet& e) {
  SccContext ctx;
  ctx.scc = scc;
  ctx.limited = limited_unchecked(faf, scc, e);
  ctx.residual = faf.empty_set();
  ctx.defended = faf.empty_set();
  for (ArgIndex x : scc.support()) {
    const Degree r = tnorm(faf.degree(x), ctx.limited[x].complement());
    Degree d = r;
    for (const Incident& in : faf.attackers(x)) {
      if (!scc[in.other].is_zero()) continue;
      const Degree b = best_weakening_unchecked(faf, e, in.other);
      d = tnorm(d, tnorm(b, in.degree).complement());
    }
    ctx.residual.set(x, r);
    ctx.defended.set(x, d);
  }
  ctx.restricted_faf = restrict(faf, ctx.residual);
  return ctx;
}

inline FuzzySet restrict_to(const FuzzySet& s, const FuzzySet& members) {
  FuzzySet out(s.universe_size());
  for (ArgIndex x : members.support()) out.set(x, s[x]);
  return out;
}

inline void emit(const EngineOptions& opts, TraceRecord&& rec) {
  if (opts.trace) opts.trace(rec);
}

inline TraceRecord component_record(int depth, const Framework& faf, const SccContext& ctx, const FuzzySet& cand,
                                    const ExtensionSet& results) {
  TraceRecord rec;
  rec.depth = depth;
  rec.kind = TraceRecord::Kind::component;
  rec.universe = faf.universe_ptr();
  rec.members = ctx.scc;
  rec.limited = ctx.limited;
  rec.residual = ctx.residual;
  rec.defended = ctx.defended;
  rec.candidates = cand;
  rec.attacks = ctx.restricted_faf.attacks().size();
  rec.results = results;
  return rec;
}

inline void require_recursive_kind(SemanticsKind kind) {
  if (kind == SemanticsKind::stable || kind == SemanticsKind::conflict_free) {
    throw std::invalid_argument("semantics '" + std::string(to_string(kind)) +
                                "' has no SCC-recursive characterization; use the direct engine");
  }
}

class RecursiveEnumerator {
public:
  RecursiveEnumerator(SemanticsKind kind, const DegreeLattice& lattice, const EngineOptions& opts)
      : kind_(kind), lattice_(lattice), opts_(opts) {}

  ExtensionSet solve(const Framework& input, const FuzzySet& c, int depth) {
    const Framework faf = opts_.prune ? prune_tolerable_attacks(input) : input;
    const SccPartition part = compute_sccs(faf);
    if (part.size() <= 1) {
      ExtensionSet base = enumerate_extensions(faf, c, kind_, lattice_, opts_.budget);
      if (opts_.trace) {
        TraceRecord rec;
        rec.depth = depth;
        rec.kind = TraceRecord::Kind::base;
        rec.universe = faf.universe_ptr();
        rec.members = faf.args();
        rec.candidates = c;
        rec.attacks = faf.attacks().size();
        rec.results = base;
        emit(opts_, std::move(rec));
      }
      return base;
    }

    const Condensation cond = condensation(faf, part);
    // identical (component, residual, candidates) triples are the same sub-problem
    std::map<std::tuple<std::size_t, std::vector<Degree>, std::vector<Degree>>, ExtensionSet> memo;
    std::vector<FuzzySet> partial{faf.empty_set()};
    for (std::size_t s : cond.topo_order) {
      const FuzzySet scc = part.as_fuzzy_set(faf, s);
      std::vector<FuzzySet> next;
      for (const FuzzySet& e : partial) {
        SccContext ctx = context_unchecked(faf, scc, e);
        const FuzzySet cand = intersect(ctx.defended, restrict_to(c, scc));
        auto key = std::make_tuple(s, values_on(ctx.residual, part.components[s]),
                                   values_on(cand, part.components[s]));
        auto it = memo.find(key);
        if (it == memo.end()) {
          ExtensionSet sub = solve(ctx.restricted_faf, cand, depth + 1);
          if (opts_.trace) emit(opts_, component_record(depth, faf, ctx, cand, sub));
          it = memo.emplace(std::move(key), std::move(sub)).first;
        }
        for (const FuzzySet& local : it->second) {
          next.push_back(unite(e, local));
        }
        check_budget(next.size(), opts_.budget);
      }
      partial = std::move(next);
    }
    normalize(partial);
    return partial;
  }

private:
  static std::vector<Degree> values_on(const FuzzySet& s, const std::vector<ArgIndex>& members) {
    std::vector<Degree> out;
    out.reserve(members.size());
    for (ArgIndex a : members) out.push_back(s[a]);
    return out;
  }

  SemanticsKind kind_;
  const DegreeLattice& lattice_;
  const EngineOptions& opts_;
};

inline bool base_check(const Framework& faf, const FuzzySet& c, const FuzzySet& e, SemanticsKind kind,
                       const DegreeLattice& lattice, std::uint64_t budget) {
  switch (kind) {
    case SemanticsKind::admissible: return admissible_unchecked(faf, c, e);
    case SemanticsKind::complete: return complete_unchecked(faf, c, e);
    case SemanticsKind::preferred: return is_preferred(faf, c, e, lattice, budget);
    case SemanticsKind::grounded: return grounded_unchecked(faf, c) == e;
    default: require_recursive_kind(kind);
  }
  return false;
}

inline bool gf_check_rec(const Framework& input, const FuzzySet& c, const FuzzySet& e, SemanticsKind kind,
                         const DegreeLattice& lattice, const EngineOptions& opts, int depth) {
  const Framework faf = opts.prune ? prune_tolerable_attacks(input) : input;
  // a member above the restricted degree cannot belong to this sub-framework
  if (!fuzzy_subset(e, faf.args())) return false;
  const SccPartition part = compute_sccs(faf);
  if (part.size() <= 1) {
    const bool ok = base_check(faf, c, e, kind, lattice, opts.budget);
    if (opts.trace) {
      TraceRecord rec;
      rec.depth = depth;
      rec.kind = TraceRecord::Kind::base;
      rec.universe = faf.universe_ptr();
      rec.members = faf.args();
      rec.candidates = c;
      rec.attacks = faf.attacks().size();
      if (ok) rec.results.push_back(e);
      emit(opts, std::move(rec));
    }
    return ok;
  }
  const Condensation cond = condensation(faf, part);
  for (std::size_t s : cond.topo_order) {
    const FuzzySet scc = part.as_fuzzy_set(faf, s);
    const SccContext ctx = context_unchecked(faf, scc, e);
    const FuzzySet cand = intersect(ctx.defended, restrict_to(c, scc));
    const FuzzySet local = restrict_to(e, scc);
    const bool ok = gf_check_rec(ctx.restricted_faf, cand, local, kind, lattice, opts, depth + 1);
    if (opts.trace) emit(opts, component_record(depth, faf, ctx, cand, ok ? ExtensionSet{local} : ExtensionSet{}));
    if (!ok) return false;
  }
  return true;
}

}  // namespace detail

/// Degree each member of the component loses to members of E outside it.
inline FuzzySet limited_part(const Framework& faf, const FuzzySet& scc, const FuzzySet& e) {
  detail::require_component(faf, scc);
  detail::require_subset(e, faf, "E");
  return detail::limited_unchecked(faf, scc, e);
}

/// What is left of each member once the limited part is removed.
inline FuzzySet residual_part(const Framework& faf, const FuzzySet& scc, const FuzzySet& e) {
  detail::require_component(faf, scc);
  detail::require_subset(e, faf, "E");
  return detail::context_unchecked(faf, scc, e).residual;
}

/// Largest degree of each residual member whose outside attackers E can all
/// weaken to tolerable.
inline FuzzySet defended_part(const Framework& faf, const FuzzySet& scc, const FuzzySet& e) {
  detail::require_component(faf, scc);
  detail::require_subset(e, faf, "E");
  return detail::context_unchecked(faf, scc, e).defended;
}

inline SccContext scc_context(const Framework& faf, const FuzzySet& scc, const FuzzySet& e) {
  detail::require_component(faf, scc);
  detail::require_subset(e, faf, "E");
  return detail::context_unchecked(faf, scc, e);
}

/// Recursive membership test: on a single component, the base checker for
/// `kind`; otherwise every component's share of E must belong to the
/// sub-framework restricted to its residual part, with candidates D ∩ C.
/// Supports admissible, complete, preferred and grounded.
inline bool gf_check(const Framework& faf, const FuzzySet& c, const FuzzySet& e, SemanticsKind kind,
                     const DegreeLattice& lattice, const EngineOptions& opts = {}) {
  detail::require_recursive_kind(kind);
  detail::require_subset(c, faf, "C");
  detail::require_subset(e, faf, "E");
  return detail::gf_check_rec(faf, c, e, kind, lattice, opts, 0);
}

/// Recursive enumeration over the condensation in topological order. Each
/// partial extension over the components seen so far is extended by every
/// solution of the next component's restricted sub-problem.
inline ExtensionSet gf_enumerate(const Framework& faf, const FuzzySet& c, SemanticsKind kind,
                                 const DegreeLattice& lattice, const EngineOptions& opts = {}) {
  detail::require_recursive_kind(kind);
  detail::require_subset(c, faf, "C");
  detail::RecursiveEnumerator solver(kind, lattice, opts);
  return solver.solve(faf, c, 0);
}

/// Grounded extension component by component: a single pass in topological
/// order, each component taking the grounded extension of its restricted
/// sub-framework in D ∩ C.
inline FuzzySet grounded_scc(const Framework& faf, const FuzzySet& c) {
  detail::require_subset(c, faf, "C");
  const SccPartition part = compute_sccs(faf);
  const Condensation cond = condensation(faf, part);
  FuzzySet e = faf.empty_set();
  for (std::size_t s : cond.topo_order) {
    const FuzzySet scc = part.as_fuzzy_set(faf, s);
    const SccContext ctx = detail::context_unchecked(faf, scc, e);
    const FuzzySet cand = intersect(ctx.defended, detail::restrict_to(c, scc));
    e = unite(e, detail::grounded_unchecked(ctx.restricted_faf, cand));
  }
  return e;
}

}  // namespace fuzzyaf

#endif  // FUZZYAF_RECURSIVE_HPP
