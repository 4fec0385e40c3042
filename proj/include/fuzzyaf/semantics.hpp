#ifndef FUZZYAF_SEMANTICS_HPP
#define FUZZYAF_SEMANTICS_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzyaf/attacks.hpp"
#include "fuzzyaf/framework.hpp"

namespace fuzzyaf {

enum class SemanticsKind { conflict_free, admissible, complete, preferred, grounded, stable };

inline std::string_view to_string(SemanticsKind k) {
  switch (k) {
    case SemanticsKind::conflict_free: return "conflict_free";
    case SemanticsKind::admissible: return "admissible";
    case SemanticsKind::complete: return "complete";
    case SemanticsKind::preferred: return "preferred";
    case SemanticsKind::grounded: return "grounded";
    case SemanticsKind::stable: return "stable";
  }
  return "?";
}

inline SemanticsKind semantics_from_string(std::string_view s) {
  for (auto k : {SemanticsKind::conflict_free, SemanticsKind::admissible, SemanticsKind::complete,
                 SemanticsKind::preferred, SemanticsKind::grounded, SemanticsKind::stable}) {
    if (s == to_string(k)) return k;
  }
  if (s == "cf") return SemanticsKind::conflict_free;
  if (s == "adm") return SemanticsKind::admissible;
  if (s == "co") return SemanticsKind::complete;
  if (s == "pr") return SemanticsKind::preferred;
  if (s == "gr") return SemanticsKind::grounded;
  if (s == "st") return SemanticsKind::stable;
  throw std::invalid_argument("unknown semantics '" + std::string(s) + "'");
}

/// Deduplicated extensions in the deterministic FuzzySet order.
using ExtensionSet = std::vector<FuzzySet>;

inline void normalize(ExtensionSet& exts) {
  std::sort(exts.begin(), exts.end());
  exts.erase(std::unique(exts.begin(), exts.end()), exts.end());
}

inline constexpr std::uint64_t default_budget = 10'000'000;

/// Enumeration would need more candidates than the budget allows.
class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget)
      : std::runtime_error("enumeration needs " +
                           (required == std::numeric_limits<std::uint64_t>::max() ? std::string("more than 2^64")
                                                                                   : std::to_string(required)) +
                           " candidates, budget is " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}
  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

namespace detail {

inline void require_subset(const FuzzySet& s, const Framework& faf, const char* what) {
  if (!fuzzy_subset(s, faf.args())) {
    throw std::invalid_argument(std::string(what) + " is not a fuzzy subset of the arguments");
  }
}

inline bool conflict_free_unchecked(const Framework& faf, const FuzzySet& e) {
  for (const Attack& at : faf.attacks()) {
    const Degree a = e[at.from];
    const Degree b = e[at.to];
    if (a.is_zero() || b.is_zero()) continue;
    if (!is_tolerable(a, at.degree, b)) return false;
  }
  return true;
}

/// E is conflict-free and defends each of its members at its own degree.
inline bool admissible_core(const Framework& faf, const FuzzySet& e) {
  if (!conflict_free_unchecked(faf, e)) return false;
  const std::vector<Degree> bw = all_best_weakenings(faf, e);
  for (ArgIndex x : faf.arguments()) {
    if (e[x].is_zero()) continue;
    if (e[x] > defence_bound(faf, bw, x)) return false;
  }
  return true;
}

inline bool admissible_unchecked(const Framework& faf, const FuzzySet& c, const FuzzySet& e) {
  return fuzzy_subset(e, c) && admissible_core(faf, e);
}

inline bool complete_unchecked(const Framework& faf, const FuzzySet& c, const FuzzySet& e) {
  return admissible_unchecked(faf, c, e) && fuzzy_subset(characteristic_unchecked(faf, c, e), e);
}

inline bool stable_unchecked(const Framework& faf, const FuzzySet& e) {
  if (!conflict_free_unchecked(faf, e)) return false;
  for (ArgIndex x : faf.arguments()) {
    if (e[x] >= faf.degree(x)) continue;
    Degree strongest;
    for (const Incident& in : faf.attackers(x)) strongest = max_degree(strongest, tnorm(e[in.other], in.degree));
    if (strongest < e[x].complement()) return false;
  }
  return true;
}

inline FuzzySet grounded_unchecked(const Framework& faf, const FuzzySet& c) {
  FuzzySet s = faf.empty_set();
  for (;;) {
    FuzzySet next = characteristic_unchecked(faf, c, s);
    if (next == s) return s;
    s = std::move(next);
  }
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

/// Odometer over every fuzzy set whose value at position k of `slots` is
/// drawn from domains[k]; all other arguments stay 0.
class CandidateSpace {
public:
  CandidateSpace(std::size_t universe_size, std::vector<ArgIndex> slots, std::vector<std::span<const Degree>> domains)
      : slots_(std::move(slots)), domains_(std::move(domains)), digits_(slots_.size(), 0), current_(universe_size) {
    for (std::size_t k = 0; k < slots_.size(); ++k) {
      if (domains_[k].empty()) exhausted_ = true;
      else current_.set(slots_[k], domains_[k][0]);
    }
  }

  std::uint64_t size() const {
    std::uint64_t n = 1;
    for (const auto& d : domains_) n = saturating_mul(n, d.size());
    return n;
  }

  template <typename Visit>
  void for_each(Visit&& visit) {
    if (exhausted_) return;
    for (;;) {
      visit(static_cast<const FuzzySet&>(current_));
      std::size_t k = 0;
      for (; k < slots_.size(); ++k) {
        if (++digits_[k] < domains_[k].size()) {
          current_.set(slots_[k], domains_[k][digits_[k]]);
          break;
        }
        digits_[k] = 0;
        current_.set(slots_[k], domains_[k][0]);
      }
      if (k == slots_.size()) return;
    }
  }

private:
  std::vector<ArgIndex> slots_;
  std::vector<std::span<const Degree>> domains_;
  std::vector<std::size_t> digits_;
  FuzzySet current_;
  bool exhausted_ = false;
};

/// Lattice-valued fuzzy subsets of cap.
inline CandidateSpace subsets_of(const FuzzySet& cap, const DegreeLattice& lattice) {
  std::vector<ArgIndex> slots;
  std::vector<std::span<const Degree>> domains;
  for (ArgIndex x : cap.support()) {
    slots.push_back(x);
    domains.push_back(lattice.up_to(cap[x]));
  }
  return CandidateSpace(cap.universe_size(), std::move(slots), std::move(domains));
}

/// Keeps the inclusion-maximal sets. Sets are visited by descending rank
/// sum, so anything strictly containing a set has already been seen and, if
/// it is not maximal itself, is covered by a maximal set seen earlier.
inline ExtensionSet maximal_elements(std::vector<FuzzySet> sets, const DegreeLattice& lattice) {
  auto rank_sum = [&lattice](const FuzzySet& s) {
    std::size_t r = 0;
    for (Degree d : s.values()) r += lattice.rank(d);
    return r;
  };
  std::vector<std::pair<std::size_t, std::size_t>> order;
  order.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) order.emplace_back(rank_sum(sets[i]), i);
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  ExtensionSet maximal;
  for (const auto& [rank, i] : order) {
    const FuzzySet& s = sets[i];
    const bool covered = std::any_of(maximal.begin(), maximal.end(),
                                     [&s](const FuzzySet& m) { return fuzzy_subset(s, m) && !(s == m); });
    if (!covered) maximal.push_back(s);
  }
  normalize(maximal);
  return maximal;
}

inline void check_budget(std::uint64_t required, std::uint64_t budget) {
  if (required > budget) throw BudgetExceeded(required, budget);
}

}  // namespace detail

/// Every attack between members of Supp(E) is tolerable at E's degrees.
inline bool is_conflict_free(const Framework& faf, const FuzzySet& e) {
  detail::require_subset(e, faf, "E");
  return detail::conflict_free_unchecked(faf, e);
}

/// E is contained in C, conflict-free, and weakening-defends each member.
inline bool is_admissible(const Framework& faf, const FuzzySet& c, const FuzzySet& e) {
  detail::require_subset(c, faf, "C");
  detail::require_subset(e, faf, "E");
  return detail::admissible_unchecked(faf, c, e);
}

/// Admissible in C and containing everything of C that it defends.
inline bool is_complete(const Framework& faf, const FuzzySet& c, const FuzzySet& e) {
  detail::require_subset(c, faf, "C");
  detail::require_subset(e, faf, "E");
  return detail::complete_unchecked(faf, c, e);
}

/// Conflict-free, and every argument held below its full degree is attacked
/// by E strongly enough that any higher degree would be sufficiently attacked:
/// max_B min(E(B), rho_Bx) >= 1 - E(x).
inline bool is_stable(const Framework& faf, const FuzzySet& e) {
  detail::require_subset(e, faf, "E");
  return detail::stable_unchecked(faf, e);
}

/// Least fixed point of the characteristic function in C, iterated from the
/// empty set. Iterates only take values among the input degrees, their
/// complements, 0 and 1, and grow monotonically, so the loop terminates.
inline FuzzySet grounded(const Framework& faf, const FuzzySet& c) {
  detail::require_subset(c, faf, "C");
  return detail::grounded_unchecked(faf, c);
}

inline bool is_grounded(const Framework& faf, const FuzzySet& c, const FuzzySet& e) {
  detail::require_subset(e, faf, "E");
  return grounded(faf, c) == e;
}

/// Admissible in C with no lattice-valued admissible set in C strictly above it.
inline bool is_preferred(const Framework& faf, const FuzzySet& c, const FuzzySet& e, const DegreeLattice& lattice,
                         std::uint64_t budget = default_budget) {
  detail::require_subset(c, faf, "C");
  detail::require_subset(e, faf, "E");
  if (!detail::admissible_unchecked(faf, c, e)) return false;
  std::vector<ArgIndex> slots;
  std::vector<std::span<const Degree>> domains;
  for (ArgIndex x : c.support()) {
    slots.push_back(x);
    domains.push_back(lattice.between(e[x], c[x]));
  }
  detail::CandidateSpace above(faf.universe_size(), std::move(slots), std::move(domains));
  detail::check_budget(above.size(), budget);
  bool dominated = false;
  above.for_each([&](const FuzzySet& cand) {
    if (dominated || cand == e || !fuzzy_subset(e, cand)) return;
    if (detail::admissible_core(faf, cand)) dominated = true;
  });
  return !dominated;
}

/// Brute-force enumeration of the lattice-valued extensions in C. Every
/// fuzzy subset of C with values in the lattice is tested, so this is also
/// the reference the recursive engine is checked against. Throws
/// BudgetExceeded when the candidate space is larger than `budget`.
inline ExtensionSet enumerate_extensions(const Framework& faf, const FuzzySet& c, SemanticsKind kind,
                                         const DegreeLattice& lattice, std::uint64_t budget = default_budget) {
  detail::require_subset(c, faf, "C");
  if (kind == SemanticsKind::grounded) return {detail::grounded_unchecked(faf, c)};

  detail::CandidateSpace space = detail::subsets_of(c, lattice);
  detail::check_budget(space.size(), budget);
  ExtensionSet out;
  switch (kind) {
    case SemanticsKind::conflict_free:
      space.for_each([&](const FuzzySet& e) {
        if (detail::conflict_free_unchecked(faf, e)) out.push_back(e);
      });
      break;
    case SemanticsKind::admissible:
      space.for_each([&](const FuzzySet& e) {
        if (detail::admissible_core(faf, e)) out.push_back(e);
      });
      break;
    case SemanticsKind::complete:
      space.for_each([&](const FuzzySet& e) {
        if (detail::admissible_core(faf, e) && fuzzy_subset(detail::characteristic_unchecked(faf, c, e), e)) {
          out.push_back(e);
        }
      });
      break;
    case SemanticsKind::preferred: {
      std::vector<FuzzySet> admissible;
      space.for_each([&](const FuzzySet& e) {
        if (detail::admissible_core(faf, e)) admissible.push_back(e);
      });
      return detail::maximal_elements(std::move(admissible), lattice);
    }
    case SemanticsKind::stable:
      space.for_each([&](const FuzzySet& e) {
        if (detail::stable_unchecked(faf, e)) out.push_back(e);
      });
      break;
    case SemanticsKind::grounded: break;
  }
  normalize(out);
  return out;
}

/// Membership test for any semantics; preferred needs the lattice.
inline bool is_extension(const Framework& faf, const FuzzySet& c, const FuzzySet& e, SemanticsKind kind,
                         const DegreeLattice& lattice, std::uint64_t budget = default_budget) {
  switch (kind) {
    case SemanticsKind::conflict_free:
      detail::require_subset(c, faf, "C");
      return fuzzy_subset(e, c) && is_conflict_free(faf, e);
    case SemanticsKind::admissible: return is_admissible(faf, c, e);
    case SemanticsKind::complete: return is_complete(faf, c, e);
    case SemanticsKind::preferred: return is_preferred(faf, c, e, lattice, budget);
    case SemanticsKind::grounded: return is_grounded(faf, c, e);
    case SemanticsKind::stable:
      detail::require_subset(c, faf, "C");
      return fuzzy_subset(e, c) && is_stable(faf, e);
  }
  return false;
}

}  // namespace fuzzyaf

#endif  // FUZZYAF_SEMANTICS_HPP
