#ifndef FUZZYAF_ATTACKS_HPP
#define FUZZYAF_ATTACKS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "fuzzyaf/framework.hpp"

namespace fuzzyaf {

enum class AttackStatus { tolerable, sufficient };

/// (A,a) attacking (B,b) with degree rho is tolerable iff min(a,rho) + b <= 1.
constexpr AttackStatus attack_status(Degree a, Degree rho, Degree b) noexcept {
  return tnorm(a, rho) <= b.complement() ? AttackStatus::tolerable : AttackStatus::sufficient;
}

constexpr bool is_tolerable(Degree a, Degree rho, Degree b) noexcept {
  return attack_status(a, rho, b) == AttackStatus::tolerable;
}

/// Degree left to (B,b) after (A,a) weakens it: min(1 - min(a,rho), b).
constexpr Degree weaken(Degree a, Degree rho, Degree b) noexcept {
  return tnorm(tnorm(a, rho).complement(), b);
}

namespace detail {

inline void require_argument(const Framework& faf, ArgIndex x) {
  if (!faf.contains(x)) {
    throw std::out_of_range("argument #" + std::to_string(x) + " is not in the framework");
  }
}

inline Degree best_weakening_unchecked(const Framework& faf, const FuzzySet& s, ArgIndex b) {
  Degree best = faf.degree(b);
  for (const Incident& in : faf.attackers(b)) {
    const Degree a = s[in.other];
    if (a.is_zero()) continue;
    const Degree w = weaken(a, in.degree, faf.degree(b));
    if (w < best) best = w;
  }
  return best;
}

/// best_weakening for every argument of faf, indexed by universe position.
inline std::vector<Degree> all_best_weakenings(const Framework& faf, const FuzzySet& s) {
  std::vector<Degree> out(faf.universe_size());
  for (ArgIndex b : faf.arguments()) out[b] = best_weakening_unchecked(faf, s, b);
  return out;
}

/// Largest degree of x defended by the weakenings in bw, before capping.
inline Degree defence_bound(const Framework& faf, const std::vector<Degree>& bw, ArgIndex x) {
  Degree bound = Degree::one();
  for (const Incident& in : faf.attackers(x)) {
    const Degree cap = tnorm(bw[in.other], in.degree).complement();
    if (cap < bound) bound = cap;
  }
  return bound;
}

inline FuzzySet characteristic_unchecked(const Framework& faf, const FuzzySet& c, const FuzzySet& s) {
  const std::vector<Degree> bw = all_best_weakenings(faf, s);
  FuzzySet out = faf.empty_set();
  for (ArgIndex x : faf.arguments()) {
    if (c[x].is_zero()) continue;
    out.set(x, tnorm(c[x], defence_bound(faf, bw, x)));
  }
  return out;
}

}  // namespace detail

/// The weakest degree any single member of S can push b_arg down to; the
/// argument's own degree when no member of S attacks it.
inline Degree best_weakening(const Framework& faf, const FuzzySet& s, ArgIndex b_arg) {
  detail::require_argument(faf, b_arg);
  return detail::best_weakening_unchecked(faf, s, b_arg);
}

/// S weakening-defends (c_arg, c): every attacker B of c_arg, taken at its
/// full degree and weakened as far as one member of S can, attacks (c_arg, c)
/// tolerably.
inline bool defends(const Framework& faf, const FuzzySet& s, ArgIndex c_arg, Degree c) {
  detail::require_argument(faf, c_arg);
  if (c > faf.degree(c_arg)) throw std::invalid_argument("defended degree exceeds the argument's degree");
  for (const Incident& in : faf.attackers(c_arg)) {
    const Degree b = detail::best_weakening_unchecked(faf, s, in.other);
    if (!is_tolerable(b, in.degree, c)) return false;
  }
  return true;
}

/// Characteristic function in C: each argument gets the largest degree S
/// defends, capped by C.
inline FuzzySet characteristic(const Framework& faf, const FuzzySet& c, const FuzzySet& s) {
  if (!fuzzy_subset(c, faf.args()) || !fuzzy_subset(s, faf.args())) {
    throw std::invalid_argument("characteristic: C and S must be fuzzy subsets of the arguments");
  }
  return detail::characteristic_unchecked(faf, c, s);
}

/// Arguments outside Supp(S), at full degree, that attack some member of S.
inline FuzzySet outparents(const Framework& faf, const FuzzySet& s) {
  FuzzySet out = faf.empty_set();
  for (const Attack& at : faf.attacks()) {
    if (s[at.from].is_zero() && !s[at.to].is_zero()) out.set(at.from, faf.degree(at.from));
  }
  return out;
}

/// Some member of S sufficiently attacks (target_arg, t).
inline bool set_sufficiently_attacks(const Framework& faf, const FuzzySet& s, ArgIndex target_arg, Degree t) {
  detail::require_argument(faf, target_arg);
  for (const Incident& in : faf.attackers(target_arg)) {
    if (!is_tolerable(s[in.other], in.degree, t)) return true;
  }
  return false;
}

}  // namespace fuzzyaf

#endif  // FUZZYAF_ATTACKS_HPP
