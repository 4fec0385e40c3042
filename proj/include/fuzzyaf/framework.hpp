#ifndef FUZZYAF_FRAMEWORK_HPP
#define FUZZYAF_FRAMEWORK_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzzyaf/degree.hpp"

namespace fuzzyaf {

using ArgIndex = std::uint32_t;

/// Sorted table of argument names. Frameworks obtained from one another by
/// restriction share a universe, so fuzzy sets stay comparable across them.
class Universe {
public:
  explicit Universe(std::vector<std::string> names) : names_(std::move(names)) {
    std::sort(names_.begin(), names_.end());
    if (std::adjacent_find(names_.begin(), names_.end()) != names_.end()) {
      throw std::invalid_argument("duplicate argument name in universe");
    }
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(ArgIndex i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<ArgIndex> find(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name,
                               [](const std::string& a, std::string_view b) { return a < b; });
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<ArgIndex>(it - names_.begin());
  }

private:
  std::vector<std::string> names_;
};

/// Membership function over a universe. Absent arguments have degree 0, so
/// the dense representation is canonical and == is fuzzy-set equality.
class FuzzySet {
public:
  FuzzySet() = default;
  explicit FuzzySet(std::size_t universe_size) : values_(universe_size) {}

  std::size_t universe_size() const noexcept { return values_.size(); }

  Degree operator[](ArgIndex i) const { return i < values_.size() ? values_[i] : Degree(); }
  void set(ArgIndex i, Degree d) { values_.at(i) = d; }

  bool empty() const noexcept {
    return std::all_of(values_.begin(), values_.end(), [](Degree d) { return d.is_zero(); });
  }

  std::size_t support_size() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(values_.begin(), values_.end(), [](Degree d) { return !d.is_zero(); }));
  }

  std::vector<ArgIndex> support() const {
    std::vector<ArgIndex> out;
    for (ArgIndex i = 0; i < values_.size(); ++i) {
      if (!values_[i].is_zero()) out.push_back(i);
    }
    return out;
  }

  std::span<const Degree> values() const noexcept { return values_; }

  friend bool operator==(const FuzzySet& a, const FuzzySet& b) {
    const std::size_t n = std::max(a.values_.size(), b.values_.size());
    for (ArgIndex i = 0; i < n; ++i) {
      if (a[i] != b[i]) return false;
    }
    return true;
  }

  /// Total order used for deterministic output: the sequences of non-zero
  /// (argument, degree) entries compared lexicographically.
  friend bool operator<(const FuzzySet& a, const FuzzySet& b) {
    const std::size_t n = std::max(a.values_.size(), b.values_.size());
    ArgIndex i = 0;
    ArgIndex j = 0;
    auto skip = [n](const FuzzySet& s, ArgIndex& k) {
      while (k < n && s[k].is_zero()) ++k;
    };
    for (;;) {
      skip(a, i);
      skip(b, j);
      if (i == n || j == n) return i == n && j != n;
      if (i != j) return i < j;
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }

private:
  std::vector<Degree> values_;
};

/// S1 is contained in S2 (pointwise <=).
inline bool fuzzy_subset(const FuzzySet& s1, const FuzzySet& s2) {
  const std::size_t n = std::max(s1.universe_size(), s2.universe_size());
  for (ArgIndex i = 0; i < n; ++i) {
    if (s1[i] > s2[i]) return false;
  }
  return true;
}

/// Pointwise min.
inline FuzzySet intersect(const FuzzySet& a, const FuzzySet& b) {
  FuzzySet out(std::max(a.universe_size(), b.universe_size()));
  for (ArgIndex i = 0; i < out.universe_size(); ++i) out.set(i, tnorm(a[i], b[i]));
  return out;
}

/// Pointwise max.
inline FuzzySet unite(const FuzzySet& a, const FuzzySet& b) {
  FuzzySet out(std::max(a.universe_size(), b.universe_size()));
  for (ArgIndex i = 0; i < out.universe_size(); ++i) out.set(i, max_degree(a[i], b[i]));
  return out;
}

struct Attack {
  ArgIndex from;
  ArgIndex to;
  Degree degree;

  friend bool operator==(const Attack&, const Attack&) = default;
};

struct Incident {
  ArgIndex other;
  Degree degree;
};

/// A fuzzy argumentation framework: a fuzzy set of arguments and a fuzzy set
/// of attacks between them. Immutable once built.
class Framework {
public:
  Framework() : universe_(std::make_shared<Universe>(std::vector<std::string>{})) {}

  Framework(std::shared_ptr<const Universe> universe, FuzzySet args, std::vector<Attack> attacks)
      : universe_(std::move(universe)), args_(std::move(args)), attacks_(std::move(attacks)) {
    if (args_.universe_size() != universe_->size()) {
      throw std::invalid_argument("argument set does not match the universe");
    }
    std::sort(attacks_.begin(), attacks_.end(), [](const Attack& a, const Attack& b) {
      return std::pair(a.from, a.to) < std::pair(b.from, b.to);
    });
    attackers_.resize(universe_->size());
    targets_.resize(universe_->size());
    for (std::size_t k = 0; k < attacks_.size(); ++k) {
      const Attack& at = attacks_[k];
      if (k > 0 && attacks_[k - 1].from == at.from && attacks_[k - 1].to == at.to) {
        throw std::invalid_argument("duplicate attack " + universe_->name(at.from) + "->" +
                                    universe_->name(at.to));
      }
      if (args_[at.from].is_zero() || args_[at.to].is_zero()) {
        throw std::invalid_argument("attack endpoint is not an argument");
      }
      if (at.degree.is_zero()) throw std::invalid_argument("attack of degree 0");
      attackers_[at.to].push_back({at.from, at.degree});
      targets_[at.from].push_back({at.to, at.degree});
    }
  }

  const Universe& universe() const noexcept { return *universe_; }
  const std::shared_ptr<const Universe>& universe_ptr() const noexcept { return universe_; }
  std::size_t universe_size() const noexcept { return universe_->size(); }

  /// The fuzzy set of arguments.
  const FuzzySet& args() const noexcept { return args_; }
  Degree degree(ArgIndex a) const { return args_[a]; }
  bool contains(ArgIndex a) const { return a < universe_size() && !args_[a].is_zero(); }
  std::vector<ArgIndex> arguments() const { return args_.support(); }
  std::size_t argument_count() const { return args_.support_size(); }

  const std::vector<Attack>& attacks() const noexcept { return attacks_; }
  std::span<const Incident> attackers(ArgIndex a) const { return attackers_.at(a); }
  std::span<const Incident> targets(ArgIndex a) const { return targets_.at(a); }

  /// Attack degree, 0 when the pair is not an attack.
  Degree rho(ArgIndex from, ArgIndex to) const {
    for (const Incident& in : attackers_.at(to)) {
      if (in.other == from) return in.degree;
    }
    return Degree();
  }

  ArgIndex index(std::string_view name) const {
    auto i = universe_->find(name);
    if (!i) throw std::out_of_range("unknown argument '" + std::string(name) + "'");
    return *i;
  }
  const std::string& name(ArgIndex a) const { return universe_->name(a); }

  FuzzySet empty_set() const { return FuzzySet(universe_size()); }

  /// Fuzzy set over this framework's universe from (name, decimal) pairs.
  FuzzySet make_set(std::initializer_list<std::pair<std::string_view, std::string_view>> entries) const {
    FuzzySet s = empty_set();
    for (const auto& [n, d] : entries) s.set(index(n), Degree::from_decimal(d));
    return s;
  }

  friend bool operator==(const Framework& a, const Framework& b) {
    return a.universe_->names() == b.universe_->names() && a.args_ == b.args_ &&
           a.attacks_ == b.attacks_;
  }

private:
  std::shared_ptr<const Universe> universe_;
  FuzzySet args_;
  std::vector<Attack> attacks_;
  std::vector<std::vector<Incident>> attackers_;
  std::vector<std::vector<Incident>> targets_;
};

/// Collects named arguments and attacks, then validates and freezes them.
class FrameworkBuilder {
public:
  FrameworkBuilder& argument(std::string name, Degree degree) {
    if (degree.is_zero()) throw std::invalid_argument("argument '" + name + "' has degree 0");
    if (args_.count(name) != 0) throw std::invalid_argument("duplicate argument '" + name + "'");
    args_.emplace(std::move(name), degree);
    return *this;
  }
  FrameworkBuilder& argument(std::string name, std::string_view degree) {
    return argument(std::move(name), Degree::from_decimal(degree));
  }

  FrameworkBuilder& attack(std::string from, std::string to, Degree degree) {
    if (degree.is_zero()) throw std::invalid_argument("attack has degree 0");
    attacks_.push_back({std::move(from), std::move(to), degree});
    return *this;
  }
  FrameworkBuilder& attack(std::string from, std::string to, std::string_view degree) {
    return attack(std::move(from), std::move(to), Degree::from_decimal(degree));
  }

  bool has_argument(const std::string& name) const { return args_.count(name) != 0; }

  Framework build() const {
    std::vector<std::string> names;
    names.reserve(args_.size());
    for (const auto& [n, d] : args_) names.push_back(n);
    auto universe = std::make_shared<const Universe>(std::move(names));
    FuzzySet args(universe->size());
    ArgIndex i = 0;
    for (const auto& [n, d] : args_) args.set(i++, d);
    std::vector<Attack> attacks;
    attacks.reserve(attacks_.size());
    for (const auto& a : attacks_) {
      auto from = universe->find(a.from);
      auto to = universe->find(a.to);
      if (!from || !to) {
        throw std::invalid_argument("attack " + a.from + "->" + a.to + " has an undeclared endpoint");
      }
      attacks.push_back({*from, *to, a.degree});
    }
    return Framework(std::move(universe), std::move(args), std::move(attacks));
  }

private:
  struct NamedAttack {
    std::string from;
    std::string to;
    Degree degree;
  };
  std::map<std::string, Degree> args_;
  std::vector<NamedAttack> attacks_;
};

/// Restriction of a framework to a fuzzy subset S of its arguments: S becomes
/// the argument set and only attacks inside Supp(S) survive.
inline Framework restrict(const Framework& faf, const FuzzySet& s) {
  if (!fuzzy_subset(s, faf.args())) {
    throw std::invalid_argument("restriction set is not a fuzzy subset of the arguments");
  }
  FuzzySet args(faf.universe_size());
  for (ArgIndex i = 0; i < s.universe_size(); ++i) args.set(i, s[i]);
  std::vector<Attack> attacks;
  for (const Attack& a : faf.attacks()) {
    if (!s[a.from].is_zero() && !s[a.to].is_zero()) attacks.push_back(a);
  }
  return Framework(faf.universe_ptr(), std::move(args), std::move(attacks));
}

/// Sorted, complement-closed finite set of degrees from which enumerated
/// extensions take their values.
class DegreeLattice {
public:
  DegreeLattice() : DegreeLattice(std::vector<Degree>{}) {}

  /// Adds 0 and 1, sorts and deduplicates. Throws if the result is not
  /// closed under complement.
  explicit DegreeLattice(std::vector<Degree> values) : values_(std::move(values)) {
    values_.push_back(Degree::zero());
    values_.push_back(Degree::one());
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
    for (Degree v : values_) {
      if (!contains(v.complement())) {
        throw std::invalid_argument("degree lattice is not closed under complement: missing " +
                                    v.complement().to_string());
      }
    }
  }

  const std::vector<Degree>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  bool contains(Degree d) const { return std::binary_search(values_.begin(), values_.end(), d); }

  /// Values v with v <= cap, ascending.
  std::span<const Degree> up_to(Degree cap) const {
    auto end = std::upper_bound(values_.begin(), values_.end(), cap);
    return {values_.data(), static_cast<std::size_t>(end - values_.begin())};
  }

  /// Values v with lo <= v <= hi, ascending.
  std::span<const Degree> between(Degree lo, Degree hi) const {
    auto begin = std::lower_bound(values_.begin(), values_.end(), lo);
    auto end = std::upper_bound(values_.begin(), values_.end(), hi);
    if (end < begin) end = begin;
    return {values_.data() + (begin - values_.begin()), static_cast<std::size_t>(end - begin)};
  }

  /// Position of d, or the number of values below d if d is not a member.
  std::size_t rank(Degree d) const {
    return static_cast<std::size_t>(std::lower_bound(values_.begin(), values_.end(), d) - values_.begin());
  }

  friend bool operator==(const DegreeLattice&, const DegreeLattice&) = default;

private:
  std::vector<Degree> values_;
};

/// {0, 1/2, 1} together with every argument and attack degree and their
/// complements.
inline DegreeLattice breakpoint_lattice(const Framework& faf) {
  std::vector<Degree> values{Degree::half()};
  auto add = [&values](Degree d) {
    values.push_back(d);
    values.push_back(d.complement());
  };
  for (ArgIndex a : faf.arguments()) add(faf.degree(a));
  for (const Attack& at : faf.attacks()) add(at.degree);
  return DegreeLattice(std::move(values));
}

/// Breakpoint lattice refined by the uniform grid {i/k : 0 <= i <= k}.
inline DegreeLattice grid_lattice(const Framework& faf, int k) {
  if (k < 2) throw std::invalid_argument("grid step must be at least 2");
  std::vector<Degree> values = breakpoint_lattice(faf).values();
  for (int i = 0; i <= k; ++i) values.push_back(Degree::ratio(i, k));
  return DegreeLattice(std::move(values));
}

}  // namespace fuzzyaf

#endif  // FUZZYAF_FRAMEWORK_HPP
