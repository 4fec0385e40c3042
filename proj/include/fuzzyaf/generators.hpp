#ifndef FUZZYAF_GENERATORS_HPP
#define FUZZYAF_GENERATORS_HPP

// Reproducible benchmark families, selected by a small spec language:
//
//   chain(k)            k mutual-attack pairs x_i <-> y_i (arguments 0.8,
//                       x->y 0.8, y->x 0.9) linked by y_i -> x_{i+1} (0.9)
//   cycle(n, degree)    n arguments on a directed cycle, all degrees = degree
//   layered(w, d)       d layers, each a directed w-cycle (arguments 0.8,
//                       cycle attacks 0.9); argument j of layer i attacks
//                       argument j of layer i+1 (0.7)

#include <cstdio>
#include <regex>
#include <stdexcept>
#include <string>

#include "fuzzyaf/framework.hpp"

namespace fuzzyaf {

namespace detail {

inline std::string padded(char prefix, int i, int width) {
  std::string digits = std::to_string(i);
  if (static_cast<int>(digits.size()) < width) digits.insert(0, static_cast<std::size_t>(width) - digits.size(), '0');
  return std::string(1, prefix) + digits;
}

inline int width_for(int n) { return static_cast<int>(std::to_string(n).size()); }

}  // namespace detail

inline Framework chain_of_pairs(int k) {
  if (k < 1) throw std::invalid_argument("chain(k) needs k >= 1");
  const int w = detail::width_for(k);
  FrameworkBuilder b;
  for (int i = 1; i <= k; ++i) {
    const std::string x = detail::padded('x', i, w);
    const std::string y = detail::padded('y', i, w);
    b.argument(x, "0.8").argument(y, "0.8");
    b.attack(x, y, "0.8").attack(y, x, "0.9");
    if (i > 1) b.attack(detail::padded('y', i - 1, w), x, "0.9");
  }
  return b.build();
}

inline Framework cycle_of(int n, Degree degree) {
  if (n < 1) throw std::invalid_argument("cycle(n, degree) needs n >= 1");
  if (degree.is_zero()) throw std::invalid_argument("cycle degree must be positive");
  const int w = detail::width_for(n);
  FrameworkBuilder b;
  for (int i = 1; i <= n; ++i) b.argument(detail::padded('c', i, w), degree);
  for (int i = 1; i <= n; ++i) b.attack(detail::padded('c', i, w), detail::padded('c', i % n + 1, w), degree);
  return b.build();
}

inline Framework layered(int width, int depth) {
  if (width < 1 || depth < 1) throw std::invalid_argument("layered(w, d) needs w, d >= 1");
  const int wl = detail::width_for(depth);
  const int wa = detail::width_for(width);
  auto name = [&](int layer, int j) { return detail::padded('l', layer, wl) + detail::padded('a', j, wa); };
  FrameworkBuilder b;
  for (int i = 1; i <= depth; ++i) {
    for (int j = 1; j <= width; ++j) b.argument(name(i, j), "0.8");
  }
  for (int i = 1; i <= depth; ++i) {
    if (width > 1) {
      for (int j = 1; j <= width; ++j) b.attack(name(i, j), name(i, j % width + 1), "0.9");
    }
    if (i < depth) {
      for (int j = 1; j <= width; ++j) b.attack(name(i, j), name(i + 1, j), "0.7");
    }
  }
  return b.build();
}

/// Builds the framework named by a generator spec such as "chain(4)",
/// "cycle(3, 0.5)" or "layered(3, 4)".
inline Framework generate(const std::string& spec) {
  static const std::regex chain_re(R"(\s*chain\s*\(\s*(\d+)\s*\)\s*)");
  static const std::regex cycle_re(R"(\s*cycle\s*\(\s*(\d+)\s*,\s*([0-9.]+)\s*\)\s*)");
  static const std::regex layered_re(R"(\s*layered\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
  std::smatch m;
  if (std::regex_match(spec, m, chain_re)) return chain_of_pairs(std::stoi(m[1]));
  if (std::regex_match(spec, m, cycle_re)) return cycle_of(std::stoi(m[1]), Degree::from_decimal(m[2].str()));
  if (std::regex_match(spec, m, layered_re)) return layered(std::stoi(m[1]), std::stoi(m[2]));
  throw std::invalid_argument("unknown generator spec '" + spec + "'");
}

}  // namespace fuzzyaf

#endif  // FUZZYAF_GENERATORS_HPP
