#ifndef FUZZYAF_SCC_HPP
#define FUZZYAF_SCC_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <queue>
#include <set>
#include <vector>

#include "fuzzyaf/framework.hpp"

namespace fuzzyaf {

/// Strongly connected components of the attack graph. Components are
/// numbered by their smallest member, so numbering is reproducible.
struct SccPartition {
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  std::vector<std::vector<ArgIndex>> components;  // members ascending
  std::vector<std::size_t> index;                 // universe position -> ordinal, npos if absent

  std::size_t size() const noexcept { return components.size(); }

  /// The component as a fuzzy set carrying the members' full degrees.
  FuzzySet as_fuzzy_set(const Framework& faf, std::size_t ordinal) const {
    FuzzySet s = faf.empty_set();
    for (ArgIndex a : components.at(ordinal)) s.set(a, faf.degree(a));
    return s;
  }
};

/// Tarjan's algorithm, iterative so deep attack chains do not exhaust the
/// stack. Attack degrees are irrelevant; any attack is an edge.
inline SccPartition compute_sccs(const Framework& faf) {
  const std::size_t n = faf.universe_size();
  constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> order(n, unvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<ArgIndex> stack;
  std::vector<std::vector<ArgIndex>> found;
  std::size_t counter = 0;

  struct Frame {
    ArgIndex node;
    std::size_t next_edge;
  };
  std::vector<Frame> call;

  for (ArgIndex root : faf.arguments()) {
    if (order[root] != unvisited) continue;
    call.push_back({root, 0});
    order[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto targets = faf.targets(f.node);
      if (f.next_edge < targets.size()) {
        const ArgIndex w = targets[f.next_edge++].other;
        if (order[w] == unvisited) {
          order[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.node] = std::min(low[f.node], order[w]);
        }
        continue;
      }
      const ArgIndex v = f.node;
      call.pop_back();
      if (!call.empty()) low[call.back().node] = std::min(low[call.back().node], low[v]);
      if (low[v] == order[v]) {
        std::vector<ArgIndex> comp;
        ArgIndex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        found.push_back(std::move(comp));
      }
    }
  }

  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  SccPartition p;
  p.components = std::move(found);
  p.index.assign(n, SccPartition::npos);
  for (std::size_t c = 0; c < p.components.size(); ++c) {
    for (ArgIndex a : p.components[c]) p.index[a] = c;
  }
  return p;
}

/// The acyclic component-level attack graph.
struct Condensation {
  std::size_t node_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (attacker, attacked), sorted, unique
  std::vector<std::vector<std::size_t>> parents;           // sccparents, ascending
  std::vector<std::vector<std::size_t>> ancestors;         // sccanc, ascending
  std::vector<std::size_t> topo_order;

  bool is_initial(std::size_t s) const { return parents.at(s).empty(); }

  std::vector<std::size_t> initial() const {
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < node_count; ++s) {
      if (is_initial(s)) out.push_back(s);
    }
    return out;
  }
};

/// Topological order breaks ties by the smallest ordinal, i.e. by the
/// smallest member argument.
inline Condensation condensation(const Framework& faf, const SccPartition& p) {
  Condensation c;
  c.node_count = p.size();
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const Attack& at : faf.attacks()) {
    const std::size_t from = p.index.at(at.from);
    const std::size_t to = p.index.at(at.to);
    if (from != to) edges.emplace(from, to);
  }
  c.edges.assign(edges.begin(), edges.end());
  c.parents.resize(c.node_count);
  std::vector<std::vector<std::size_t>> children(c.node_count);
  std::vector<std::size_t> indegree(c.node_count, 0);
  for (const auto& [from, to] : c.edges) {
    c.parents[to].push_back(from);
    children[from].push_back(to);
    ++indegree[to];
  }
  for (auto& ps : c.parents) std::sort(ps.begin(), ps.end());

  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t s = 0; s < c.node_count; ++s) {
    if (indegree[s] == 0) ready.push(s);
  }
  while (!ready.empty()) {
    const std::size_t s = ready.top();
    ready.pop();
    c.topo_order.push_back(s);
    for (std::size_t t : children[s]) {
      if (--indegree[t] == 0) ready.push(t);
    }
  }

  c.ancestors.resize(c.node_count);
  for (std::size_t s : c.topo_order) {
    std::set<std::size_t> anc;
    for (std::size_t par : c.parents[s]) {
      anc.insert(par);
      anc.insert(c.ancestors[par].begin(), c.ancestors[par].end());
    }
    c.ancestors[s].assign(anc.begin(), anc.end());
  }
  return c;
}

inline bool is_single_scc(const Framework& faf) { return compute_sccs(faf).size() == 1; }

}  // namespace fuzzyaf

#endif  // FUZZYAF_SCC_HPP
