#ifndef FUZZYAF_REPORT_HPP
#define FUZZYAF_REPORT_HPP

#include <algorithm>
#include <map>
#include <sstream>
#include <string>

#include <json.hpp>

#include "fuzzyaf/format.hpp"
#include "fuzzyaf/recursive.hpp"
#include "fuzzyaf/scc.hpp"

namespace fuzzyaf {

/// Condensation as a DOT digraph: one node per component listing its
/// members with degrees, one edge per component-level attack labelled with
/// the strongest attack degree between the two components.
inline std::string condensation_dot(const Framework& faf) {
  const SccPartition part = compute_sccs(faf);
  const Condensation cond = condensation(faf, part);
  std::map<std::pair<std::size_t, std::size_t>, Degree> strongest;
  for (const Attack& at : faf.attacks()) {
    const std::size_t from = part.index[at.from];
    const std::size_t to = part.index[at.to];
    if (from == to) continue;
    Degree& d = strongest[{from, to}];
    d = max_degree(d, at.degree);
  }
  std::ostringstream os;
  os << "digraph condensation {\n";
  os << "  node [shape=box];\n";
  for (std::size_t s = 0; s < part.size(); ++s) {
    os << "  S" << s + 1 << " [label=\"S" << s + 1;
    for (ArgIndex a : part.components[s]) os << "\\n" << faf.name(a) << ":" << faf.degree(a).to_string();
    os << "\"];\n";
  }
  for (const auto& [from, to] : cond.edges) {
    os << "  S" << from + 1 << " -> S" << to + 1 << " [label=\"" << strongest[{from, to}].to_string() << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

/// One JSON object per trace record, suitable for line-delimited output.
inline nlohmann::ordered_json trace_to_json(const TraceRecord& rec) {
  const Universe& u = *rec.universe;
  nlohmann::ordered_json j;
  j["depth"] = rec.depth;
  if (rec.kind == TraceRecord::Kind::component) {
    j["kind"] = "component";
    j["component"] = fuzzy_set_to_json(u, rec.members);
    j["limited"] = fuzzy_set_to_json(u, rec.limited);
    j["residual"] = fuzzy_set_to_json(u, rec.residual);
    j["defended"] = fuzzy_set_to_json(u, rec.defended);
  } else {
    j["kind"] = "base";
    j["arguments"] = fuzzy_set_to_json(u, rec.members);
  }
  j["candidates"] = fuzzy_set_to_json(u, rec.candidates);
  j["attacks"] = rec.attacks;
  auto& results = j["results"] = nlohmann::ordered_json::array();
  for (const FuzzySet& e : rec.results) results.push_back(fuzzy_set_to_json(u, e));
  return j;
}

inline nlohmann::ordered_json extensions_to_json(const Universe& u, const ExtensionSet& exts, std::size_t limit) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < exts.size() && i < limit; ++i) arr.push_back(fuzzy_set_to_json(u, exts[i]));
  return arr;
}

}  // namespace fuzzyaf

#endif  // FUZZYAF_REPORT_HPP
