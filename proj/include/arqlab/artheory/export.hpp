#pragma once

#include <sstream>
#include <string>

#include "arqlab/artheory/knit.hpp"
#include "json.hpp"

namespace arqlab::artheory {

template <class K>
nlohmann::json to_json(const ARQuiver<K>& q) {
  using nlohmann::json;
  json out;
  out["algebra"] = q.algebra->name();
  out["field"] = exactla::FieldTraits<K>::spec().to_string();
  out["nodes"] = json::array();
  for (std::size_t i = 0; i < q.size(); ++i) {
    const auto& n = q.nodes[i];
    out["nodes"].push_back({{"id", i},
                            {"label", n.label},
                            {"dimension_vector", n.module.dims()},
                            {"dimension", n.module.total()},
                            {"projective", n.projective},
                            {"injective", n.injective}});
  }
  out["arrows"] = json::array();
  for (const auto& a : q.arrows) {
    out["arrows"].push_back({{"source", a.source},
                             {"target", a.target},
                             {"multiplicity", a.multiplicity},
                             {"valuation", {a.valuation_source, a.valuation_target}}});
  }
  out["tau"] = json::array();
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q.nodes[i].tau >= 0) out["tau"].push_back({{"node", i}, {"translate", q.nodes[i].tau}});
  }
  out["orbits"] = json::array();
  bool selfinjective = true;
  for (const auto& n : q.nodes) selfinjective = selfinjective && n.projective == n.injective;
  if (selfinjective) {
    auto s = stable_part(q);
    for (const auto& orbit : s.orbits) {
      json o = json::array();
      for (int x : orbit) o.push_back(s.nodes[x]);
      out["orbits"].push_back(o);
    }
  }
  return out;
}

/// Graphviz rendering: projectives boxed, injectives doubled, tau dashed.
template <class K>
std::string to_dot(const ARQuiver<K>& q) {
  std::ostringstream os;
  os << "digraph AR {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < q.size(); ++i) {
    const auto& n = q.nodes[i];
    std::string label = n.module.dimvec_string();
    if (n.label != label) label = n.label + "\\n" + label;
    if (n.projective) label += n.injective ? "\\nproj-inj" : "\\nproj";
    else if (n.injective) label += "\\ninj";
    os << "  n" << i << " [label=\"" << label << "\"";
    if (n.projective) os << ", shape=box";
    else if (n.injective) os << ", shape=doubleoctagon";
    else os << ", shape=ellipse";
    os << "];\n";
  }
  for (const auto& a : q.arrows) {
    for (int m = 0; m < a.multiplicity; ++m) os << "  n" << a.source << " -> n" << a.target << ";\n";
  }
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q.nodes[i].tau >= 0) {
      os << "  n" << i << " -> n" << q.nodes[i].tau << " [style=dashed, constraint=false, arrowhead=none, color=gray];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace arqlab::artheory
