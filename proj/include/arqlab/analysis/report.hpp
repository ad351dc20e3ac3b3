#pragma once

#include <sstream>
#include <string>

#include "json.hpp"

#include "arqlab/analysis/pipeline.hpp"

namespace arqlab::analysis {

inline nlohmann::json to_json(const CycleRecord& w) {
  return {{"x", w.x},
          {"y", w.y},
          {"rad_xy", w.rad_xy},
          {"rad_yx", w.rad_yx},
          {"image_xy", w.image_xy},
          {"image_yx", w.image_yx},
          {"image_xy_is_socle", w.image_xy_socle},
          {"image_yx_is_socle", w.image_yx_socle}};
}

inline nlohmann::json to_json(const Certificate& c) {
  using nlohmann::json;
  auto name = [&](int v) { return v >= 0 && v < static_cast<int>(c.vertex_names.size()) ? c.vertex_names[v] : std::to_string(v + 1); };
  json out;
  out["algebra"] = c.algebra;
  out["dim"] = c.dim;
  out["verdict"] = c.verdict;
  out["witness"] = c.witness ? to_json(*c.witness) : json(nullptr);
  out["route"] = c.route.empty() ? json(nullptr) : json(c.route);
  json slice = json::array();
  for (const auto& s : c.slice) slice.push_back(s);
  out["slice"] = slice;
  json arrows = json::array();
  for (const auto& [x, y] : c.slice_arrows) arrows.push_back({x, y});
  out["slice_arrows"] = arrows;
  out["semiregular"] = c.semiregular;
  out["double_tau_rigid"] = c.double_tau_rigid;
  out["module_dims"] = c.module_dims;
  out["ideal_dim"] = c.ideal_dim;
  json e = json::array();
  for (int v : c.residual_idempotents) e.push_back(name(v));
  out["residual_idempotents"] = e;
  out["quotient_dim"] = c.quotient_dim;
  out["hereditary_type"] = c.hereditary_type.empty() ? json(nullptr) : json(c.hereditary_type);
  out["stable_type"] = c.stable_type.empty() ? json(nullptr) : json(c.stable_type);
  out["ai_dim"] = c.ai_dim;
  json nu = json::object();
  for (std::size_t v = 0; v < c.nakayama_permutation.size(); ++v) nu[name(static_cast<int>(v))] = name(c.nakayama_permutation[v]);
  out["nakayama_permutation"] = nu;
  json checks = json::array();
  for (const auto& k : c.checks) checks.push_back({{"name", k.name}, {"passed", k.passed}, {"detail", k.detail}});
  out["checks"] = checks;
  return out;
}

inline std::string render_text(const Certificate& c) {
  std::ostringstream os;
  os << "algebra " << c.algebra << " (dim " << c.dim << ")\n";
  os << "verdict " << c.verdict << "\n";
  if (c.witness) {
    const auto& w = *c.witness;
    os << "witness " << w.x << " -> " << w.y << " -> " << w.x << "\n";
  }
  if (!c.route.empty()) {
    os << "route " << c.route << "\n";
    os << "slice";
    for (const auto& s : c.slice) os << " " << s;
    os << "\n";
    os << "ideal dim " << c.ideal_dim << ", quotient dim " << c.quotient_dim << ", A[I] dim " << c.ai_dim << "\n";
    os << "residual idempotents";
    for (int v : c.residual_idempotents) os << " " << (v < static_cast<int>(c.vertex_names.size()) ? c.vertex_names[v] : std::to_string(v + 1));
    os << "\n";
    os << "hereditary type " << (c.hereditary_type.empty() ? "-" : c.hereditary_type) << "\n";
  }
  for (const auto& k : c.checks) {
    os << (k.passed ? "  ok   " : "  FAIL ") << k.name;
    if (!k.detail.empty()) os << " (" << k.detail << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace arqlab::analysis
