#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "arqlab/analysis/nakayama.hpp"
#include "arqlab/analysis/short_cycles.hpp"
#include "arqlab/analysis/slices.hpp"
#include "arqlab/zoo/nakayama.hpp"

namespace arqlab::analysis {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// X -> Y -> X as recorded in a certificate.
struct CycleRecord {
  std::string x, y;
  int rad_xy = 0, rad_yx = 0;
  std::vector<int> image_xy, image_yx;  // dimension vectors of the smallest images
  bool image_xy_socle = false, image_yx_socle = false;
};

struct Certificate {
  std::string algebra;
  std::size_t dim = 0;
  std::vector<std::string> vertex_names;
  std::string verdict;  // "short-cycle-free", "has-short-cycle", or empty for a partial record
  std::optional<CycleRecord> witness;
  std::string route;  // "nakayama" or "slice"
  std::vector<std::string> slice;
  std::vector<std::pair<std::string, std::string>> slice_arrows;
  bool semiregular = false;
  bool double_tau_rigid = false;
  std::vector<int> module_dims;
  int ideal_dim = -1;
  std::vector<int> residual_idempotents;
  std::size_t quotient_dim = 0;
  std::string hereditary_type;
  std::string stable_type;
  std::size_t ai_dim = 0;
  std::vector<int> nakayama_permutation;
  std::vector<Check> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
  const Check* first_failure() const {
    for (const auto& c : checks) {
      if (!c.passed) return &c;
    }
    return nullptr;
  }
};

/// End(M_1 + ... + M_n) for pairwise non-isomorphic indecomposables with
/// End(M_i)/rad = K. Vertex s is M_s; block (s, t) is Hom(M_t, M_s) and the
/// product of f in (s, t) and g in (t, u) is f o g.
template <class K>
AlgebraPtr<K> endomorphism_algebra(const std::vector<Module<K>>& mods, const std::string& name = "End(M)") {
  const int n = static_cast<int>(mods.size());
  typename Algebra<K>::Data d;
  d.name = name;
  d.n = n;
  for (int s = 0; s < n; ++s) d.vertex_names.push_back("M" + std::to_string(s + 1));
  std::vector<std::vector<std::vector<modcat::HomMap<K>>>> maps(n, std::vector<std::vector<modcat::HomMap<K>>>(n));
  std::vector<std::vector<std::vector<int>>> index(n, std::vector<std::vector<int>>(n));
  d.idempotents.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (s == t) {
        auto r = modcat::end_radical(mods[s]);
        if (r.top_dim() != 1) fail(ErrorKind::InvalidArgument, "End(M_" + std::to_string(s + 1) + ")/rad is not the base field");
        maps[s][s].push_back(modcat::identity_map(mods[s]));
        for (const auto& f : r.basis) maps[s][s].push_back(f);
      } else {
        maps[s][t] = modcat::hom(mods[t], mods[s]).basis;
      }
      for (std::size_t k = 0; k < maps[s][t].size(); ++k) {
        index[s][t].push_back(static_cast<int>(d.basis.size()));
        if (s == t && k == 0) d.idempotents[s] = static_cast<int>(d.basis.size());
        d.basis.push_back({"f" + std::to_string(s + 1) + std::to_string(t + 1) + "_" + std::to_string(k), s, t});
      }
    }
  }
  const std::size_t dim = d.basis.size();
  d.products.assign(dim * dim, {});
  for (int s = 0; s < n; ++s) {
    for (int u = 0; u < n; ++u) {
      if (maps[s][u].empty()) continue;
      std::vector<Vec<K>> cols;
      for (const auto& f : maps[s][u]) cols.push_back(f.flatten());
      const auto basis = Mat<K>::from_columns(cols, cols.front().size());
      std::vector<Vec<K>> targets;
      std::vector<std::pair<int, int>> slots;
      for (int t = 0; t < n; ++t) {
        for (std::size_t i = 0; i < maps[s][t].size(); ++i) {
          for (std::size_t j = 0; j < maps[t][u].size(); ++j) {
            targets.push_back(modcat::compose(maps[s][t][i], maps[t][u][j]).flatten());
            slots.push_back({index[s][t][i], index[t][u][j]});
          }
        }
      }
      if (targets.empty()) continue;
      auto sol = exactla::solve(basis, targets);
      for (std::size_t k = 0; k < slots.size(); ++k) {
        if (!sol.solutions[k]) fail(ErrorKind::InternalInconsistency, "composite of module maps outside the Hom basis");
        algcore::SparseVec<K> sv;
        const auto& c = *sol.solutions[k];
        for (std::size_t r = 0; r < c.size(); ++r) {
          if (!c[r].is_zero()) sv.emplace_back(index[s][u][r], c[r]);
        }
        d.products[slots[k].first * dim + slots[k].second] = std::move(sv);
      }
    }
  }
  return Algebra<K>::create(std::move(d));
}

/// Global dimension at most one: every rad P(i) is projective.
template <class K>
bool is_hereditary(const AlgebraPtr<K>& h) {
  for (int v = 0; v < h->num_vertices(); ++v) {
    if (!modcat::is_projective(modcat::radical_module(modcat::projective<K>(h, v)))) return false;
  }
  return true;
}

/// Underlying simple graph of the Gabriel quiver.
template <class K>
std::vector<std::vector<int>> underlying_graph(const Algebra<K>& a) {
  const auto g = a.gabriel_quiver();
  std::vector<std::vector<int>> adj(g.n);
  for (int s = 0; s < g.n; ++s) {
    for (int t = 0; t < g.n; ++t) {
      for (int k = 0; k < g.counts[s][t]; ++k) {
        adj[s].push_back(t);
        adj[t].push_back(s);
      }
    }
  }
  return adj;
}

/// M as a module over A/I, for I inside the annihilator of M.
template <class K>
Module<K> restrict_to(const algcore::Quotient<K>& q, const Module<K>& m) {
  std::vector<int> dims;
  for (int v : q.vertex_map) dims.push_back(m.dim(v));
  for (int v = 0; v < m.num_vertices(); ++v) {
    if (q.vertex_index[v] < 0 && m.dim(v) != 0) fail(ErrorKind::InvalidArgument, "module does not factor through the quotient");
  }
  std::vector<Mat<K>> act;
  for (int b : q.kept_basis) act.push_back(m.act(b));
  return Module<K>(q.algebra, std::move(dims), std::move(act));
}

template <class K>
std::vector<int> socle_dims(const AlgebraPtr<K>& a) {
  std::vector<int> out;
  for (int v = 0; v < a->num_vertices(); ++v) {
    auto soc = modcat::socle_of(modcat::projective<K>(a, v));
    int t = 0;
    for (const auto& s : soc) t += static_cast<int>(s.size());
    out.push_back(t);
  }
  return out;
}

namespace detail {

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

template <class K>
std::string vertex_list(const Algebra<K>& a, const std::vector<int>& vs) {
  std::string s;
  for (int v : vs) s += (s.empty() ? "" : ",") + a.vertex_name(v);
  return "{" + s + "}";
}

}  // namespace detail

/// Runs the slice pipeline on a stable slice: M, I = r_A(M), e, B = A/I,
/// H = End_B(M), A[I]. Every clause becomes a check; nothing throws for a
/// failed clause.
template <class K>
Certificate slice_pipeline(const ARQuiver<K>& q, const Slice& s, const std::string& route) {
  const auto& a = q.algebra;
  Certificate c;
  c.algebra = a->name();
  c.dim = a->dim();
  c.vertex_names = a->vertex_names();
  c.route = route;
  auto add = [&](std::string name, bool ok, std::string detail = "") { c.checks.push_back({std::move(name), ok, std::move(detail)}); };

  for (int x : s.nodes) c.slice.push_back(q.nodes[x].label);
  for (auto [x, y] : s.arrows) c.slice_arrows.push_back({q.nodes[x].label, q.nodes[y].label});
  const std::string bad = slice_violation(q, s, slice_size(q));
  add("stable slice", bad.empty(), bad);
  const auto props = slice_props(q, s);
  c.semiregular = props.semiregular;
  c.double_tau_rigid = props.double_tau_rigid;
  if (route == "slice") add("semiregular", props.semiregular);
  add("double tau-rigid", props.double_tau_rigid);

  std::vector<Module<K>> parts;
  for (int x : s.nodes) parts.push_back(q.nodes[x].module);
  Module<K> m = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) m = modcat::direct_sum(m, parts[k]);
  c.module_dims = m.dims();

  const auto ideal = annihilator(m);
  c.ideal_dim = static_cast<int>(ideal.dim());
  const auto rep = deforming_ideal_check(ideal);
  c.residual_idempotents = rep.e;
  add("I proper with e nonzero", !rep.e.empty() && ideal.dim() < a->dim(), "e = " + detail::vertex_list(*a, rep.e));
  add("IeI = 0", rep.ieI_zero);
  add("l_A(I) = Ie", rep.left_is_Ie);
  add("r_A(I) = eI", rep.right_is_eI);
  add("soc A in I", rep.socle_in_I);
  add("D1", rep.d1);
  add("D2: quiver of B acyclic", rep.d2);
  if (rep.e.empty()) return c;

  const auto quo = algcore::quotient(ideal);
  const auto& b = quo.algebra;
  c.quotient_dim = b->dim();
  std::vector<Module<K>> over_b;
  for (const auto& p : parts) over_b.push_back(restrict_to(quo, p));

  // M is tilting over B: pd <= 1, Ext^1(M, M) = D Hom(M, tau M) = 0, n summands
  Module<K> mb = over_b.front();
  for (std::size_t k = 1; k < over_b.size(); ++k) mb = modcat::direct_sum(mb, over_b[k]);
  const auto cover = modcat::projective_cover(mb);
  const auto omega = modcat::split_submodule(cover.cover, modcat::kernel_of(cover.epi)).sub;
  const bool pd1 = modcat::is_projective(omega);
  add("pd_B M <= 1", pd1);
  bool ext_zero = pd1;
  if (pd1) {
    for (const auto& x : over_b) {
      if (modcat::is_projective(x)) continue;
      const auto tx = artheory::tau(x);
      for (const auto& y : over_b) ext_zero = ext_zero && modcat::hom(y, tx).dim() == 0;
    }
  }
  add("Ext^1_B(M, M) = 0", ext_zero);
  add("summands = vertices of B", static_cast<int>(over_b.size()) == b->num_vertices(),
      std::to_string(over_b.size()) + " vs " + std::to_string(b->num_vertices()));

  const auto h = endomorphism_algebra(over_b);
  add("H = End_B(M) hereditary", is_hereditary<K>(h));
  const auto hq = h->gabriel_quiver();
  bool reversed = true;
  std::vector<std::vector<int>> want(s.nodes.size(), std::vector<int>(s.nodes.size(), 0));
  auto local = [&](int x) { return static_cast<int>(std::lower_bound(s.nodes.begin(), s.nodes.end(), x) - s.nodes.begin()); };
  for (auto [x, y] : s.arrows) ++want[local(y)][local(x)];
  reversed = hq.counts == want;
  add("quiver of H is the opposite of the slice", reversed);
  try {
    c.hereditary_type = artheory::classify_tree(underlying_graph(*h)).str();
  } catch (const Error& err) {
    c.hereditary_type = "";
    add("H of Dynkin type", false, err.what());
  }
  try {
    c.stable_type = artheory::dynkin_type_of(artheory::stable_part(q)).str();
  } catch (const Error&) {
    c.stable_type = "";
  }
  if (!c.hereditary_type.empty()) add("H of Dynkin type", c.hereditary_type == c.stable_type, c.hereditary_type + " vs stable " + c.stable_type);

  const auto nu = nakayama_permutation<K>(a);
  c.nakayama_permutation = nu;
  bool moved = true;
  for (int v : rep.e) moved = moved && nu[v] != v;
  add("e_i != e_nu(i) on e", moved);

  if (rep.deforming()) {
    const auto ai = build_AI(ideal);
    c.ai_dim = ai->dim();
    add("A[I] selfinjective", modcat::is_selfinjective<K>(ai));
    add("A[I] invariants match A", algcore::invariants_match(*a, *ai).has_value(),
        "dim " + std::to_string(ai->dim()) + " vs " + std::to_string(a->dim()));
    add("A[I] socle dims match A", socle_dims<K>(ai) == socle_dims<K>(a));
    bool same_nu = false;
    try {
      same_nu = nakayama_permutation<K>(ai) == nu;
    } catch (const Error&) {
    }
    add("A[I] has the Nakayama permutation of A", same_nu);
  } else {
    add("A[I] built", false, "I is not deforming");
  }
  return c;
}

/// Slice pipeline for a semiregular double tau-rigid slice; CheckFailed
/// names the first violated clause.
template <class K>
Certificate tilted_certificate(const ARQuiver<K>& q, const Slice& s) {
  const auto props = slice_props(q, s);
  if (!props.semiregular || !props.double_tau_rigid) fail(ErrorKind::PreconditionFailed, "slice is not semiregular and double tau-rigid");
  auto c = slice_pipeline(q, s, "slice");
  if (const auto* f = c.first_failure()) fail(ErrorKind::CheckFailed, f->name + (f->detail.empty() ? "" : ": " + f->detail));
  return c;
}

/// Extra clauses of the Nakayama route: J the trace ideal of M, then
/// J in I, l_A(I) = J, eIe = eJe, and B the hereditary Nakayama algebra.
template <class K>
void nakayama_clauses(const ARQuiver<K>& q, const Slice& s, Certificate& c) {
  const auto& a = q.algebra;
  auto add = [&](std::string name, bool ok, std::string detail = "") { c.checks.push_back({std::move(name), ok, std::move(detail)}); };
  Module<K> m = q.nodes[s.nodes.front()].module;
  for (std::size_t k = 1; k < s.nodes.size(); ++k) m = modcat::direct_sum(m, q.nodes[s.nodes[k]].module);
  const auto ideal = annihilator(m);
  const auto j = trace_ideal(m);
  add("J = trace of M in I", ideal.contains_all(j));
  add("l_A(I) = J", annihilator(ideal, Side::Left) == j);
  const Vec<K> e = idempotent_vector(*a, c.residual_idempotents);
  add("eIe = eJe", algcore::sandwich(ideal, e, e) == algcore::sandwich(j, e, e));
  const auto b = algcore::quotient(ideal).algebra;
  const int n = static_cast<int>(s.nodes.size());
  add("B is hereditary Nakayama of length " + std::to_string(n),
      algcore::invariants_match(*b, *zoo::hereditary_nakayama<K>(n)).has_value());
}

template <class K>
CycleRecord cycle_record(const ARQuiver<K>& q, const ShortCycle& w) {
  CycleRecord r;
  r.x = q.nodes[w.x].label;
  r.y = q.nodes[w.y].label;
  r.rad_xy = w.rad_xy;
  r.rad_yx = w.rad_yx;
  const auto f = smallest_map(q, w.x, w.y);
  const auto g = smallest_map(q, w.y, w.x);
  r.image_xy = f.image_dims;
  r.image_yx = g.image_dims;
  r.image_xy_socle = f.image_is_socle;
  r.image_yx_socle = g.image_is_socle;
  return r;
}

/// Short-cycle verdict; when cycle-free, the full certificate. A failed
/// implication that must hold is an InternalInconsistency.
template <class K>
Certificate theorem_check(const AlgebraPtr<K>& a, artheory::KnitOptions opt = {}) {
  if (!modcat::is_selfinjective<K>(a)) fail(ErrorKind::NotSelfinjective, "theorem_check needs a selfinjective algebra");
  opt.hom_table = true;
  const auto q = artheory::knit<K>(a, opt);
  const auto sc = short_cycles(q);
  const auto nk = nakayama_check<K>(a);
  const auto nu = *nk.nu;
  auto base = [&] {
    Certificate c;
    c.algebra = a->name();
    c.dim = a->dim();
    c.vertex_names = a->vertex_names();
    c.nakayama_permutation = nu;
    return c;
  };
  if (sc.has_cycle) {
    Certificate c = base();
    c.verdict = "has-short-cycle";
    c.witness = cycle_record(q, sc.witnesses.front());
    return c;
  }
  if (!nk.fixed_points.empty()) {
    fail(ErrorKind::InternalInconsistency, "no short cycle but nu fixes " + a->vertex_name(nk.fixed_points.front()));
  }
  const auto slices = stable_slices(q);
  if (slices.empty()) fail(ErrorKind::InternalInconsistency, "no stable slice in a cycle-free algebra");
  const auto markers = projective_markers(q);
  bool any_semiregular = false, all_rigid = true;
  for (const auto& s : slices) {
    const auto p = slice_props(q, s, &markers);
    any_semiregular = any_semiregular || p.semiregular;
    all_rigid = all_rigid && p.double_tau_rigid;
  }
  if (any_semiregular == nk.is_nakayama) fail(ErrorKind::InternalInconsistency, "semiregular slices and the Nakayama property disagree");
  if (!all_rigid) fail(ErrorKind::InternalInconsistency, "cycle-free but some stable slice is not double tau-rigid");

  Certificate c;
  if (nk.is_nakayama) {
    std::optional<Slice> s;
    for (int v = 0; v < a->num_vertices() && !s; ++v) s = radical_series_slice(q, v);
    if (!s) fail(ErrorKind::InternalInconsistency, "no radical-series slice in a Nakayama algebra");
    c = slice_pipeline(q, *s, "nakayama");
    nakayama_clauses(q, *s, c);
  } else {
    std::optional<Slice> chosen;
    for (int v = 0; v < a->num_vertices() && !chosen; ++v) {
      if (markers.socle_factors[v] < 0) continue;
      if (std::count(markers.radicals.begin(), markers.radicals.end(), markers.socle_factors[v])) continue;
      auto s = slice_from_projective(q, v);
      if (s && slice_props(q, *s, &markers).semiregular) chosen = s;
    }
    for (std::size_t k = 0; k < slices.size() && !chosen; ++k) {
      if (slice_props(q, slices[k], &markers).semiregular) chosen = slices[k];
    }
    c = slice_pipeline(q, *chosen, "slice");
  }
  c.checks.insert(c.checks.begin(), {Check{"no short cycle", true, std::to_string(sc.pairs_checked) + " pairs"},
                                     Check{"nu without fixed points", true, ""},
                                     Check{"every stable slice double tau-rigid", true, std::to_string(slices.size()) + " slices"}});
  c.verdict = "short-cycle-free";
  c.nakayama_permutation = nu;
  if (const auto* f = c.first_failure()) {
    fail(ErrorKind::InternalInconsistency, "certificate clause failed: " + f->name + (f->detail.empty() ? "" : " (" + f->detail + ")"));
  }
  return c;
}

/// Properties that must hold on every selfinjective algebra of finite type.
struct PropertyReport {
  std::vector<Check> checks;
  bool has_cycle = false;
  bool is_nakayama = false;
  std::size_t slices = 0;
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
};

/// Meshes, the Nakayama-or-semiregular dichotomy, rigidity of all slices
/// when cycle-free, the nu fixed-point law, and agreement of the two
/// annihilator conditions for I = r_A(M) over the first `ideal_samples`
/// slices.
template <class K>
PropertyReport property_suite(const AlgebraPtr<K>& a, artheory::KnitOptions opt = {}, std::size_t ideal_samples = 8) {
  PropertyReport r;
  auto add = [&](std::string name, bool ok, std::string detail = "") { r.checks.push_back({std::move(name), ok, std::move(detail)}); };
  opt.hom_table = true;
  const auto q = artheory::knit<K>(a, opt);
  try {
    artheory::check_meshes(q);
    add("meshes and length additivity", true);
  } catch (const Error& e) {
    add("meshes and length additivity", false, e.what());
  }
  const auto sc = short_cycles(q);
  r.has_cycle = sc.has_cycle;
  const auto nk = nakayama_check<K>(a);
  r.is_nakayama = nk.is_nakayama;
  const auto slices = stable_slices(q);
  r.slices = slices.size();
  const auto markers = projective_markers(q);
  bool any_semiregular = false, all_rigid = true;
  for (const auto& s : slices) {
    const auto p = slice_props(q, s, &markers);
    any_semiregular = any_semiregular || p.semiregular;
    all_rigid = all_rigid && p.double_tau_rigid;
  }
  add("semiregular slice xor Nakayama", any_semiregular != nk.is_nakayama,
      "semiregular " + detail::yes_no(any_semiregular) + ", Nakayama " + detail::yes_no(nk.is_nakayama));
  add("cycle-free implies all slices double tau-rigid", sc.has_cycle || all_rigid);
  if (nk.nu) {
    add("cycle-free implies nu has no fixed point", sc.has_cycle || nk.fixed_points.empty());
  }
  bool agree = true;
  std::string where;
  for (std::size_t k = 0; k < slices.size() && k < ideal_samples; ++k) {
    Module<K> m = q.nodes[slices[k].nodes.front()].module;
    for (std::size_t j = 1; j < slices[k].nodes.size(); ++j) m = modcat::direct_sum(m, q.nodes[slices[k].nodes[j]].module);
    try {
      deforming_ideal_check(annihilator(m));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InternalInconsistency) throw;
      agree = false;
      where = e.what();
    }
  }
  add("l_A(I) = Ie iff r_A(I) = eI when IeI = 0", agree, where);
  return r;
}

}  // namespace arqlab::analysis
