// arqlab: command-line front end.
//
// Exit codes: 0 ok, 2 bad input or parameters, 3 has a short cycle
// (short-cycles, theorem-check), 4 budget exceeded, 5 internal inconsistency.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "arqlab/algcore.hpp"
#include "arqlab/analysis.hpp"
#include "arqlab/artheory.hpp"
#include "arqlab/modcat.hpp"
#include "arqlab/zoo.hpp"

namespace {

using namespace arqlab;
using algcore::AlgebraPtr;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kBadInput = 2;
constexpr int kShortCycle = 3;
constexpr int kBudget = 4;
constexpr int kInconsistent = 5;

struct Options {
  std::string command;
  std::string family;  // make
  std::vector<std::string> args;
  std::string input;
  std::string field;
  std::string format;
  int budget_nodes = 512;
  int budget_dim = 64;
  bool all_witnesses = false;
  bool certificate = false;
};

// Inputs may be pipes (stdin, process substitution), so each is read once.
std::string read_input(const std::string& path) {
  static std::map<std::string, std::string> cache;
  if (auto it = cache.find(path); it != cache.end()) return it->second;
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Parse, "cannot read '" + path + "'");
    ss << in.rdbuf();
  }
  return cache[path] = ss.str();
}

int to_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    fail(ErrorKind::InvalidArgument, what + " must be an integer, got '" + s + "'");
  }
  if (used != s.size()) fail(ErrorKind::InvalidArgument, what + " must be an integer, got '" + s + "'");
  return v;
}

template <class K>
class Runner {
 public:
  explicit Runner(const Options& o, exactla::FieldSpec field) : o_(o), field_(field) {}

  int run() {
    if (o_.command == "make") return make();
    auto a = load(o_.input);
    if (o_.command == "indec") return indec(a);
    if (o_.command == "ar-quiver") return ar_quiver(a, format("text"));
    if (o_.command == "short-cycles") return cycles(a);
    if (o_.command == "slices") return slices(a);
    if (o_.command == "theorem-check") return theorem(a);
    if (o_.command == "export") {
      if (o_.certificate) return theorem(a);
      return ar_quiver(a, format("json"));
    }
    fail(ErrorKind::InvalidArgument, "unknown command " + o_.command);
  }

 private:
  const Options& o_;
  exactla::FieldSpec field_;

  std::string format(const std::string& fallback) const { return o_.format.empty() ? fallback : o_.format; }

  artheory::KnitOptions knit_options() const {
    artheory::KnitOptions k;
    k.node_budget = o_.budget_nodes;
    k.dim_budget = o_.budget_dim;
    return k;
  }

  AlgebraPtr<K> load(const std::string& path) {
    auto f = algcore::parse_algebra_file(read_input(path));
    f.field = field_;
    auto a = algcore::build_algebra<K>(f);
    exactla::require_characteristic_above<K>(a->dim(), a->name().empty() ? std::string("algebra") : "algebra " + a->name());
    return a;
  }

  void need_args(std::size_t n, const std::string& usage) const {
    if (o_.args.size() != n) fail(ErrorKind::InvalidArgument, "usage: arqlab make " + usage);
  }

  int make() {
    const auto& f = o_.family;
    const auto& v = o_.args;
    AlgebraPtr<K> a;
    if (f == "nakayama") {
      need_args(2, "nakayama M L");
      a = zoo::nakayama_selfinjective<K>(to_int(v[0], "M"), to_int(v[1], "L"));
    } else if (f == "linear") {
      need_args(1, "linear N");
      a = zoo::hereditary_nakayama<K>(to_int(v[0], "N"));
    } else if (f == "trivext") {
      need_args(2, "trivext FILE R");
      a = zoo::trivial_extension_r<K>(load(v[0]), to_int(v[1], "R"));
    } else if (f == "brauer") {
      if (v.size() < 3) fail(ErrorKind::InvalidArgument, "usage: arqlab make brauer star E M | line E EXC M");
      if (v[0] == "star") {
        need_args(3, "brauer star E M");
        a = zoo::brauer_tree_algebra<K>(zoo::BrauerTree::star(to_int(v[1], "E"), to_int(v[2], "M")));
      } else if (v[0] == "line") {
        need_args(4, "brauer line E EXC M");
        a = zoo::brauer_tree_algebra<K>(zoo::BrauerTree::line(to_int(v[1], "E"), to_int(v[2], "EXC") - 1, to_int(v[3], "M")));
      } else {
        fail(ErrorKind::InvalidArgument, "brauer shape must be star or line");
      }
    } else if (f == "reflect") {
      if (v.size() != 1 && v.size() != 2) fail(ErrorKind::InvalidArgument, "usage: arqlab make reflect FILE [SINK]");
      auto b = load(v[0]);
      int sink = -1;
      if (v.size() == 2) {
        sink = to_int(v[1], "SINK") - 1;
      } else {
        for (int i = 0; i < b->num_vertices() && sink < 0; ++i) {
          if (zoo::is_sink(*b, i)) sink = i;
        }
        if (sink < 0) fail(ErrorKind::NotASink, "the quiver has no sink");
      }
      a = zoo::reflection<K>(b, sink);
    } else if (f == "opext") {
      need_args(3, "opext FILE {P|I|S} VERTEX");
      auto b = load(v[0]);
      const int x = to_int(v[2], "VERTEX") - 1;
      if (x < 0 || x >= b->num_vertices()) fail(ErrorKind::InvalidArgument, "vertex out of range");
      modcat::Module<K> m;
      if (v[1] == "P") m = modcat::projective<K>(b, x);
      else if (v[1] == "I") m = modcat::injective<K>(b, x);
      else if (v[1] == "S") m = modcat::simple<K>(b, x);
      else fail(ErrorKind::InvalidArgument, "module kind must be P, I or S");
      a = zoo::one_point_extension<K>(b, m);
    } else {
      fail(ErrorKind::InvalidArgument, "unknown family '" + f + "' (nakayama, linear, trivext, brauer, reflect, opext)");
    }
    std::cout << algcore::emit_algebra(*a);
    return kOk;
  }

  int indec(const AlgebraPtr<K>& a) {
    auto q = artheory::knit<K>(a, knit_options());
    if (format("text") == "json") {
      json out = json::array();
      for (const auto& n : q.nodes) out.push_back({{"label", n.label}, {"dims", n.module.dims()}, {"projective", n.projective}, {"injective", n.injective}});
      std::cout << out.dump(2) << "\n";
    } else {
      for (const auto& n : q.nodes) std::cout << n.label << " " << n.module.dimvec_string() << "\n";
    }
    return kOk;
  }

  int ar_quiver(const AlgebraPtr<K>& a, const std::string& fmt) {
    auto q = artheory::knit<K>(a, knit_options());
    if (fmt == "dot") {
      std::cout << artheory::to_dot(q);
    } else if (fmt == "json") {
      std::cout << artheory::to_json(q).dump(2) << "\n";
    } else {
      std::cout << q.size() << " indecomposables, " << q.count_projective() << " projective\n";
      for (std::size_t i = 0; i < q.size(); ++i) {
        const auto& n = q.nodes[i];
        std::cout << i + 1 << " " << n.label << " " << n.module.dimvec_string();
        if (n.tau >= 0) std::cout << " tau=" << n.tau + 1;
        std::cout << "\n";
      }
      for (const auto& ar : q.arrows) {
        std::cout << ar.source + 1 << " -> " << ar.target + 1;
        if (ar.multiplicity > 1) std::cout << " x" << ar.multiplicity;
        std::cout << "\n";
      }
    }
    return kOk;
  }

  int cycles(const AlgebraPtr<K>& a) {
    auto q = artheory::knit<K>(a, knit_options());
    auto r = analysis::short_cycles(q, o_.all_witnesses);
    std::vector<analysis::CycleRecord> ws;
    for (const auto& w : r.witnesses) ws.push_back(analysis::cycle_record(q, w));
    const std::string verdict = r.has_cycle ? "has-short-cycle" : "short-cycle-free";
    if (format("text") == "json") {
      json out;
      out["algebra"] = a->name();
      out["verdict"] = verdict;
      out["pairs_checked"] = r.pairs_checked;
      json list = json::array();
      for (const auto& w : ws) list.push_back(analysis::to_json(w));
      out["witnesses"] = list;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << verdict << "\n";
      for (const auto& w : ws) std::cout << "witness " << w.x << " -> " << w.y << " -> " << w.x << "\n";
    }
    return r.has_cycle ? kShortCycle : kOk;
  }

  int slices(const AlgebraPtr<K>& a) {
    auto q = artheory::knit<K>(a, knit_options());
    auto all = analysis::stable_slices(q);
    auto markers = analysis::projective_markers(q);
    json out = json::array();
    for (const auto& s : all) {
      auto p = analysis::slice_props(q, s, &markers);
      json nodes = json::array();
      for (int x : s.nodes) nodes.push_back(q.nodes[x].label);
      out.push_back({{"nodes", nodes}, {"semiregular", p.semiregular}, {"double_tau_rigid", p.double_tau_rigid}});
    }
    if (format("text") == "json") {
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << all.size() << " stable slices\n";
      for (const auto& s : out) {
        std::string line;
        for (const auto& n : s["nodes"]) line += (line.empty() ? "" : " ") + n.get<std::string>();
        std::cout << line << (s["semiregular"].get<bool>() ? " semiregular" : "") << (s["double_tau_rigid"].get<bool>() ? " double-tau-rigid" : "") << "\n";
      }
    }
    return kOk;
  }

  int theorem(const AlgebraPtr<K>& a) {
    auto c = analysis::theorem_check<K>(a, knit_options());
    if (format("json") == "text") std::cout << analysis::render_text(c);
    else std::cout << analysis::to_json(c).dump(2) << "\n";
    return c.verdict == "has-short-cycle" ? kShortCycle : kOk;
  }
};

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::BudgetExceeded: return kBudget;
    case ErrorKind::InternalInconsistency: return kInconsistent;
    default: return kBadInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Auslander-Reiten theory of selfinjective algebras"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub, bool input) {
    if (input) sub->add_option("input", o.input, "algebra file ('-' for stdin)")->required();
    sub->add_option("--field", o.field, "q or gf:p (default: the file's field)");
    sub->add_option("--format", o.format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_option("--budget-nodes", o.budget_nodes, "maximum number of indecomposables")->check(CLI::PositiveNumber);
    sub->add_option("--budget-dim", o.budget_dim, "maximum dimension of an indecomposable")->check(CLI::PositiveNumber);
  };
  auto* make = app.add_subcommand("make", "build an algebra from a family and print it");
  make->add_option("family", o.family, "nakayama, linear, trivext, brauer, reflect or opext")->required();
  make->add_option("args", o.args, "family parameters");
  common(make, false);
  for (const char* name : {"indec", "ar-quiver", "short-cycles", "slices", "theorem-check", "export"}) {
    auto* sub = app.add_subcommand(name);
    common(sub, true);
    if (std::string(name) == "short-cycles") sub->add_flag("--all-witnesses", o.all_witnesses, "list every cycle pair");
    if (std::string(name) == "export") sub->add_flag("--certificate", o.certificate, "export the theorem certificate instead of the AR quiver");
  }
  app.get_subcommand("indec")->description("list the indecomposable modules");
  app.get_subcommand("ar-quiver")->description("knit the Auslander-Reiten quiver");
  app.get_subcommand("short-cycles")->description("search for X -> Y -> X with nonzero radical maps");
  app.get_subcommand("slices")->description("enumerate stable slices");
  app.get_subcommand("theorem-check")->description("short-cycle verdict with a full certificate when cycle-free");
  app.get_subcommand("export")->description("render the AR quiver (dot, json) or the certificate");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kBadInput;
  }
  o.command = app.get_subcommands().front()->get_name();
  try {
    exactla::FieldSpec field;
    if (!o.field.empty()) {
      field = exactla::FieldSpec::parse(o.field);
    } else if (o.command != "make" || o.family == "trivext" || o.family == "reflect" || o.family == "opext") {
      const std::string path = o.command == "make" ? (o.args.empty() ? "" : o.args[0]) : o.input;
      if (!path.empty()) {
        field = algcore::parse_algebra_file(read_input(path)).field;
      }
    }
    if (field.kind == exactla::FieldKind::Prime) {
      exactla::FieldScope scope(field.characteristic);
      return Runner<exactla::ModP>(o, field).run();
    }
    return Runner<exactla::Rational>(o, field).run();
  } catch (const Error& e) {
    std::cerr << "arqlab: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "arqlab: " << e.what() << "\n";
    return kBadInput;
  }
}
