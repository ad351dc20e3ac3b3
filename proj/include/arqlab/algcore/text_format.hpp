#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "arqlab/algcore/presentation.hpp"

namespace arqlab::algcore {

/// Parsed algebra file before the field is fixed. Coefficients are kept as
/// rationals and converted once the field is known.
///
///     arqlab v1
///     name example
///     field Q
///     vertices 3            # optionally followed by 3 vertex names
///     arrow a 1 2
///     relation a*b - 2*c*d
///     length_bound 4        # optional
struct AlgebraFile {
  exactla::FieldSpec field = exactla::FieldSpec::rationals();
  std::string name;
  Quiver quiver;
  std::vector<Relation<exactla::Rational>> relations;
  std::optional<int> length_bound;
};

namespace detail {

inline bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
}

[[noreturn]] inline void parse_error(int line, const std::string& msg) {
  fail(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg);
}

inline int parse_vertex(const std::string& tok, const Quiver& q, int line) {
  for (int v = 0; v < q.n; ++v) {
    if (v < static_cast<int>(q.vertex_names.size()) && q.vertex_names[v] == tok) return v;
  }
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used == tok.size() && v >= 1 && v <= q.n) return v - 1;
  } catch (const std::exception&) {
  }
  parse_error(line, "unknown vertex '" + tok + "'");
}

/// Parses "a*b - 2*c*d + 1/2 e*f". Factors are separated by '*' or blanks.
inline Relation<exactla::Rational> parse_relation(const std::string& text, const Quiver& q, int line) {
  using exactla::Rational;
  std::map<std::vector<int>, Rational> acc;
  std::vector<std::vector<int>> order;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  bool first = true;
  while (true) {
    skip();
    if (i >= text.size()) break;
    Rational sign(1);
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = Rational(-1);
      ++i;
    } else if (!first) {
      parse_error(line, "expected '+' or '-' in relation");
    }
    first = false;
    Rational coef = sign;
    std::vector<int> path;
    bool expect_factor = true;
    while (true) {
      skip();
      if (i >= text.size() || text[i] == '+' || text[i] == '-') break;
      if (text[i] == '*') {
        if (expect_factor) parse_error(line, "misplaced '*'");
        expect_factor = true;
        ++i;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(text[i]))) {
        if (!path.empty()) parse_error(line, "coefficient after an arrow");
        std::size_t j = i;
        while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/')) ++j;
        coef *= Rational::parse(text.substr(i, j - i));
        i = j;
      } else if (is_ident_start(text[i])) {
        std::size_t j = i;
        while (j < text.size() && is_ident_char(text[j])) ++j;
        std::string name = text.substr(i, j - i);
        int a = q.arrow_index(name);
        if (a < 0) parse_error(line, "unknown arrow '" + name + "'");
        path.push_back(a);
        i = j;
      } else {
        parse_error(line, std::string("unexpected character '") + text[i] + "'");
      }
      expect_factor = false;
    }
    if (expect_factor) parse_error(line, "dangling term in relation");
    if (path.empty()) parse_error(line, "relation term without arrows");
    if (!acc.count(path)) order.push_back(path);
    acc[path] += coef;
  }
  Relation<Rational> r;
  for (const auto& p : order) {
    if (!acc[p].is_zero()) r.terms.emplace_back(acc[p], p);
  }
  if (r.terms.empty()) parse_error(line, "relation is zero");
  // longest paths first, then by arrow sequence
  std::stable_sort(r.terms.begin(), r.terms.end(), [](const auto& x, const auto& y) {
    if (x.second.size() != y.second.size()) return x.second.size() > y.second.size();
    return x.second < y.second;
  });
  try {
    relation_endpoints(q, r);
  } catch (const Error& e) {
    parse_error(line, e.what());
  }
  return r;
}

template <class K>
std::string render_relation(const Quiver& q, const Relation<K>& r) {
  std::string s;
  bool first = true;
  for (const auto& [c, path] : r.terms) {
    std::string cs = c.to_string();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    if (cs != "1") s += cs + "*";
    s += path_label(q, {q.arrows[path.front()].src, q.arrows[path.back()].tgt, path});
  }
  return s;
}

}  // namespace detail

inline AlgebraFile parse_algebra_file(const std::string& text) {
  using detail::parse_error;
  AlgebraFile f;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  bool header = false, have_vertices = false, have_field = false;
  while (std::getline(in, raw)) {
    ++line;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::istringstream ls(raw);
    std::string key;
    if (!(ls >> key)) continue;
    if (!header) {
      std::string ver;
      if (key != "arqlab" || !(ls >> ver) || ver != "v1") parse_error(line, "expected header 'arqlab v1'");
      header = true;
      continue;
    }
    std::string rest;
    std::getline(ls, rest);
    std::istringstream rs(rest);
    std::vector<std::string> toks;
    for (std::string t; rs >> t;) toks.push_back(t);
    if (key == "name") {
      f.name.clear();
      for (std::size_t i = 0; i < toks.size(); ++i) f.name += (i ? " " : "") + toks[i];
    } else if (key == "field") {
      if (toks.size() != 1) parse_error(line, "field takes one argument");
      try {
        f.field = exactla::FieldSpec::parse(toks[0]);
      } catch (const Error& e) {
        parse_error(line, e.what());
      }
      have_field = true;
    } else if (key == "vertices") {
      if (have_vertices) parse_error(line, "vertices given twice");
      if (toks.empty()) parse_error(line, "vertices needs a count");
      int n = 0;
      try {
        n = std::stoi(toks[0]);
      } catch (const std::exception&) {
        parse_error(line, "bad vertex count '" + toks[0] + "'");
      }
      if (n <= 0) parse_error(line, "vertex count must be positive");
      if (toks.size() != 1 && toks.size() != static_cast<std::size_t>(n) + 1) {
        parse_error(line, "expected " + std::to_string(n) + " vertex names");
      }
      f.quiver.n = n;
      if (toks.size() > 1) f.quiver.vertex_names.assign(toks.begin() + 1, toks.end());
      have_vertices = true;
    } else if (key == "arrow") {
      if (!have_vertices) parse_error(line, "arrow before vertices");
      if (toks.size() != 3) parse_error(line, "arrow needs: name source target");
      const std::string& nm = toks[0];
      if (!detail::is_ident_start(nm[0]) ||
          !std::all_of(nm.begin(), nm.end(), [](char c) { return detail::is_ident_char(c); })) {
        parse_error(line, "bad arrow name '" + nm + "'");
      }
      if (f.quiver.arrow_index(nm) >= 0) parse_error(line, "duplicate arrow '" + nm + "'");
      f.quiver.arrows.push_back({nm, detail::parse_vertex(toks[1], f.quiver, line),
                                 detail::parse_vertex(toks[2], f.quiver, line)});
    } else if (key == "relation") {
      if (!have_vertices) parse_error(line, "relation before vertices");
      f.relations.push_back(detail::parse_relation(rest, f.quiver, line));
    } else if (key == "length_bound") {
      if (toks.size() != 1) parse_error(line, "length_bound takes one argument");
      try {
        f.length_bound = std::stoi(toks[0]);
      } catch (const std::exception&) {
        parse_error(line, "bad length bound");
      }
    } else {
      parse_error(line, "unknown directive '" + key + "'");
    }
  }
  if (!header) parse_error(line, "empty input");
  if (!have_vertices) parse_error(line, "missing vertices line");
  (void)have_field;
  return f;
}

/// Builds the algebra over K; the caller must have selected a field matching
/// `f.field` (for GF(p), inside a FieldScope).
template <class K>
typename Algebra<K>::Ptr build_algebra(const AlgebraFile& f) {
  if (!(exactla::FieldTraits<K>::spec() == f.field)) {
    fail(ErrorKind::InvalidArgument, "file asks for field " + f.field.to_string() + " but " +
                                         exactla::FieldTraits<K>::spec().to_string() + " is active");
  }
  std::vector<Relation<K>> rels;
  for (const auto& r : f.relations) {
    Relation<K> rk;
    for (const auto& [c, p] : r.terms) {
      K v = exactla::FieldTraits<K>::from_rational(c);
      if (!v.is_zero()) rk.terms.emplace_back(v, p);
    }
    if (!rk.terms.empty()) rels.push_back(std::move(rk));
  }
  if (f.length_bound) return bound_quiver_algebra<K>(f.quiver, rels, *f.length_bound, f.name);
  return bound_quiver_algebra_auto<K>(f.quiver, rels, f.name);
}

/// Renders an algebra in the text format, using its presentation when it has
/// one and an extracted presentation otherwise.
template <class K>
std::string emit_algebra(const Algebra<K>& a) {
  Presentation<K> p = extract_presentation(a);
  std::ostringstream os;
  os << "arqlab v1\n";
  if (!a.name().empty()) os << "name " << a.name() << "\n";
  os << "field " << exactla::FieldTraits<K>::spec().to_string() << "\n";
  os << "vertices " << p.quiver.n;
  bool named = false;
  for (const auto& v : p.quiver.vertex_names) named = named || !v.empty();
  if (named) {
    for (int v = 0; v < p.quiver.n; ++v) os << " " << p.quiver.vertex_name(v);
  }
  os << "\n";
  for (const auto& ar : p.quiver.arrows) {
    os << "arrow " << ar.name << " " << p.quiver.vertex_name(ar.src) << " " << p.quiver.vertex_name(ar.tgt) << "\n";
  }
  for (const auto& r : p.relations) os << "relation " << detail::render_relation(p.quiver, r) << "\n";
  if (p.explicit_bound) os << "length_bound " << p.length_bound << "\n";
  return os.str();
}

}  // namespace arqlab::algcore
