#pragma once

#include <json.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "hamflux/gallery.hpp"
#include "hamflux/momentum.hpp"

namespace hamflux::io {

using json = nlohmann::ordered_json;

inline constexpr std::string_view kSchema = "hamflux/1";

struct GroupElementSpec {
  std::string label;
  Matrix Ad;
  Matrix rhoV;
};

struct FlowSpec {
  Vector v;
  Vector xi;
};

struct SecondActionSpec {
  AlgebraHom zeta;
  std::optional<Matrix> momentum;
};

/// A parsed, axiom-checked problem document. Checks that need the
/// hamiltonian analysis (ζ into ham, momentum equation, group elements) are
/// left to the commands that use them.
struct ProblemFile {
  LieAlgebra algebra;
  ModuleAction module;
  Cochain omega;
  std::optional<AlgebraHom> zeta;
  std::optional<Matrix> momentum;
  std::vector<GroupElementSpec> group_elements;
  std::vector<FlowSpec> flows;
  std::optional<SecondActionSpec> second_action;
};

namespace detail {

inline std::string join(const std::string& path, const std::string& key) { return path + "/" + key; }
inline std::string join(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

[[noreturn]] inline void parse_fail(const std::string& path, const std::string& detail) {
  throw Error(ErrorKind::ParseError, detail, path.empty() ? "/" : path);
}

inline const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) parse_fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(join(path, key), "missing field");
  return *it;
}

inline const json& array(const json& node, const std::string& path) {
  if (!node.is_array()) parse_fail(path, "expected an array");
  return node;
}

inline std::size_t index(const json& node, const std::string& path, std::size_t bound) {
  if (!node.is_number_integer()) parse_fail(path, "expected a non-negative integer");
  const auto v = node.get<long long>();
  if (v < 0 || static_cast<unsigned long long>(v) >= bound)
    parse_fail(path, "index " + std::to_string(v) + " out of range [0, " + std::to_string(bound) + ")");
  return static_cast<std::size_t>(v);
}

inline std::size_t dimension(const json& node, const std::string& path) {
  if (!node.is_number_integer() || node.get<long long>() < 0)
    parse_fail(path, "expected a non-negative integer");
  return node.get<std::size_t>();
}

inline Rational rational(const json& node, const std::string& path) {
  if (node.is_number_integer()) return Rational(node.dump());
  if (!node.is_string()) parse_fail(path, "expected a rational string \"p/q\"");
  auto r = parse_rational(node.get<std::string>());
  if (!r) parse_fail(path, "invalid rational \"" + node.get<std::string>() + "\"");
  return *r;
}

inline Vector vector(const json& node, const std::string& path, std::size_t size) {
  array(node, path);
  if (node.size() != size)
    parse_fail(path, "expected " + std::to_string(size) + " entries, got " + std::to_string(node.size()));
  Vector v(size);
  for (std::size_t i = 0; i < size; ++i) v[i] = rational(node[i], join(path, i));
  return v;
}

inline Matrix matrix(const json& node, const std::string& path, std::size_t rows, std::size_t cols) {
  array(node, path);
  if (node.size() != rows)
    parse_fail(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(node.size()));
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Vector row = vector(node[r], join(path, r), cols);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

// Re-tags a validator error with the document path it came from.
template <class F>
auto at_path(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (!e.path().empty()) throw;
    throw Error(e.kind(), e.detail(), path);
  }
}

// An antisymmetric entry list: (i, j) and (j, i) may both appear only if consistent.
template <class Key>
void put_antisymmetric(std::map<Key, Rational>& entries, std::set<Key>& seen, const Key& key,
                       const Key& mirror, const Rational& value, const std::string& path) {
  if (!seen.insert(key).second) parse_fail(path, "duplicate entry");
  entries[key] = value;
  if (!seen.count(mirror)) entries[mirror] = -value;
}

}  // namespace detail

inline LieAlgebra parse_lie_algebra(const json& node, const std::string& path) {
  const std::size_t n = detail::dimension(detail::field(node, "dim", path), detail::join(path, "dim"));
  std::vector<Rational> c(n * n * n);
  std::set<std::size_t> seen;
  std::map<std::size_t, Rational> entries;
  const std::string bpath = detail::join(path, "brackets");
  const json& list = node.contains("brackets") ? detail::array(node["brackets"], bpath) : json::array();
  for (std::size_t e = 0; e < list.size(); ++e) {
    const std::string epath = detail::join(bpath, e);
    const json& t = detail::array(list[e], epath);
    if (t.size() != 4) detail::parse_fail(epath, "expected [i, j, k, \"p/q\"]");
    const std::size_t i = detail::index(t[0], detail::join(epath, 0), n);
    const std::size_t j = detail::index(t[1], detail::join(epath, 1), n);
    const std::size_t k = detail::index(t[2], detail::join(epath, 2), n);
    const Rational v = detail::rational(t[3], detail::join(epath, 3));
    detail::put_antisymmetric(entries, seen, (i * n + j) * n + k, (j * n + i) * n + k, v, epath);
  }
  for (const auto& [idx, v] : entries) c[idx] = v;
  return detail::at_path(path, [&] { return LieAlgebra::validated(n, std::move(c)); });
}

inline ModuleAction parse_module(const json& node, const std::string& path, const LieAlgebra& h) {
  const std::size_t m = detail::dimension(detail::field(node, "dim", path), detail::join(path, "dim"));
  std::vector<Matrix> action(h.dim(), Matrix(m, m));
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  const std::string apath = detail::join(path, "action");
  const json& list = node.contains("action") ? detail::array(node["action"], apath) : json::array();
  for (std::size_t e = 0; e < list.size(); ++e) {
    const std::string epath = detail::join(apath, e);
    const json& t = detail::array(list[e], epath);
    if (t.size() != 4) detail::parse_fail(epath, "expected [basis, row, col, \"p/q\"]");
    const std::size_t a = detail::index(t[0], detail::join(epath, 0), h.dim());
    const std::size_t r = detail::index(t[1], detail::join(epath, 1), m);
    const std::size_t c = detail::index(t[2], detail::join(epath, 2), m);
    if (!seen.insert({a, r, c}).second) detail::parse_fail(epath, "duplicate entry");
    action[a](r, c) = detail::rational(t[3], detail::join(epath, 3));
  }
  return detail::at_path(path, [&] { return ModuleAction::validated(h, m, std::move(action)); });
}

inline Cochain parse_omega(const json& node, const std::string& path, std::size_t n, std::size_t m) {
  Cochain omega(2, n, m);
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> entries;
  const std::string epath0 = detail::join(path, "entries");
  const json& list = node.contains("entries") ? detail::array(node["entries"], epath0) : json::array();
  for (std::size_t e = 0; e < list.size(); ++e) {
    const std::string epath = detail::join(epath0, e);
    const json& t = detail::array(list[e], epath);
    if (t.size() != 4) detail::parse_fail(epath, "expected [i, j, \"p/q\", component]");
    const std::size_t i = detail::index(t[0], detail::join(epath, 0), n);
    const std::size_t j = detail::index(t[1], detail::join(epath, 1), n);
    const Rational v = detail::rational(t[2], detail::join(epath, 2));
    const std::size_t k = detail::index(t[3], detail::join(epath, 3), m);
    detail::put_antisymmetric(entries, seen, std::tuple{i, j, k}, std::tuple{j, i, k}, v, epath);
  }
  for (const auto& [key, v] : entries) {
    const auto [i, j, k] = key;
    if (i == j) {
      if (v != 0) throw Error(ErrorKind::AntisymmetryViolation, "omega(e_i, e_i) != 0", path);
      continue;
    }
    if (entries.at({j, i, k}) != -v)
      throw Error(ErrorKind::AntisymmetryViolation,
                  "omega(" + std::to_string(i) + "," + std::to_string(j) + ") entries disagree", path);
    if (i < j) {
      Vector val = omega.value({i, j});
      val[k] = v;
      omega.set_value({i, j}, val);
    }
  }
  return omega;
}

inline AlgebraHom parse_hom(const json& node, const std::string& path, const LieAlgebra& target) {
  const LieAlgebra g = parse_lie_algebra(detail::field(node, "algebra", path), detail::join(path, "algebra"));
  const Matrix mat = detail::matrix(detail::field(node, "matrix", path), detail::join(path, "matrix"),
                                    target.dim(), g.dim());
  return detail::at_path(detail::join(path, "matrix"),
                         [&] { return AlgebraHom::validated(g, target, mat); });
}

/// Parses and validates a problem document. Throws ParseError or an axiom
/// error, both carrying the JSON path of the offending node.
inline ProblemFile parse_problem(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what(), "/");
  }
  if (!doc.is_object()) detail::parse_fail("", "document must be an object");
  const json& schema = detail::field(doc, "schema", "");
  if (!schema.is_string() || schema.get<std::string>() != kSchema)
    detail::parse_fail("/schema", "expected \"" + std::string(kSchema) + "\"");

  ProblemFile p;
  p.algebra = parse_lie_algebra(detail::field(doc, "lie_algebra", ""), "/lie_algebra");
  p.module = doc.contains("module") ? parse_module(doc["module"], "/module", p.algebra)
                                    : adjoint_module(p.algebra);
  const std::size_t n = p.algebra.dim(), m = p.module.dim();
  p.omega = doc.contains("omega") ? parse_omega(doc["omega"], "/omega", n, m) : Cochain(2, n, m);
  if (doc.contains("zeta")) p.zeta = parse_hom(doc["zeta"], "/zeta", p.algebra);
  const std::size_t r = p.zeta ? p.zeta->source().dim() : 0;
  if (doc.contains("momentum")) {
    if (!p.zeta) throw Error(ErrorKind::ValidationError, "momentum requires zeta", "/momentum");
    p.momentum = detail::matrix(doc["momentum"], "/momentum", m, r);
  }
  if (doc.contains("group_elements")) {
    const json& list = detail::array(doc["group_elements"], "/group_elements");
    if (!p.zeta && !list.empty())
      throw Error(ErrorKind::ValidationError, "group elements require zeta", "/group_elements");
    for (std::size_t e = 0; e < list.size(); ++e) {
      const std::string epath = detail::join("/group_elements", e);
      GroupElementSpec g;
      if (list[e].contains("label")) {
        if (!list[e]["label"].is_string()) detail::parse_fail(epath + "/label", "expected a string");
        g.label = list[e]["label"].get<std::string>();
      } else {
        g.label = "g" + std::to_string(e);
      }
      g.Ad = detail::matrix(detail::field(list[e], "Ad", epath), epath + "/Ad", r, r);
      g.rhoV = detail::matrix(detail::field(list[e], "rhoV", epath), epath + "/rhoV", m, m);
      p.group_elements.push_back(std::move(g));
    }
  }
  if (doc.contains("noether")) {
    const json& nd = doc["noether"];
    if (!nd.is_object()) detail::parse_fail("/noether", "expected an object");
    if (nd.contains("invariant_flow")) {
      const json& list = detail::array(nd["invariant_flow"], "/noether/invariant_flow");
      for (std::size_t e = 0; e < list.size(); ++e) {
        const std::string epath = detail::join("/noether/invariant_flow", e);
        p.flows.push_back({detail::vector(detail::field(list[e], "v", epath), epath + "/v", m),
                           detail::vector(detail::field(list[e], "xi", epath), epath + "/xi", n)});
      }
    }
    if (nd.contains("second_action")) {
      const std::string spath = "/noether/second_action";
      SecondActionSpec s{parse_hom(nd["second_action"], spath, p.algebra), std::nullopt};
      if (nd["second_action"].contains("momentum"))
        s.momentum = detail::matrix(nd["second_action"]["momentum"], spath + "/momentum", m,
                                    s.zeta.source().dim());
      p.second_action = std::move(s);
    }
  }
  return p;
}

// ---- serialization (canonical: sorted sparse lists, nonzero entries only) ----

inline json to_json(const Rational& r) { return to_string(r); }

inline json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

inline json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

inline json to_json(const LieAlgebra& a) {
  const std::size_t n = a.dim();
  json brackets = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (a.constant(i, j, k) != 0) brackets.push_back({i, j, k, to_string(a.constant(i, j, k))});
  return {{"dim", n}, {"brackets", std::move(brackets)}};
}

inline json to_json(const ModuleAction& mod) {
  json action = json::array();
  for (std::size_t a = 0; a < mod.algebra_dim(); ++a)
    for (std::size_t r = 0; r < mod.dim(); ++r)
      for (std::size_t c = 0; c < mod.dim(); ++c)
        if (mod.action(a)(r, c) != 0) action.push_back({a, r, c, to_string(mod.action(a)(r, c))});
  return {{"dim", mod.dim()}, {"action", std::move(action)}};
}

/// Sparse entries [i, j, "p/q", component] with i < j.
inline json cochain_entries(const Cochain& c) {
  json entries = json::array();
  for (const auto& ij : index_tuples(c.algebra_dim(), 2)) {
    const Vector v = c.value(ij);
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0) entries.push_back({ij[0], ij[1], to_string(v[k]), k});
  }
  return entries;
}

inline json hom_to_json(const AlgebraHom& h) {
  return {{"algebra", to_json(h.source())}, {"matrix", to_json(h.matrix())}};
}

inline json to_json(const ProblemFile& p) {
  json doc = {{"schema", std::string(kSchema)},
              {"lie_algebra", to_json(p.algebra)},
              {"module", to_json(p.module)},
              {"omega", {{"entries", cochain_entries(p.omega)}}}};
  if (p.zeta) doc["zeta"] = hom_to_json(*p.zeta);
  if (p.momentum) doc["momentum"] = to_json(*p.momentum);
  if (!p.group_elements.empty()) {
    json list = json::array();
    for (const auto& g : p.group_elements)
      list.push_back({{"label", g.label}, {"Ad", to_json(g.Ad)}, {"rhoV", to_json(g.rhoV)}});
    doc["group_elements"] = std::move(list);
  }
  if (!p.flows.empty() || p.second_action) {
    json nd = json::object();
    if (!p.flows.empty()) {
      json list = json::array();
      for (const auto& f : p.flows) list.push_back({{"v", to_json(f.v)}, {"xi", to_json(f.xi)}});
      nd["invariant_flow"] = std::move(list);
    }
    if (p.second_action) {
      json s = hom_to_json(p.second_action->zeta);
      if (p.second_action->momentum) s["momentum"] = to_json(*p.second_action->momentum);
      nd["second_action"] = std::move(s);
    }
    doc["noether"] = std::move(nd);
  }
  return doc;
}

inline ProblemFile problem_from_bundle(const InstanceBundle& b) {
  ProblemFile p;
  p.algebra = b.module.algebra();
  p.module = b.module;
  p.omega = b.omega;
  p.zeta = b.zeta;
  return p;
}

/// Canonical text: two-space indentation and a trailing newline.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline bool operator==(const GroupElementSpec& a, const GroupElementSpec& b) {
  return a.label == b.label && a.Ad == b.Ad && a.rhoV == b.rhoV;
}

inline bool same_hom(const AlgebraHom& a, const AlgebraHom& b) {
  return a.source() == b.source() && a.target() == b.target() && a.matrix() == b.matrix();
}

inline bool operator==(const ProblemFile& a, const ProblemFile& b) {
  auto opt_hom = [](const std::optional<AlgebraHom>& x, const std::optional<AlgebraHom>& y) {
    return x.has_value() == y.has_value() && (!x || same_hom(*x, *y));
  };
  if (!(a.algebra == b.algebra && a.module == b.module && a.omega == b.omega)) return false;
  if (!opt_hom(a.zeta, b.zeta) || a.momentum != b.momentum) return false;
  if (a.group_elements != b.group_elements) return false;
  if (a.flows.size() != b.flows.size()) return false;
  for (std::size_t i = 0; i < a.flows.size(); ++i)
    if (a.flows[i].v != b.flows[i].v || a.flows[i].xi != b.flows[i].xi) return false;
  if (a.second_action.has_value() != b.second_action.has_value()) return false;
  return !a.second_action || (same_hom(a.second_action->zeta, b.second_action->zeta) &&
                              a.second_action->momentum == b.second_action->momentum);
}

}  // namespace hamflux::io
