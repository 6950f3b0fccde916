#include "madlie/json_io.hpp"

#include <map>

#include "madlie/errors.hpp"

namespace madlie {

namespace {

RingKind kind_from_string(const std::string& s) {
  if (s == "laurent") return RingKind::laurent;
  if (s == "polynomial") return RingKind::polynomial;
  if (s == "quotient") return RingKind::quotient;
  if (s == "truncated") return RingKind::truncated;
  throw InputError("unknown ring kind '" + s + "'");
}

const Json& require_key(const Json& j, const char* key, const char* where) {
  auto it = j.find(key);
  if (it == j.end())
    throw InputError(std::string(where) + " is missing the '" + key + "' key");
  return *it;
}

std::string element_text(const Json& j, const char* where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InputError(std::string(where) + " entries must be strings");
}

}  // namespace

Rational rational_from_json(const Json& j) {
  // Route through the parser so "3/2" and "-1" share one grammar.
  std::string text = element_text(j, "rational");
  RingElement c = RingElement::parse(RingSpec::rationals(), text);
  if (!c.is_constant()) throw InputError("'" + text + "' is not a rational constant");
  return c.constant_value();
}

RingSpec::Ptr ring_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("ring description must be a JSON object");
  RingKind kind = kind_from_string(require_key(j, "kind", "ring").get<std::string>());
  std::vector<std::string> vars;
  for (const auto& v : require_key(j, "vars", "ring"))
    vars.push_back(v.get<std::string>());
  std::vector<std::string> relations;
  if (j.contains("relations"))
    for (const auto& r : j["relations"]) relations.push_back(r.get<std::string>());
  MonomialOrder order = MonomialOrder::degrevlex;
  if (j.contains("order")) {
    std::string o = j["order"].get<std::string>();
    if (o == "lex")
      order = MonomialOrder::lex;
    else if (o != "degrevlex")
      throw InputError("unknown monomial order '" + o + "'");
  }
  std::optional<std::map<std::string, Rational>> point;
  if (j.contains("point")) {
    std::map<std::string, Rational> pt;
    for (const auto& [key, val] : j["point"].items()) pt[key] = rational_from_json(val);
    point = std::move(pt);
  }
  bool connected_reduced = j.value("connected_reduced", false);
  return RingSpec::make(kind, vars, relations, order, {}, point, connected_reduced);
}

Json ring_to_json(const RingSpec& spec) {
  Json j;
  j["kind"] = to_string(spec.kind());
  j["vars"] = spec.vars();
  j["relations"] = spec.relation_strings();
  j["order"] = spec.order() == MonomialOrder::lex ? "lex" : "degrevlex";
  if (spec.designated_point()) {
    Json pt = Json::object();
    for (const auto& [key, val] : *spec.designated_point()) pt[key] = to_string(val);
    j["point"] = std::move(pt);
  }
  if (spec.connected_reduced()) j["connected_reduced"] = true;
  return j;
}

CartanMatrix cartan_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("algebra description must be a JSON object");
  if (j.contains("matrix")) {
    std::vector<std::vector<int>> rows;
    for (const auto& row : j["matrix"]) {
      rows.emplace_back();
      for (const auto& v : row) rows.back().push_back(v.get<int>());
    }
    return CartanMatrix(std::move(rows));
  }
  std::string type = require_key(j, "type", "algebra").get<std::string>();
  if (type.size() != 1)
    throw InputError("algebra type must be a single letter, got '" + type + "'");
  int rank = require_key(j, "rank", "algebra").get<int>();
  return CartanMatrix::of_type(type[0], rank);
}

LieElement element_from_json(const Json& j, const ChevalleyBasis::Ptr& basis,
                             const RingSpec::Ptr& spec) {
  if (!j.is_object()) throw InputError("element description must be a JSON object");
  const RootSystem& rs = basis->roots();
  LieElement x(basis, spec);
  if (j.contains("h")) {
    for (const auto& [key, val] : j["h"].items()) {
      int i = 0;
      try {
        i = std::stoi(key);
      } catch (const std::exception&) {
        throw InputError("h keys must be 1-based coweight indices, got '" + key + "'");
      }
      if (i < 1 || i > basis->rank())
        throw InputError("coweight index " + key + " out of range 1.." +
                         std::to_string(basis->rank()));
      x.set_coeff(i - 1, RingElement::parse(spec, element_text(val, "h")));
    }
  }
  if (j.contains("e")) {
    for (const auto& [key, val] : j["e"].items()) {
      int idx = rs.parse_root_label(key);
      x.set_coeff(basis->v_index(idx), RingElement::parse(spec, element_text(val, "e")));
    }
  }
  if (j.contains("f")) {
    for (const auto& [key, val] : j["f"].items()) {
      int idx = rs.parse_root_label(key);
      // A positive label under "f" means the corresponding negative root.
      if (idx < rs.num_positive()) idx += rs.num_positive();
      x.set_coeff(basis->v_index(idx), RingElement::parse(spec, element_text(val, "f")));
    }
  }
  return x;
}

Json element_to_json(const LieElement& x) {
  const RootSystem& rs = x.basis()->roots();
  Json h = Json::object(), e = Json::object(), f = Json::object();
  for (int i = 0; i < x.basis()->rank(); ++i)
    if (!x.coeff(i).is_zero()) h[std::to_string(i + 1)] = x.coeff(i).to_string();
  for (int a = 0; a < rs.num_roots(); ++a) {
    RingElement c = x.root_coeff(a);
    if (c.is_zero()) continue;
    if (a < rs.num_positive())
      e[rs.root_label(a)] = c.to_string();
    else
      f[rs.root_label(a - rs.num_positive())] = c.to_string();
  }
  return Json{{"h", std::move(h)}, {"e", std::move(e)}, {"f", std::move(f)}};
}

RingMatrix matrix_from_json(const Json& j, const RingSpec::Ptr& spec) {
  if (!j.is_array() || j.empty())
    throw InputError("matrix must be a nonempty array of rows");
  int rows = static_cast<int>(j.size());
  int cols = static_cast<int>(j[0].size());
  RingMatrix m(spec, rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(j[r].size()) != cols)
      throw InputError("matrix rows have inconsistent lengths");
    for (int c = 0; c < cols; ++c)
      m.at(r, c) = RingElement::parse(spec, element_text(j[r][c], "matrix"));
  }
  return m;
}

Json matrix_to_json(const RingMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

GroupElement group_from_json(const Json& j, const ChevalleyBasis::Ptr& basis,
                             const RingSpec::Ptr& spec) {
  if (!j.is_object()) throw InputError("group element must be a JSON object");
  if (j.contains("word")) {
    GroupElement g = identity_element(basis, spec);
    for (const auto& step : j["word"]) {
      if (step.contains("root")) {
        int idx = basis->roots().parse_root_label(step["root"].get<std::string>());
        RingElement c = RingElement::parse(spec, element_text(step["coeff"], "word"));
        g = mul(g, root_elt(basis, idx, c));
      } else if (step.contains("torus")) {
        int i = step["torus"].get<int>();
        if (i < 1 || i > basis->rank())
          throw InputError("torus index out of range 1.." + std::to_string(basis->rank()));
        RingElement u = RingElement::parse(spec, element_text(step["unit"], "word"));
        g = mul(g, torus_elt(basis, i - 1, u));
      } else {
        throw InputError("word steps need a 'root' or 'torus' key");
      }
    }
    return g;
  }
  if (j.contains("defining_matrix"))
    return from_defining(basis, matrix_from_json(j["defining_matrix"], spec));
  throw InputError("group element needs a 'word' or 'defining_matrix' key");
}

Json group_to_json(const GroupElement& g) {
  Json j = Json::object();
  if (g.defining) j["defining_matrix"] = matrix_to_json(*g.defining);
  if (!g.word.empty()) j["word"] = g.word;
  if (!g.defining) j["adjoint_matrix"] = matrix_to_json(g.adjoint);
  return j;
}

Json rationals_to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

}  // namespace madlie
