#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "refloor/classes.hpp"
#include "refloor/counts.hpp"
#include "refloor/diagrams.hpp"
#include "refloor/error.hpp"
#include "refloor/markings.hpp"
#include "refloor/partitions.hpp"
#include "refloor/qalgebra.hpp"

namespace refloor {

using Json = nlohmann::ordered_json;

inline Json to_json(const HalfLaurent& p) {
  Json halves = Json::array();
  for (const auto& [e, c] : p.terms()) halves.push_back(Json::array({e, c.get_str()}));
  return Json{{"halves", halves}};
}

inline Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw Error(ErrorKind::Parse, "bad rational '" + s + "'");
  if (r.get_den() == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

inline HalfLaurent half_laurent_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("halves") || !j["halves"].is_array())
    throw Error(ErrorKind::Parse, "expected {\"halves\": [...]}");
  std::vector<HalfLaurent::Term> terms;
  int last = 0;
  for (const auto& t : j["halves"]) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_string())
      throw Error(ErrorKind::Parse, "expected [exponent, \"num/den\"]");
    const int e = t[0].get<int>();
    if (!terms.empty() && e <= last) throw Error(ErrorKind::Parse, "exponents must be strictly increasing");
    Rational c = parse_rational(t[1].get<std::string>());
    if (c == 0) throw Error(ErrorKind::Parse, "stored coefficients must be nonzero");
    terms.emplace_back(e, c);
    last = e;
  }
  return HalfLaurent::from_terms(std::move(terms));
}

inline Json to_json(const Partition& p) { return Json(p.entries()); }

inline Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "partition must be a JSON array");
  std::vector<int> e;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<int>() < 1) throw Error(ErrorKind::Parse, "partition entries must be positive integers");
    e.push_back(x.get<int>());
  }
  return Partition(std::move(e));
}

inline Json to_json(const CurveClass& d) { return Json{{"k", d.k()}, {"a", d.a()}, {"b", d.b()}}; }

inline CurveClass curve_class_from_json(const Json& j) {
  try {
    CurveClass d(j.at("a").get<int>(), j.at("b").get<std::vector<int>>());
    if (j.contains("k") && j["k"].get<int>() != d.k()) throw Error(ErrorKind::Parse, "k disagrees with the length of b");
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

inline Json to_json(const FloorDiagram& d) {
  Json vs = Json::array(), es = Json::array();
  for (const auto& v : d.vertices()) vs.push_back({{"id", v.id}, {"kind", std::string(to_string(v.kind))}});
  for (const auto& e : d.edges()) es.push_back({{"src", e.src}, {"dst", e.dst}, {"w", e.weight}});
  return Json{{"vertices", vs}, {"edges", es}};
}

inline FloorDiagram floor_diagram_from_json(const Json& j) {
  try {
    std::vector<VertexKind> kinds;
    for (const auto& v : j.at("vertices")) {
      if (v.at("id").get<int>() != static_cast<int>(kinds.size())) throw Error(ErrorKind::Parse, "vertex ids must be 0, 1, 2, ...");
      kinds.push_back(parse_vertex_kind(v.at("kind").get<std::string>()));
    }
    std::vector<std::array<int, 3>> edges;
    for (const auto& e : j.at("edges")) edges.push_back({e.at("src").get<int>(), e.at("dst").get<int>(), e.at("w").get<int>()});
    return FloorDiagram(kinds, edges);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

inline Json to_json(const MarkedDiagram& m) {
  Json a0 = Json::array();
  for (size_t l = 0; l < m.a0.size(); ++l) a0.push_back({{"label", l + 1}, {"target", to_string(m.a0[l])}});
  Json ai = Json::object();
  for (size_t i = 0; i < m.ai.size(); ++i) {
    Json set = Json::array();
    for (int v : m.ai[i]) set.push_back("v" + std::to_string(v));
    ai[std::to_string(i + 1)] = set;
  }
  return Json{{"A0", a0}, {"Ai", ai}};
}

inline Json to_json(const MarkingSpec& s) {
  return Json{{"class", to_json(s.d)}, {"genus", s.genus}, {"mu1", to_json(s.mu1)}, {"mu2", to_json(s.mu2)}};
}

inline Json to_json(const CountReport& r) {
  Json items = Json::array();
  for (const auto& i : r.items)
    items.push_back({{"diagram", i.diagram},
                     {"description", i.description},
                     {"classes", i.classes.get_str()},
                     {"mult_refined", to_json(i.mult_refined)},
                     {"mult_complex", i.mult_complex.get_str()},
                     {"contribution", to_quantum_basis_string(i.contribution_refined)},
                     {"representative", to_json(i.representative)}});
  return Json{{"spec", to_json(r.spec)},
              {"items", items},
              {"total_refined", to_json(r.total_refined)},
              {"total_complex", r.total_complex.get_str()}};
}

}  // namespace refloor
