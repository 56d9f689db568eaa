#pragma once

// JSON encodings of polytopes, collections, complexes and vectors.
// Rationals are written as "p/q" strings ("p" when q = 1).

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "cayley/complexes.hpp"
#include "cayley/facering.hpp"
#include "cayley/polytope.hpp"

namespace cayley {

using Json = nlohmann::json;

/// Malformed document; `where` names the offending field.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

inline Json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(where, e.what());
  }
  throw FormatError(where, "expected a rational string \"p/q\" or an integer");
}

inline Json to_json(const Point& p) {
  Json a = Json::array();
  for (const auto& x : p) a.push_back(to_json(x));
  return a;
}

inline Json to_json(const Polytope& p) {
  Json verts = Json::array();
  for (const auto& v : p.vertices()) verts.push_back(to_json(v));
  return {{"ambient_dim", p.ambient_dim()}, {"vertices", verts}};
}

namespace detail {
inline std::size_t count_field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(where + "." + key, "missing");
  const Json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) throw FormatError(where + "." + key, "expected a non-negative integer");
  return v.get<std::size_t>();
}
}  // namespace detail

inline Polytope polytope_from_json(const Json& j, const std::string& where = "polytope") {
  const std::size_t dim = detail::count_field(j, "ambient_dim", where);
  if (!j.contains("vertices") || !j.at("vertices").is_array()) throw FormatError(where + ".vertices", "expected an array");
  std::vector<Point> verts;
  const Json& arr = j.at("vertices");
  for (std::size_t v = 0; v < arr.size(); ++v) {
    const std::string w = where + ".vertices[" + std::to_string(v) + "]";
    if (!arr[v].is_array() || arr[v].size() != dim) throw FormatError(w, "expected " + std::to_string(dim) + " coordinates");
    Point p;
    for (std::size_t c = 0; c < dim; ++c) p.push_back(rational_from_json(arr[v][c], w + "[" + std::to_string(c) + "]"));
    verts.push_back(std::move(p));
  }
  try {
    return Polytope(dim, std::move(verts));
  } catch (const std::invalid_argument& e) {
    throw FormatError(where, e.what());
  }
}

inline Json to_json(const PureCollection& c) {
  Json ps = Json::array();
  for (const auto& p : c.polytopes()) ps.push_back(to_json(p));
  return {{"d", c.d()}, {"polytopes", ps}};
}

/// Accepts a collection document, or a single polytope read as m = 1.
inline PureCollection collection_from_json(const Json& j, const std::string& where = "collection") {
  if (j.is_object() && j.contains("ambient_dim") && !j.contains("polytopes")) {
    Polytope p = polytope_from_json(j, where);
    const std::size_t d = p.ambient_dim();
    try {
      return PureCollection(d, {std::move(p)});
    } catch (const std::invalid_argument& e) {
      throw FormatError(where, e.what());
    }
  }
  const std::size_t d = detail::count_field(j, "d", where);
  if (!j.contains("polytopes") || !j.at("polytopes").is_array()) throw FormatError(where + ".polytopes", "expected an array");
  std::vector<Polytope> ps;
  for (std::size_t i = 0; i < j.at("polytopes").size(); ++i)
    ps.push_back(polytope_from_json(j.at("polytopes")[i], where + ".polytopes[" + std::to_string(i) + "]"));
  try {
    return PureCollection(d, std::move(ps));
  } catch (const std::invalid_argument& e) {
    throw FormatError(where, e.what());
  }
}

inline Json to_json(const SimplicialComplex& k) {
  return {{"vertex_count", k.vertex_count()}, {"facets", k.facets()}};
}

inline SimplicialComplex complex_from_json(const Json& j, const std::string& where = "complex") {
  const std::size_t n = detail::count_field(j, "vertex_count", where);
  if (!j.contains("facets") || !j.at("facets").is_array()) throw FormatError(where + ".facets", "expected an array");
  std::vector<VertexSet> facets;
  try {
    facets = j.at("facets").get<std::vector<VertexSet>>();
    return SimplicialComplex(n, std::move(facets));
  } catch (const std::exception& e) {
    throw FormatError(where + ".facets", e.what());
  }
}

inline Json to_json(const FVector& f) { return {{"start", -1}, {"entries", f.counts}}; }
inline Json to_json(const HVector& h) { return {{"start", 0}, {"D", h.D}, {"entries", h.entries}}; }

inline FVector fvector_from_json(const Json& j) {
  if (j.value("start", -1) != -1) throw FormatError("fvector.start", "must be -1");
  return FVector{j.at("entries").get<std::vector<std::int64_t>>()};
}
inline HVector hvector_from_json(const Json& j) {
  HVector h{j.at("D").get<int>(), j.at("entries").get<std::vector<std::int64_t>>()};
  if (h.entries.size() != static_cast<std::size_t>(h.D) + 1) throw FormatError("hvector.entries", "length must be D+1");
  return h;
}

inline Json to_json(const LefschetzCertificate& c) {
  return {{"i", c.i}, {"j", c.j}, {"dim_source", c.dim_source}, {"dim_target", c.dim_target},
          {"rank", c.map_rank}, {"injective", c.injective}};
}

inline Json to_json(const CayleyPolytope& k) {
  Json verts = Json::array();
  Json prov = Json::array();
  for (std::size_t v = 0; v < k.vertices().size(); ++v) {
    verts.push_back(to_json(k.vertices()[v]));
    prov.push_back({k.provenance()[v].summand, k.provenance()[v].vertex});
  }
  return {{"d", k.d()}, {"m", k.m()}, {"dimension", k.dimension()}, {"vertices", verts}, {"provenance", prov}};
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path, e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace cayley
