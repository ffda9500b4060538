#include "panoptigon/io.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace panoptigon {

namespace {

LatticePoint parse_point(const std::string& token) {
  auto comma = token.find(',');
  if (comma == std::string::npos || token.find(',', comma + 1) != std::string::npos) {
    throw std::invalid_argument("malformed point '" + token + "'");
  }
  return {parse_integer(token.substr(0, comma)), parse_integer(token.substr(comma + 1))};
}

}  // namespace

LatticePolygon parse_polygon(const std::string& text) {
  std::istringstream in(text);
  std::vector<LatticePoint> pts;
  std::string token;
  while (in >> token) pts.push_back(parse_point(token));
  if (pts.empty()) throw std::invalid_argument("polygon has no vertices");
  return convex_hull(pts);
}

std::string format_polygon(const LatticePolygon& p) {
  std::string out;
  for (const auto& v : p.vertices()) {
    if (!out.empty()) out += ' ';
    out += to_string(v.x) + "," + to_string(v.y);
  }
  return out;
}

json to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

json to_json(const LatticePoint& p) { return json::array({to_json(p.x), to_json(p.y)}); }

json to_json(const PointSet& s) {
  json out = json::array();
  for (const auto& p : s) out.push_back(to_json(p));
  return out;
}

json to_json(const LatticePolygon& p) { return {{"vertices", to_json(p.vertices())}}; }

LatticePolygon polygon_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
    throw std::invalid_argument("polygon JSON needs a vertices array");
  }
  std::vector<LatticePoint> pts;
  for (const auto& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 2) throw std::invalid_argument("vertex must be [x, y]");
    pts.push_back({integer_from_json(v[0]), integer_from_json(v[1])});
  }
  if (pts.empty()) throw std::invalid_argument("polygon has no vertices");
  return convex_hull(pts);
}

json to_json(const UnimodularMap& t) {
  const Matrix2& m = t.matrix();
  return {{"matrix", json::array({json::array({to_json(m.a), to_json(m.b)}),
                                  json::array({to_json(m.c), to_json(m.d)})})},
          {"translation", to_json(t.translation())}};
}

UnimodularMap map_from_json(const json& j) {
  const json& m = j.at("matrix");
  const json& t = j.at("translation");
  return {{integer_from_json(m.at(0).at(0)), integer_from_json(m.at(0).at(1)),
           integer_from_json(m.at(1).at(0)), integer_from_json(m.at(1).at(1))},
          {integer_from_json(t.at(0)), integer_from_json(t.at(1))}};
}

std::string to_string(const Functional& f) { return to_string(f.alpha()) + "," + to_string(f.beta()); }

json to_json(const RationalPoint& p) { return json::array({to_string(p.x), to_string(p.y)}); }

json to_json(const RationalPolygon& p) {
  json verts = json::array();
  for (const auto& v : p.vertices) verts.push_back(to_json(v));
  return {{"vertices", verts}, {"is_lattice", p.is_lattice}};
}

json to_json(const HyperellipticForm& f) {
  json out = {{"kind", to_string(f.kind)}, {"g", f.g}, {"i", f.i}, {"j", f.j}};
  if (f.kind == HyperellipticKind::Type3) out["k"] = f.k;
  return out;
}

HyperellipticForm form_from_json(const json& j) {
  HyperellipticForm f;
  f.kind = parse_kind(j.at("kind").get<std::string>());
  f.g = j.at("g").get<int>();
  f.i = j.at("i").get<int>();
  f.j = j.at("j").get<int>();
  f.k = j.value("k", 0);
  if (!is_valid(f)) throw std::invalid_argument("invalid hyperelliptic form");
  return f;
}

json to_json(const CensusRecord& r) {
  json out = {{"canonical", to_json(r.canonical)},
              {"lattice_point_count", to_json(r.lattice_point_count)},
              {"genus", to_json(r.genus)},
              {"lattice_width", to_json(r.lattice_width)},
              {"lattice_diameter", to_json(r.lattice_diameter)},
              {"hyperelliptic", r.hyperelliptic},
              {"panoptigon_points", to_json(r.panoptigon_points)},
              {"relaxation_lattice", r.relaxation_lattice}};
  out["relaxation_witness"] = r.relaxation_witness ? to_json(*r.relaxation_witness) : json(nullptr);
  out["max_polygon"] = r.max_polygon ? to_json(*r.max_polygon) : json(nullptr);
  return out;
}

CensusRecord record_from_json(const json& j) { return make_record(polygon_from_json(j.at("canonical"))); }

json to_json(const CensusSummary& s) {
  json by_count = json::object();
  for (const auto& [k, v] : s.by_count) by_count[k] = v;
  return {{"raw", s.raw},
          {"raw_genus_filter", s.raw_genus_filter},
          {"nonhyperelliptic", s.nonhyperelliptic},
          {"sporadic", s.sporadic},
          {"total", s.total},
          {"lw3plus", s.lw3plus},
          {"by_count", by_count}};
}

}  // namespace panoptigon
