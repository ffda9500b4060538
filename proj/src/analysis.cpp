#include "panoptigon/analysis.hpp"

#include <sstream>

namespace panoptigon {

AnalysisReport analyze(const LatticePolygon& p) {
  AnalysisReport r(p);
  r.dimension = p.dimension();
  r.lattice_points = lattice_point_count(p);
  r.genus = genus(p);
  r.width = lattice_width(p);
  r.diameter = lattice_diameter(p);
  r.hyperelliptic = is_hyperelliptic(p);
  r.panoptigon = is_panoptigon(p);
  r.interior = interior_polygon(p);
  if (r.dimension == 2) {
    r.relaxed = relax(p);
    r.canonical = canonical_form(p);
    if (r.hyperelliptic && r.genus >= 2 && r.width.width == 2) r.form = hyperelliptic_normal_form(p);
  }
  if (r.genus >= 1) r.maximal = is_maximal(p);
  if (r.genus >= 2) r.big_face = big_face_obstruction(p);
  return r;
}

namespace {

json functionals(const std::vector<Functional>& fs) {
  json out = json::array();
  for (const auto& f : fs) out.push_back(to_string(f));
  return out;
}

// A functional (alpha, beta) measures width across the direction <beta, -alpha>.
json width_directions(const std::vector<Functional>& fs) {
  json out = json::array();
  for (const auto& f : fs) out.push_back(to_string(Functional::normalized(f.beta(), -f.alpha())));
  return out;
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? to_json(*v) : json(nullptr);
}

std::string verdict_name(Verdict v) { return v == Verdict::Passes ? "PASSES" : "FAILS"; }

}  // namespace

json to_json(const AnalysisReport& r) {
  json out;
  out["polygon"] = to_json(r.input);
  out["dimension"] = r.dimension;
  out["lattice_points"] = to_json(r.lattice_points);
  out["genus"] = to_json(r.genus);
  out["lattice_width"] = {{"width", to_json(r.width.width)},
                          {"functionals", functionals(r.width.directions)},
                          {"directions", width_directions(r.width.directions)}};
  out["lattice_diameter"] = {{"length", to_json(r.diameter.length)},
                             {"directions", functionals(r.diameter.directions)}};
  out["hyperelliptic"] = r.hyperelliptic;
  out["hyperelliptic_form"] = optional_json(r.form);
  out["panoptigon"] = {{"is_panoptigon", r.panoptigon.is_panoptigon},
                       {"panoptigon_points", to_json(r.panoptigon.panoptigon_points)}};
  out["interior_polygon"] = optional_json(r.interior);
  if (r.relaxed) {
    json relaxed = to_json(r.relaxed->polygon);
    relaxed["collapsed_edges"] = r.relaxed->collapsed_edges;
    out["relaxed_polygon"] = relaxed;
  } else {
    out["relaxed_polygon"] = nullptr;
  }
  out["maximal"] = r.maximal ? json(*r.maximal) : json(nullptr);
  out["canonical_form"] = optional_json(r.canonical);
  if (r.big_face) {
    out["big_face"] = {{"verdict", verdict_name(r.big_face->verdict)},
                       {"reasons", r.big_face->reasons},
                       {"interior_panoptigon", r.big_face->interior_panoptigon}};
  } else {
    out["big_face"] = nullptr;
  }
  return out;
}

std::string to_table(const AnalysisReport& r) {
  std::ostringstream out;
  auto row = [&](const std::string& key, const std::string& value) {
    out << key << std::string(key.size() < 20 ? 20 - key.size() : 1, ' ') << value << '\n';
  };
  auto join = [](const std::vector<Functional>& fs) {
    std::string s;
    for (const auto& f : fs) s += (s.empty() ? "" : " ") + ("(" + to_string(f) + ")");
    return s.empty() ? std::string("-") : s;
  };
  const std::string none = "-";
  row("polygon", format_polygon(r.input));
  row("dimension", std::to_string(r.dimension));
  row("lattice points", to_string(r.lattice_points));
  row("genus", to_string(r.genus));
  row("lattice width", to_string(r.width.width) + "  " + join(r.width.directions));
  row("lattice diameter", to_string(r.diameter.length) + "  " + join(r.diameter.directions));
  row("hyperelliptic", r.hyperelliptic ? "yes" : "no");
  row("form", r.form ? to_json(*r.form).dump() : none);
  std::string pts;
  for (const auto& p : r.panoptigon.panoptigon_points) pts += (pts.empty() ? "" : " ") + to_string(p.x) + "," + to_string(p.y);
  row("panoptigon", r.panoptigon.is_panoptigon ? "yes  " + pts : "no");
  row("interior polygon", r.interior ? format_polygon(*r.interior) : none);
  if (r.relaxed) {
    std::string verts;
    for (const auto& v : r.relaxed->polygon.vertices) {
      verts += (verts.empty() ? "" : " ") + to_string(v.x) + "," + to_string(v.y);
    }
    row("relaxed polygon", verts + (r.relaxed->polygon.is_lattice ? "  (lattice)" : "  (not lattice)"));
  } else {
    row("relaxed polygon", none);
  }
  row("maximal", r.maximal ? (*r.maximal ? "yes" : "no") : none);
  row("canonical form", r.canonical ? format_polygon(*r.canonical) : none);
  if (r.big_face) {
    std::string v = verdict_name(r.big_face->verdict);
    for (const auto& reason : r.big_face->reasons) v += "; " + reason;
    row("big face", v);
  } else {
    row("big face", none);
  }
  return out.str();
}

}  // namespace panoptigon
