#include "panoptigon/svg.hpp"

#include <cstdio>
#include <stdexcept>

#include "panoptigon/classify.hpp"
#include "panoptigon/relaxation.hpp"

namespace panoptigon {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg(const LatticePolygon& p, const SvgOptions& options) {
  if (p.dimension() < 2) throw std::invalid_argument("cannot render dimension < 2");
  BoundingBox box = bounding_box(p);
  std::optional<Relaxation> relaxed;
  Integer xmin = box.xmin, xmax = box.xmax, ymin = box.ymin, ymax = box.ymax;
  if (options.relaxed) {
    relaxed = relax(p);
    for (const auto& v : relaxed->polygon.vertices) {
      xmin = std::min(xmin, floor(v.x));
      xmax = std::max(xmax, ceil(v.x));
      ymin = std::min(ymin, floor(v.y));
      ymax = std::max(ymax, ceil(v.y));
    }
  }
  const double u = options.unit;
  const double x0 = xmin.convert_to<double>() - 1;
  const double y1 = ymax.convert_to<double>() + 1;
  auto px = [&](double x) { return fmt((x - x0) * u); };
  auto py = [&](double y) { return fmt((y1 - y) * u); };
  const double width = ((xmax - xmin).convert_to<double>() + 2) * u;
  const double height = ((ymax - ymin).convert_to<double>() + 2) * u;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" + fmt(height) +
         "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (Integer y = ymin; y <= ymax; ++y) {
    for (Integer x = xmin; x <= xmax; ++x) {
      out += "<circle class=\"grid\" cx=\"" + px(x.convert_to<double>()) + "\" cy=\"" + py(y.convert_to<double>()) +
             "\" r=\"1.5\" fill=\"#bbbbbb\"/>\n";
    }
  }

  if (relaxed) {
    std::string pts;
    for (const auto& v : relaxed->polygon.vertices) {
      pts += px(v.x.convert_to<double>()) + "," + py(v.y.convert_to<double>()) + " ";
    }
    out += "<polygon class=\"relaxed\" points=\"" + pts + "\" fill=\"none\" stroke=\"#888888\" stroke-dasharray=\"6,4\"/>\n";
  }

  std::string outline;
  for (const auto& v : p.vertices()) {
    outline += px(v.x.convert_to<double>()) + "," + py(v.y.convert_to<double>()) + " ";
  }
  out += "<polygon class=\"outline\" points=\"" + outline + "\" fill=\"#e8eef8\" stroke=\"black\" stroke-width=\"2\"/>\n";

  for (const auto& q : lattice_points(p)) {
    out += "<circle class=\"lattice\" cx=\"" + px(q.x.convert_to<double>()) + "\" cy=\"" +
           py(q.y.convert_to<double>()) + "\" r=\"4\" fill=\"black\"/>\n";
  }
  for (const auto& q : is_panoptigon(p).panoptigon_points) {
    out += "<circle class=\"panoptigon\" cx=\"" + px(q.x.convert_to<double>()) + "\" cy=\"" +
           py(q.y.convert_to<double>()) + "\" r=\"9\" fill=\"none\" stroke=\"#c03030\" stroke-width=\"2\"/>\n";
  }
  if (relaxed) {
    const double half = 6;
    for (const auto& v : relaxed->polygon.vertices) {
      if (v.integral()) continue;
      double cx = (v.x.convert_to<double>() - x0) * u;
      double cy = (y1 - v.y.convert_to<double>()) * u;
      out += "<rect class=\"nonlattice\" x=\"" + fmt(cx - half) + "\" y=\"" + fmt(cy - half) + "\" width=\"" +
             fmt(2 * half) + "\" height=\"" + fmt(2 * half) + "\" fill=\"none\" stroke=\"#3050c0\" stroke-width=\"2\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace panoptigon
