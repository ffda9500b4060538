#pragma once

#include <optional>
#include <string>

#include "panoptigon/census.hpp"
#include "panoptigon/classify.hpp"
#include "panoptigon/io.hpp"
#include "panoptigon/relaxation.hpp"
#include "panoptigon/transform.hpp"

namespace panoptigon {

/// Everything the library can say about one polygon. Fields that need a
/// two-dimensional polygon (or a given genus) are empty otherwise.
struct AnalysisReport {
  explicit AnalysisReport(LatticePolygon p) : input(std::move(p)) {}

  LatticePolygon input;
  int dimension = 0;
  Integer lattice_points;
  Integer genus;
  WidthResult width;
  DiameterResult diameter;
  bool hyperelliptic = false;
  std::optional<HyperellipticForm> form;
  PanoptigonReport panoptigon;
  std::optional<LatticePolygon> interior;
  std::optional<Relaxation> relaxed;
  std::optional<bool> maximal;
  std::optional<LatticePolygon> canonical;
  std::optional<ObstructionReport> big_face;
};

AnalysisReport analyze(const LatticePolygon& p);

json to_json(const AnalysisReport& r);
std::string to_table(const AnalysisReport& r);

}  // namespace panoptigon
