#pragma once

#include <string>

#include "panoptigon/lattice.hpp"

namespace panoptigon {

struct SvgOptions {
  int unit = 40;         // pixels per lattice unit
  bool relaxed = false;  // overlay the relaxed polygon
};

/// Lattice dots, the outline, circled panoptigon points and, with the
/// relaxed overlay, non-integral relaxed vertices drawn as squares.
/// Throws std::invalid_argument("cannot render dimension < 2").
std::string render_svg(const LatticePolygon& p, const SvgOptions& options = {});

}  // namespace panoptigon
