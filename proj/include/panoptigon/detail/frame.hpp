#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "panoptigon/lattice.hpp"

namespace panoptigon::detail {

struct P64 {
  std::int64_t x;
  std::int64_t y;

  friend bool operator==(const P64&, const P64&) = default;
};

using Mask = std::uint64_t;

// A fixed set of at most 64 lattice points with machine-word coordinates.
// Subsets are bitmasks over the point indices.
class Frame {
 public:
  explicit Frame(std::vector<P64> points);

  std::size_t size() const { return points_.size(); }
  const P64& point(std::size_t i) const { return points_[i]; }
  std::optional<std::size_t> index_of(const P64& p) const;
  Mask mask_of(const std::vector<P64>& pts) const;

  // Lattice points of conv(mask) as a mask, or nullopt when the hull picks
  // up a lattice point outside the frame.
  std::optional<Mask> close(Mask mask) const;

  std::vector<P64> points_of(Mask mask) const;
  LatticePolygon polygon(Mask mask) const;

 private:
  std::vector<P64> points_;
  std::int64_t xmin_ = 0, ymin_ = 0, width_ = 0, height_ = 0;
  std::vector<int> grid_;
};

struct HullStats {
  int dimension = 0;
  std::int64_t double_area = 0;
  std::int64_t boundary = 0;
  std::int64_t interior = 0;
};

HullStats hull_stats(const std::vector<P64>& pts);

// Every closed set reachable from the closed seeds by repeatedly adding a
// point and re-closing. keep must be monotone (if it rejects a set it
// rejects every superset); rejected sets are not expanded or returned.
std::vector<Mask> closed_sets(const Frame& frame, const std::vector<Mask>& seeds,
                              const std::function<bool(Mask)>& keep);

std::int64_t max_pair_gcd(const std::vector<P64>& pts);

}  // namespace panoptigon::detail
