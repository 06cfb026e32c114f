#pragma once

#include <string>
#include <vector>

#include "mixnorm/grid.hpp"

namespace mixnorm {

// Finite enumeration of candidate cubes realizing a supremum (Morrey norms,
// A_p constants). Every cube intersects the grid box.
class CubeFamily {
 public:
  const std::vector<Cube>& cubes() const { return cubes_; }
  const std::string& strategy() const { return strategy_; }
  std::size_t size() const { return cubes_.size(); }

  // All cell-aligned cubes. Sides run over k = 1..max_j N_j cells; positions
  // are the in-box lattice for k <= N_j and, on axes the cube outgrows, the
  // aligned positions covering the whole axis. Any aligned cube not in this
  // set is dominated by a member of the same or smaller side, so the family
  // realizes the exact supremum over all aligned cubes. Requires equal
  // spacing on all axes.
  static CubeFamily exact_aligned(const GridSpec& spec);

  // Dyadic side lengths from the bounding box side down to the cell size, at
  // lattice positions with stride side/2. Cheap multiscale approximation of
  // the supremum; exact_aligned validates it on small grids.
  static CubeFamily dyadic(const GridSpec& spec);

  static CubeFamily explicit_list(std::vector<Cube> cubes, const GridSpec& spec);

 private:
  CubeFamily(std::vector<Cube> cubes, std::string strategy)
      : cubes_(std::move(cubes)), strategy_(std::move(strategy)) {}

  std::vector<Cube> cubes_;
  std::string strategy_;
};

// Index range [first, last] of cells whose centers lie in [lo, hi] on one axis;
// empty when first > last.
struct AxisCellRange {
  int first = 0;
  int last = -1;
  bool empty() const { return first > last; }
  int length() const { return empty() ? 0 : last - first + 1; }
};
AxisCellRange cells_in_interval(const GridSpec& spec, int axis, double lo, double hi);

bool cube_intersects_box(const GridSpec& spec, const Cube& q);

}  // namespace mixnorm
