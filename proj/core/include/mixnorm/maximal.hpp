#pragma once

#include <vector>

#include "mixnorm/grid.hpp"

namespace mixnorm {

// Axes are 1-based throughout this module, matching the M_1 ... M_n naming.
struct AxisOrder {
  std::vector<int> order;  // permutation of 1..n, first entry applied first

  static AxisOrder identity(int n);   // (1, 2, ..., n): the M_n ... M_1 composite
  static AxisOrder reversed(int n);   // (n, ..., 2, 1): the M_1 ... M_n composite
  void validate(int n) const;
};

enum class MaxAlgorithm {
  kExactQuadratic,  // oracle path: O(L^2) per line
  kPruned,          // skips dominated interval starts; bitwise-identical output
};

struct MaximalConfig {
  double t = 1.0;
  AxisOrder order;
  MaxAlgorithm algorithm = MaxAlgorithm::kExactQuadratic;
};

// Uncentered directional maximal M_k: per cell, the best mean of |f| over the
// discrete intervals of cells containing it along axis k (1-based).
GridFunction directional_maximal(const GridFunction& f, int axis,
                                 MaxAlgorithm algorithm = MaxAlgorithm::kExactQuadratic);

// M_t f = (directional maximals applied along cfg.order to |f|^t)^{1/t}.
GridFunction iterated_maximal(const GridFunction& f, const MaximalConfig& cfg);

// Hardy-Littlewood maximal over grid-aligned cubes (every aligned position
// containing the cell, side 1..max_j N_j cells, zero extension outside).
GridFunction hl_maximal(const GridFunction& f);

// Strong maximal over grid-aligned rectangles containing the cell, exact.
// Throws admissibility_error with a pointer to the sandwich bound when the
// exact sweep would be too large.
GridFunction strong_maximal(const GridFunction& f);

// min over both extreme axis orders of the t = 1 iterate; a pointwise upper
// bound for the strong maximal.
GridFunction strong_maximal_sandwich_upper(const GridFunction& f);

// Uncentered maximal of a plain value sequence at one index: max over
// windows [l, r] containing it of the mean of |vals|. Prunes window starts
// whose best possible mean cannot beat the current maximum, so it stays fast
// on long monotone profiles.
double interval_maximal_at(const std::vector<double>& vals, std::size_t index);

struct AwayFromCubeBound {
  double lhs = 0.0;  // sup over Q of M[f restricted off the enlarged cube]
  double rhs = 0.0;  // sup over aligned cubes R containing Q of the mean of |f|
};

// Both sides of the away-from-cube estimate for ratio reporting.
AwayFromCubeBound away_from_cube_bound(const GridFunction& f, const Cube& q,
                                       double enlargement = 5.0);

}  // namespace mixnorm
