#pragma once

#include <cstddef>
#include <vector>

#include "mixnorm/cube_family.hpp"
#include "mixnorm/exponents.hpp"
#include "mixnorm/grid.hpp"

namespace mixnorm {

// Multi-indexed coefficient array for the mixed sequence norm (axis 0 fastest).
struct MultiArray {
  std::vector<std::size_t> shape;
  std::vector<double> values;
  void validate() const;
};

// Iterated axis-by-axis reduction, axis 1 first, axis n last. Finite p_j
// contributes (sum |.|^{p_j} h_j)^{1/p_j}; p_j = inf takes the axis maximum.
double mixed_lebesgue_norm(const GridFunction& f, const ExponentVector& p);

// Same reduction without the h weights (iterated l^{p_j}).
double mixed_sequence_norm(const MultiArray& a, const ExponentVector& p);

// Mixed Lebesgue norm of f restricted to the cells whose centers lie in Q.
double mixed_norm_on_cube(const GridFunction& f, const Cube& q, const ExponentVector& p);

// Intermediate stages of the iterated reduction: stage[0] is |f| (n-dim),
// stage[k] is the norm in the first k variables ((n-k)-dim), stage[n] is the
// scalar norm. Backs the dual-sequence construction.
std::vector<std::vector<double>> iterated_reduction_stages(const GridFunction& f,
                                                           const ExponentVector& p);

struct MorreyParams {
  double p = 1.0;
  ExponentVector q;

  // Admissibility: sum_j 1/q_j >= n/p.
  void validate(int dim) const;
  // 1/p - (1/n) sum_j 1/q_j  (always <= 0 when admissible).
  double cube_exponent(int dim) const;
};

struct MorreyResult {
  double value = 0.0;
  Cube argmax;
};

// sup over the family of |Q|^{1/p - 1/q} (int_Q |f|^q)^{1/q}. Requires q <= p.
double classical_morrey_norm(const GridFunction& f, double p, double q, const CubeFamily& family);

// sup over the family of |Q|^{1/p - (1/n) sum 1/q_j} ||f chi_Q||_q. Ties in the
// argmax go to the smallest volume, then the lexicographically smallest center.
MorreyResult mixed_morrey_norm(const GridFunction& f, const MorreyParams& params,
                               const CubeFamily& family);

// (sum |f|^p w h^n)^{1/p}; w must be nonnegative on the same grid, p finite.
double weighted_lp_norm(const GridFunction& f, double p, const GridFunction& w);

// Morrey-type supremum with the smooth cutoff (M_1 chi_Q)^eta in place of the
// sharp restriction, using the closed form of the interval indicator maximal
// per axis. Requires sum 1/q_j - n/p < eta < 1, eta > 0.
double equivalent_morrey_norm(const GridFunction& f, const MorreyParams& params, double eta,
                              const CubeFamily& family);

// Norming sequence of the L^p(l^q) duality: given finitely many f_j (not all
// zero) returns g_j with sum_j int f_j g_j = ||{f_j}||_{L^p(l^q)} and
// ||{g_j}||_{L^{p'}(l^{q'})} = 1, exactly on the grid up to rounding.
// Finite exponents only: 1 < p_j < inf, 1 < q < inf.
std::vector<GridFunction> dual_sequence(const std::vector<GridFunction>& fs,
                                        const ExponentVector& p, double q);

}  // namespace mixnorm
