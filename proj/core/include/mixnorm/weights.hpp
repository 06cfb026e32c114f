#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mixnorm/cube_family.hpp"
#include "mixnorm/exponents.hpp"
#include "mixnorm/grid.hpp"

namespace mixnorm {

// One-dimensional weight: closed form or grid-backed, strictly positive where
// evaluated.
class Weight1D {
 public:
  enum class Kind { kConstant, kIndicatorMaximal, kPower, kGrid };

  static Weight1D constant(double c);
  // (M chi_[lo,hi])^beta via the interval closed form; A_1 iff beta < 1.
  static Weight1D indicator_maximal(double lo, double hi, double beta);
  // |x|^beta with |x| floored at `truncation` so samples stay positive/finite.
  static Weight1D power(double beta, double truncation);
  static Weight1D from_grid(GridFunction g);

  double operator()(double x) const;
  // w^e stays in the family (exponents add).
  Weight1D powered(double e) const;
  Kind kind() const { return kind_; }
  // Only meaningful for indicator-maximal weights: beta < 1.
  bool a1_flag() const;
  double beta() const { return beta_; }

 private:
  Weight1D() = default;
  Kind kind_ = Kind::kConstant;
  double constant_ = 1.0;
  double lo_ = 0.0, hi_ = 1.0;
  double beta_ = 0.0;
  double truncation_ = 0.0;
  std::shared_ptr<const GridFunction> grid_;
};

struct WeightSample {
  GridFunction grid;
  int floored_cells = 0;  // cells raised to the positivity floor
};

// Sample a weight at the cell centers of a 1D grid, flooring nonpositive
// values at machine-epsilon times the maximum and reporting how many cells
// were floored.
WeightSample sample_weight(const Weight1D& w, const GridSpec& spec);

// sup over the family of (avg_Q w) (avg_Q w^{-1/(p-1)})^{p-1}, averages over
// the cells covered by Q. Requires p > 1 and a positive weight.
double ap_constant(const GridFunction& w, double p, const CubeFamily& family);

// sup over the family of (avg_Q w) max_{Q} (1/w), the ess-sup realized over cells.
double a1_constant(const GridFunction& w, const CubeFamily& family);

// x -> prod_j w_j(x_j)^{1/p_j}.
struct TensorWeight {
  std::vector<Weight1D> factors;
  ExponentVector exponents;

  double operator()(const std::vector<double>& x) const;
};

// f(x) * prod_j w_j(x_j)^{1/p_j} on f's grid.
GridFunction apply_tensor_weight(const GridFunction& f, const TensorWeight& w);

}  // namespace mixnorm
