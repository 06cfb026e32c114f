#pragma once

#include <functional>
#include <vector>

#include "mixnorm/exponents.hpp"
#include "mixnorm/grid.hpp"

namespace mixnorm {

struct AdamsExponents {
  double r = 0.0;
  ExponentVector s;
  double s_reciprocal_sum = 0.0;
  bool s_admissible = false;  // sum 1/s_j >= n/r
};

// Target exponents of the fractional bound: 1/r = 1/p - alpha/n, s = (r/p) q.
AdamsExponents adams_exponents(double p, double alpha, const ExponentVector& q, int n);

// Riesz potential: out(x) = sum_y f(y) |x-y|^{alpha-n} h^n with the self-cell
// replaced by the analytic integral over the inscribed ball plus the kernel at
// a mid-shell radius on the remainder (exact in 1D, refinement-convergent in
// higher dimension).
GridFunction fractional_integral(const GridFunction& f, double alpha);

// Truncated pieces backing the hedge inequality: |x-y| <= R resp. |x-y| > R.
GridFunction fractional_integral_below(const GridFunction& f, double alpha, double R);
GridFunction fractional_integral_above(const GridFunction& f, double alpha, double R);
// Same truncated pieces at a single output cell (cheap probe evaluation).
double fractional_below_at(const GridFunction& f, double alpha, double R, std::size_t cell);
double fractional_above_at(const GridFunction& f, double alpha, double R, std::size_t cell);

enum class KernelKind { kHilbert, kRiesz, kCustom };

// Calderon-Zygmund kernel with size/smoothness constants and truncation radius.
struct KernelDescriptor {
  KernelKind kind = KernelKind::kCustom;
  int dim = 1;
  int riesz_component = 1;       // 1-based, for kRiesz
  double size_constant = 1.0;    // condition (1): |k(x,y)| <= C1 / |x-y|^n
  double smoothness_constant = 1.0;  // condition (2) constant
  double smoothness = 1.0;       // epsilon in (0, 1]
  double truncation = 0.0;       // delta > 0; must cover at least a cell diagonal
  std::function<double(const std::vector<double>&, const std::vector<double>&)> evaluator;

  // k(x,y) = 1/(pi (x - y)), n = 1. Size constant 1/pi, so the condition (1)
  // ratio is exactly 1; smoothness constant 4/pi covers condition (2).
  static KernelDescriptor hilbert(double delta);
  // k(x,y) = (x_j - y_j)/|x-y|^3, n = 2.
  static KernelDescriptor riesz(int component, double delta);
  static KernelDescriptor custom(int dim, double delta, double size_c, double smooth_c,
                                 double eps,
                                 std::function<double(const std::vector<double>&,
                                                      const std::vector<double>&)> k);

  double eval(const std::vector<double>& x, const std::vector<double>& y) const;
  void validate() const;
};

// Truncated singular integral T_delta f(x) = sum_{|x-y| > delta} k(x,y) f(y) h^n.
// The operator is defined as its truncation everywhere, including on supp(f).
GridFunction singular_integral(const GridFunction& f, const KernelDescriptor& kernel);

struct KernelSampleSpec {
  int dim = 1;
  std::vector<double> separations;  // |x-y| sweep; default logarithmic in [1/64, 32]
  int directions = 8;
  std::vector<double> z_fractions = {0.25, 0.5, 1.0};  // |x-z| = frac * |x-y| / 2
  double tol = 1e-9;
};

struct KernelCheckReport {
  double max_size_ratio = 0.0;        // sup |k| |x-y|^n / C1
  double max_smoothness_ratio = 0.0;  // sup of the increment bound ratio against C2
  double observed_size_constant = 0.0;
  double observed_smoothness_constant = 0.0;
  int samples = 0;
  double tolerance = 0.0;
  bool pass = false;
};

// Deterministic sampled verification of kernel conditions (1) and (2) on
// triples with |x-y| >= 2 |x-z|, x != y.
KernelCheckReport kernel_condition_check(const KernelDescriptor& kernel,
                                         const KernelSampleSpec& spec);

}  // namespace mixnorm
