#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mixnorm/exponents.hpp"
#include "mixnorm/grid.hpp"

namespace mixnorm {

// Closed form of the uncentered 1D maximal of chi_[lo,hi]:
// 1 on the interval, (hi-lo)/(x-lo) to the right, (hi-lo)/(hi-x) to the left.
double interval_indicator_maximal(double lo, double hi, double x);

// Samplers for the built-in analytic families.
Sampler constant_sampler(double c);
Sampler indicator_sampler(Cube q);
Sampler indicator_sampler(Rectangle r);
Sampler tensor_sampler(std::vector<std::function<double(double)>> factors);
// min(|x - c|, cap)^{-gamma}-style radial power, capped so samples stay finite.
Sampler power_radial_sampler(double gamma, double cap_radius,
                             std::vector<double> center = {});
// prod_j |x_j|^{-gamma_j}, each factor capped at |x_j| < cap_radius.
Sampler power_tensor_sampler(std::vector<double> gammas, double cap_radius);

// One worked example: an analytic sampler, the quantity its closed form
// evaluates, and where that form comes from.
struct OracleCase {
  std::string name;
  int dim = 1;
  Sampler sampler;
  std::function<double(const std::vector<double>&)> expected;  // may be empty
  std::string expected_quantity;
  std::string validity;
  std::string provenance;
  bool member = true;          // finite-norm flag where membership is the point
  double homogeneity = 0.0;    // f(tx) = t^homogeneity f(x), when applicable
};

// (||chi_Q||_{p_vec}, ||chi_Q||_{Morrey p}) = (|Q|^{(1/n) sum 1/p_j}, |Q|^{1/p}).
std::pair<double, double> indicator_cube_norms(const Cube& q, const ExponentVector& p_vec,
                                               double p);

// Power-function membership cases: the radial power |x|^{-n/p} (member iff
// max q_j < p), the separated power prod |x_j|^{-1/p} on the critical line
// sum 1/p_j = n/p, and an off-critical separated power flagged non-member.
std::vector<OracleCase> power_function_cases(double p, const ExponentVector& q, int n);

// Counterexample to ||M_2 f||_(q1) <= M_2 ||f||_(q1): f = chi_E with
// E = {0 <= x <= phi(y)}, phi(y) = y^{-q1/q2} on (0,1).
struct StockertBundle {
  double q1 = 2.0;
  double q2 = 0.75;
  Sampler indicator;  // chi_E on R^2

  double breakpoint(double y) const;         // phi(y)
  double row_norm_profile(double y) const;   // y^{-1/(q1 q2)} on (0,1), else 0
  double maximal_row_norm(double y) const;   // q1q2/(q1q2-1) * y^{-1/(q1q2)}
  double m2_closed_form(double x, double y) const;  // min(y, x^{-q2/q1})/y, x>=0, 0<y<=1
  double doubling_ratio_target() const;      // 2^{(1-q2)/q1}
  // Tail lower bound (c_y L^{1-q2})^{1/q1} on ||M_2 f(.,y) chi_[0,L]||_{q1}, L > phi(y).
  double truncated_norm_lower(double y, double L) const;
};
StockertBundle stockert_counterexample(double q1, double q2);

// f = chi_Delta, Delta = {0 <= x <= 1, 0 <= y <= x}. The M_1/M_2 tables are
// verified ground truth; the composition formulas below marked report-only
// disagree with the uncentered definition at sampled points, so brute-force
// discrete values are authoritative for compositions.
struct TriangleBundle {
  Sampler sampler;

  double m1(double x, double y) const;
  double m2(double x, double y) const;
  // Verified in region {0 <= x <= 1, y >= 1}: both compositions equal (x+1)/(2y).
  double m1m2_region1(double x, double y) const;

  // Report-only composition formulas.
  double paper_m2m1_region1(double x, double y) const;  // (-x^2-y^2+2y)/(2y(1-x))
  double paper_m2m1_region2(double x, double y) const;  // (y+(x-1)log((x-1)/x))/y
  double paper_m1m2_region2(double x, double y) const;  // (x-sqrt(x^2-1))/y
};
TriangleBundle triangle_example();

// Named sampler lookup for the CLI ("chi_unit_cube", "triangle", ...).
Sampler named_sampler(const std::string& name, int dim, const nlohmann::json& params);

// Catalog of the shipped oracle cases, dumpable for docs and test generation.
nlohmann::json oracle_catalog();

}  // namespace mixnorm
