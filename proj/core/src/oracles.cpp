#include "mixnorm/oracles.hpp"

#include <cmath>

namespace mixnorm {

double interval_indicator_maximal(double lo, double hi, double x) {
  if (!(lo < hi)) throw admissibility_error("interval_indicator_maximal: empty interval");
  double len = hi - lo;
  if (x > hi) return len / (x - lo);
  if (x < lo) return len / (hi - x);
  return 1.0;
}

Sampler constant_sampler(double c) {
  return [c](const std::vector<double>&) { return c; };
}

Sampler indicator_sampler(Cube q) {
  q.validate();
  return [q = std::move(q)](const std::vector<double>& x) { return q.contains(x) ? 1.0 : 0.0; };
}

Sampler indicator_sampler(Rectangle r) {
  r.validate();
  return [r = std::move(r)](const std::vector<double>& x) { return r.contains(x) ? 1.0 : 0.0; };
}

Sampler tensor_sampler(std::vector<std::function<double(double)>> factors) {
  if (factors.empty()) throw admissibility_error("tensor_sampler: no factors");
  return [factors = std::move(factors)](const std::vector<double>& x) {
    double v = 1.0;
    for (std::size_t j = 0; j < factors.size(); ++j) v *= factors[j](x[j]);
    return v;
  };
}

Sampler power_radial_sampler(double gamma, double cap_radius, std::vector<double> center) {
  if (!(gamma > 0.0)) throw admissibility_error("power_radial_sampler: gamma must be positive");
  if (!(cap_radius > 0.0)) throw admissibility_error("power_radial_sampler: cap radius must be positive");
  return [gamma, cap_radius, center = std::move(center)](const std::vector<double>& x) {
    double r2 = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      double d = x[j] - (j < center.size() ? center[j] : 0.0);
      r2 += d * d;
    }
    double r = std::max(std::sqrt(r2), cap_radius);
    return std::pow(r, -gamma);
  };
}

Sampler power_tensor_sampler(std::vector<double> gammas, double cap_radius) {
  if (gammas.empty()) throw admissibility_error("power_tensor_sampler: no exponents");
  if (!(cap_radius > 0.0)) throw admissibility_error("power_tensor_sampler: cap radius must be positive");
  return [gammas = std::move(gammas), cap_radius](const std::vector<double>& x) {
    double v = 1.0;
    for (std::size_t j = 0; j < gammas.size(); ++j)
      v *= std::pow(std::max(std::abs(x[j]), cap_radius), -gammas[j]);
    return v;
  };
}

std::pair<double, double> indicator_cube_norms(const Cube& q, const ExponentVector& p_vec,
                                               double p) {
  q.validate();
  if (p_vec.size() != q.dim())
    throw admissibility_error("indicator_cube_norms: exponent count mismatch");
  if (std::isnan(p) || p <= 0.0)
    throw admissibility_error("indicator_cube_norms: p must lie in (0, inf]");
  double vol = q.volume();
  double n = static_cast<double>(q.dim());
  return {std::pow(vol, p_vec.reciprocal_sum() / n), std::pow(vol, reciprocal(p))};
}

std::vector<OracleCase> power_function_cases(double p, const ExponentVector& q, int n) {
  if (std::isnan(p) || p <= 0.0) throw admissibility_error("power_function_cases: bad p");
  if (q.size() != n) throw admissibility_error("power_function_cases: exponent count mismatch");
  const double cap = 1.0 / 64.0;

  std::vector<OracleCase> cases;
  {
    OracleCase c;
    c.name = "power_radial";
    c.dim = n;
    c.sampler = power_radial_sampler(n * reciprocal(p), cap);
    c.member = q.max_entry() < p;
    c.homogeneity = -n * reciprocal(p);
    c.validity = "member of the (p, q) Morrey scale iff max_j q_j < p";
    c.provenance = "radial power example; membership via the q <= r embedding";
    cases.push_back(std::move(c));
  }
  {
    OracleCase c;
    c.name = "power_tensor_critical";
    c.dim = n;
    c.sampler = power_tensor_sampler(std::vector<double>(static_cast<std::size_t>(n), reciprocal(p)), cap);
    bool member = true;
    for (int j = 0; j < n; ++j) member = member && q[j] < p;
    c.member = member;
    c.homogeneity = -n * reciprocal(p);  // sum 1/p_j with all p_j = p
    c.validity = "separated power on the critical line sum_j 1/p_j = n/p";
    c.provenance = "separated power example; criticality is necessary and sufficient";
    cases.push_back(std::move(c));
  }
  {
    // First factor exponent halved: sum_j 1/p_j != n/p, so the function has
    // the wrong homogeneity and falls outside the scale.
    OracleCase c;
    c.name = "power_tensor_offcritical";
    c.dim = n;
    std::vector<double> gammas(static_cast<std::size_t>(n), reciprocal(p));
    gammas[0] *= 0.5;
    double hom = 0.0;
    for (double g : gammas) hom -= g;
    c.sampler = power_tensor_sampler(std::move(gammas), cap);
    c.member = false;
    c.homogeneity = hom;
    c.validity = "separated power off the critical line; non-member";
    c.provenance = "necessity half of the separated power example";
    cases.push_back(std::move(c));
  }
  return cases;
}

double StockertBundle::breakpoint(double y) const { return std::pow(y, -q1 / q2); }

double StockertBundle::row_norm_profile(double y) const {
  if (y <= 0.0 || y >= 1.0) return 0.0;
  return std::pow(y, -1.0 / (q1 * q2));
}

double StockertBundle::maximal_row_norm(double y) const {
  if (!(y > 0.0) || !(y <= 1.0)) throw admissibility_error("stockert: y must lie in (0, 1]");
  double a = q1 * q2;
  return a / (a - 1.0) * std::pow(y, -1.0 / a);
}

double StockertBundle::m2_closed_form(double x, double y) const {
  if (!(y > 0.0) || !(y <= 1.0)) throw admissibility_error("stockert: y must lie in (0, 1]");
  if (x < 0.0) return 0.0;
  return std::min(y, std::pow(x, -q2 / q1)) / y;
}

double StockertBundle::doubling_ratio_target() const {
  return std::pow(2.0, (1.0 - q2) / q1);
}

double StockertBundle::truncated_norm_lower(double y, double L) const {
  double xstar = breakpoint(y);
  if (L <= xstar) return 0.0;
  double tail = (std::pow(L, 1.0 - q2) - std::pow(xstar, 1.0 - q2)) / (1.0 - q2);
  return std::pow(tail / std::pow(y, q1), 1.0 / q1);
}

StockertBundle stockert_counterexample(double q1, double q2) {
  if (!(q2 > 0.0 && q2 < 1.0 && q1 > 1.0 && q1 * q2 > 1.0))
    throw admissibility_error("stockert: need 0 < q2 < 1 < q1 and q1 q2 > 1");
  StockertBundle b;
  b.q1 = q1;
  b.q2 = q2;
  b.indicator = [q1, q2](const std::vector<double>& x) {
    if (x[1] <= 0.0 || x[1] >= 1.0 || x[0] < 0.0) return 0.0;
    return x[0] <= std::pow(x[1], -q1 / q2) ? 1.0 : 0.0;
  };
  return b;
}

double TriangleBundle::m1(double x, double y) const {
  if (y < 0.0 || y > 1.0) return 0.0;
  if (x >= 1.0) return (1.0 - y) / (x - y);
  if (x <= y) return (1.0 - y) / (1.0 - x);
  return 1.0;
}

double TriangleBundle::m2(double x, double y) const {
  if (x < 0.0 || x > 1.0) return 0.0;
  if (y <= 0.0) return x / (x - y);
  if (y >= x) return x / y;
  return 1.0;
}

double TriangleBundle::m1m2_region1(double x, double y) const {
  if (!(x >= 0.0 && x <= 1.0 && y >= 1.0))
    throw admissibility_error("triangle m1m2: valid in {0 <= x <= 1, y >= 1} only");
  return (x + 1.0) / (2.0 * y);
}

double TriangleBundle::paper_m2m1_region1(double x, double y) const {
  return (-x * x - y * y + 2.0 * y) / (2.0 * y * (1.0 - x));
}

double TriangleBundle::paper_m2m1_region2(double x, double y) const {
  return (y + (x - 1.0) * std::log((x - 1.0) / x)) / y;
}

double TriangleBundle::paper_m1m2_region2(double x, double y) const {
  return (x - std::sqrt(x * x - 1.0)) / y;
}

TriangleBundle triangle_example() {
  TriangleBundle b;
  b.sampler = [](const std::vector<double>& x) {
    return (x[0] >= 0.0 && x[0] <= 1.0 && x[1] >= 0.0 && x[1] <= x[0]) ? 1.0 : 0.0;
  };
  return b;
}

Sampler named_sampler(const std::string& name, int dim, const nlohmann::json& params) {
  if (name == "zero") return constant_sampler(0.0);
  if (name == "constant") return constant_sampler(params.value("value", 1.0));
  if (name == "chi_unit_cube") {
    Cube q;
    q.center.assign(static_cast<std::size_t>(dim), 0.5);
    q.radius = 0.5;
    return indicator_sampler(std::move(q));
  }
  if (name == "chi_cube") {
    Cube q;
    q.center = params.at("center").get<std::vector<double>>();
    q.radius = params.at("radius").get<double>();
    return indicator_sampler(std::move(q));
  }
  if (name == "triangle") {
    if (dim != 2) throw config_error("triangle sampler is two-dimensional");
    return triangle_example().sampler;
  }
  if (name == "stockert") {
    if (dim != 2) throw config_error("stockert sampler is two-dimensional");
    return stockert_counterexample(params.value("q1", 2.0), params.value("q2", 0.75)).indicator;
  }
  if (name == "power_radial")
    return power_radial_sampler(params.value("gamma", 0.5), params.value("cap_radius", 1.0 / 64.0));
  if (name == "power_tensor") {
    std::vector<double> gammas = params.value("gammas", std::vector<double>(static_cast<std::size_t>(dim), 0.5));
    return power_tensor_sampler(std::move(gammas), params.value("cap_radius", 1.0 / 64.0));
  }
  throw config_error("unknown sampler case: " + name);
}

nlohmann::json oracle_catalog() {
  nlohmann::json cases = nlohmann::json::array();
  cases.push_back({{"name", "chi_unit_cube"},
                   {"dim", "any"},
                   {"quantity", "mixed and Morrey norms"},
                   {"closed_form", "|Q|^{(1/n) sum 1/p_j} and |Q|^{1/p}"}});
  cases.push_back({{"name", "interval_indicator_maximal"},
                   {"dim", 1},
                   {"quantity", "uncentered maximal of chi_[a,b]"},
                   {"closed_form", "1 on [a,b]; (b-a)/(x-a) right; (b-a)/(b-x) left"}});
  cases.push_back({{"name", "triangle"},
                   {"dim", 2},
                   {"quantity", "M1, M2 piecewise tables; composition formulas report-only"},
                   {"note",
                    "brute-force discrete compositions are authoritative; the printed "
                    "composition formulas are reported alongside only"}});
  cases.push_back({{"name", "stockert"},
                   {"dim", 2},
                   {"quantity", "maximal row norm, M2 closed form, truncated-norm growth law"},
                   {"constraints", "0 < q2 < 1 < q1, q1 q2 > 1"}});
  cases.push_back({{"name", "power_radial"},
                   {"dim", "any"},
                   {"quantity", "Morrey membership iff max q_j < p"},
                   {"homogeneity", "-n/p"}});
  cases.push_back({{"name", "power_tensor_critical"},
                   {"dim", "any"},
                   {"quantity", "Morrey membership on the critical line sum 1/p_j = n/p"},
                   {"homogeneity", "-n/p"}});
  return nlohmann::json{{"oracle_cases", cases}};
}

}  // namespace mixnorm
