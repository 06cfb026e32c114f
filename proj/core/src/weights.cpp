#include "mixnorm/weights.hpp"

#include <cmath>
#include <limits>

#include "mixnorm/oracles.hpp"

namespace mixnorm {

Weight1D Weight1D::constant(double c) {
  if (!(c > 0.0)) throw admissibility_error("weight: constant must be positive");
  Weight1D w;
  w.kind_ = Kind::kConstant;
  w.constant_ = c;
  return w;
}

Weight1D Weight1D::indicator_maximal(double lo, double hi, double beta) {
  if (!(lo < hi)) throw admissibility_error("weight: empty interval");
  if (beta < 0.0) throw admissibility_error("weight: beta must be >= 0");
  Weight1D w;
  w.kind_ = Kind::kIndicatorMaximal;
  w.lo_ = lo;
  w.hi_ = hi;
  w.beta_ = beta;
  return w;
}

Weight1D Weight1D::power(double beta, double truncation) {
  if (!(truncation > 0.0)) throw admissibility_error("weight: power truncation must be positive");
  Weight1D w;
  w.kind_ = Kind::kPower;
  w.beta_ = beta;
  w.truncation_ = truncation;
  return w;
}

Weight1D Weight1D::from_grid(GridFunction g) {
  if (g.dim() != 1) throw admissibility_error("weight: grid weight must be one-dimensional");
  Weight1D w;
  w.kind_ = Kind::kGrid;
  w.grid_ = std::make_shared<const GridFunction>(std::move(g));
  return w;
}

double Weight1D::operator()(double x) const {
  switch (kind_) {
    case Kind::kConstant:
      return constant_;
    case Kind::kIndicatorMaximal:
      return std::pow(interval_indicator_maximal(lo_, hi_, x), beta_);
    case Kind::kPower:
      return std::pow(std::max(std::abs(x), truncation_), beta_);
    case Kind::kGrid:
      return value_at(*grid_, {x});
  }
  return 1.0;
}

Weight1D Weight1D::powered(double e) const {
  Weight1D w = *this;
  switch (kind_) {
    case Kind::kConstant:
      w.constant_ = std::pow(constant_, e);
      return w;
    case Kind::kIndicatorMaximal:
    case Kind::kPower:
      w.beta_ = beta_ * e;
      return w;
    case Kind::kGrid: {
      GridFunction g = map_values(*grid_, [e](double v) { return std::pow(v, e); });
      return Weight1D::from_grid(std::move(g));
    }
  }
  return w;
}

bool Weight1D::a1_flag() const {
  if (kind_ == Kind::kIndicatorMaximal) return beta_ < 1.0;
  return true;
}

WeightSample sample_weight(const Weight1D& w, const GridSpec& spec) {
  if (spec.dim() != 1) throw admissibility_error("sample_weight: expects a 1D grid");
  GridFunction raw = sample([&w](const std::vector<double>& x) { return w(x[0]); }, spec);
  double mx = raw.max_abs();
  double floor = std::numeric_limits<double>::epsilon() * std::max(mx, 1.0);
  int floored = 0;
  GridFunction g = map_values(raw, [&](double v) {
    if (v < floor) {
      ++floored;
      return floor;
    }
    return v;
  });
  return WeightSample{std::move(g), floored};
}

namespace {

struct CubeAverages {
  double avg_w = 0.0;
  double avg_dual = 0.0;  // of w^{-1/(p-1)} when requested
  double max_inv = 0.0;
  int cells = 0;
};

CubeAverages cube_averages(const GridFunction& w, const Cube& q, double dual_expo,
                           bool want_dual) {
  const GridSpec& spec = w.spec();
  const int n = spec.dim();
  std::vector<AxisCellRange> range(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    range[static_cast<std::size_t>(j)] = cells_in_interval(spec, j, q.lo(j), q.hi(j));
    if (range[static_cast<std::size_t>(j)].empty()) return {};
  }
  CubeAverages acc;
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) idx[static_cast<std::size_t>(j)] = range[static_cast<std::size_t>(j)].first;
  while (true) {
    double v = w.value(flat_index(spec, idx));
    if (!(v > 0.0)) throw admissibility_error("A_p constant: weight must be positive on covered cells");
    acc.avg_w += v;
    if (want_dual) acc.avg_dual += std::pow(v, dual_expo);
    acc.max_inv = std::max(acc.max_inv, 1.0 / v);
    ++acc.cells;
    int j = 0;
    for (; j < n; ++j) {
      std::size_t sj = static_cast<std::size_t>(j);
      if (++idx[sj] <= range[sj].last) break;
      idx[sj] = range[sj].first;
    }
    if (j == n) break;
  }
  acc.avg_w /= acc.cells;
  if (want_dual) acc.avg_dual /= acc.cells;
  return acc;
}

}  // namespace

double ap_constant(const GridFunction& w, double p, const CubeFamily& family) {
  if (!(p > 1.0) || std::isinf(p))
    throw admissibility_error("ap_constant: p must be finite, > 1 (use a1_constant for p = 1)");
  double best = 0.0;
  double dual_expo = -1.0 / (p - 1.0);
  for (const Cube& q : family.cubes()) {
    CubeAverages a = cube_averages(w, q, dual_expo, true);
    if (a.cells == 0) continue;
    best = std::max(best, a.avg_w * std::pow(a.avg_dual, p - 1.0));
  }
  return best;
}

double a1_constant(const GridFunction& w, const CubeFamily& family) {
  double best = 0.0;
  for (const Cube& q : family.cubes()) {
    CubeAverages a = cube_averages(w, q, 0.0, false);
    if (a.cells == 0) continue;
    best = std::max(best, a.avg_w * a.max_inv);
  }
  return best;
}

double TensorWeight::operator()(const std::vector<double>& x) const {
  if (factors.size() != x.size() || exponents.size() != static_cast<int>(x.size()))
    throw admissibility_error("tensor weight: dimension mismatch");
  double v = 1.0;
  for (std::size_t j = 0; j < factors.size(); ++j)
    v *= std::pow(factors[j](x[j]), reciprocal(exponents[static_cast<int>(j)]));
  return v;
}

GridFunction apply_tensor_weight(const GridFunction& f, const TensorWeight& w) {
  const GridSpec& spec = f.spec();
  const int n = spec.dim();
  if (static_cast<int>(w.factors.size()) != n || w.exponents.size() != n)
    throw admissibility_error("apply_tensor_weight: dimension mismatch");
  // per-axis factor tables
  std::vector<std::vector<double>> axis(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    std::size_t sj = static_cast<std::size_t>(j);
    axis[sj].resize(static_cast<std::size_t>(spec.count[sj]));
    double e = reciprocal(w.exponents[j]);
    for (int i = 0; i < spec.count[sj]; ++i)
      axis[sj][static_cast<std::size_t>(i)] = std::pow(w.factors[sj](spec.center(j, i)), e);
  }
  std::vector<double> vals(f.size());
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  for (std::size_t flat = 0; flat < vals.size(); ++flat) {
    double c = 1.0;
    for (int j = 0; j < n; ++j)
      c *= axis[static_cast<std::size_t>(j)][static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
    vals[flat] = f.value(flat) * c;
    for (int j = 0; j < n; ++j) {
      std::size_t sj = static_cast<std::size_t>(j);
      if (++idx[sj] < spec.count[sj]) break;
      idx[sj] = 0;
    }
  }
  return GridFunction(spec, std::move(vals));
}

}  // namespace mixnorm
