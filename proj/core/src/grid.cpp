#include "mixnorm/grid.hpp"

#include <algorithm>
#include <cmath>

namespace mixnorm {

double Cube::volume() const {
  double v = 1.0;
  for (int j = 0; j < dim(); ++j) v *= side();
  return v;
}

bool Cube::contains(const std::vector<double>& x) const {
  for (int j = 0; j < dim(); ++j) {
    double d = x[static_cast<std::size_t>(j)] - center[static_cast<std::size_t>(j)];
    if (d < -radius || d > radius) return false;
  }
  return true;
}

Cube Cube::scaled(double c) const {
  if (!(c > 0.0)) throw admissibility_error("cube scale factor must be positive");
  return Cube{center, radius * c};
}

void Cube::validate() const {
  if (center.empty()) throw admissibility_error("cube must have dimension >= 1");
  if (!(radius > 0.0)) throw admissibility_error("cube radius must be positive");
}

bool Rectangle::contains(const std::vector<double>& x) const {
  for (int j = 0; j < dim(); ++j) {
    std::size_t k = static_cast<std::size_t>(j);
    if (x[k] < lo[k] || x[k] > hi[k]) return false;
  }
  return true;
}

void Rectangle::validate() const {
  if (lo.empty() || lo.size() != hi.size())
    throw admissibility_error("rectangle must have matching nonempty bounds");
  for (std::size_t j = 0; j < lo.size(); ++j) {
    if (!(lo[j] < hi[j])) throw admissibility_error("rectangle must be nonempty on every axis");
  }
}

std::size_t GridSpec::cell_count() const {
  std::size_t n = 1;
  for (int c : count) n *= static_cast<std::size_t>(c);
  return n;
}

double GridSpec::cell_volume() const {
  double v = 1.0;
  for (double h : spacing) v *= h;
  return v;
}

bool GridSpec::equal_spacing(double rel_tol) const {
  for (std::size_t j = 1; j < spacing.size(); ++j) {
    if (std::abs(spacing[j] - spacing[0]) > rel_tol * spacing[0]) return false;
  }
  return true;
}

void GridSpec::validate() const {
  if (count.empty() || origin.size() != count.size() || spacing.size() != count.size())
    throw admissibility_error("grid spec: origin/spacing/count must share a dimension >= 1");
  for (std::size_t j = 0; j < count.size(); ++j) {
    if (count[j] < 1) throw admissibility_error("grid spec: axis count must be >= 1");
    if (!(spacing[j] > 0.0) || !std::isfinite(spacing[j]))
      throw admissibility_error("grid spec: spacing must be positive and finite");
    if (!std::isfinite(origin[j])) throw admissibility_error("grid spec: origin must be finite");
  }
}

GridSpec GridSpec::uniform(int dim, double lo, double hi, int n) {
  if (dim < 1) throw admissibility_error("grid dimension must be >= 1");
  if (!(hi > lo)) throw admissibility_error("grid box must be nonempty");
  if (n < 1) throw admissibility_error("grid axis count must be >= 1");
  GridSpec s;
  s.origin.assign(static_cast<std::size_t>(dim), lo);
  s.spacing.assign(static_cast<std::size_t>(dim), (hi - lo) / n);
  s.count.assign(static_cast<std::size_t>(dim), n);
  return s;
}

GridSpec GridSpec::refined() const {
  GridSpec s = *this;
  for (std::size_t j = 0; j < s.count.size(); ++j) {
    s.count[j] *= 2;
    s.spacing[j] *= 0.5;
  }
  return s;
}

GridFunction::GridFunction(GridSpec spec, std::vector<double> values)
    : spec_(std::move(spec)), values_(std::move(values)) {
  spec_.validate();
  if (values_.size() != spec_.cell_count())
    throw admissibility_error("grid function: value count does not match the grid");
  for (double v : values_) {
    if (!std::isfinite(v))
      throw admissibility_error("grid function: all stored values must be finite");
  }
}

std::vector<double> GridFunction::cell_center(std::size_t flat) const {
  std::vector<int> idx = multi_index(spec_, flat);
  std::vector<double> x(static_cast<std::size_t>(dim()));
  for (int j = 0; j < dim(); ++j) x[static_cast<std::size_t>(j)] = spec_.center(j, idx[static_cast<std::size_t>(j)]);
  return x;
}

double GridFunction::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

std::size_t flat_index(const GridSpec& spec, const std::vector<int>& idx) {
  std::size_t flat = 0;
  std::size_t stride = 1;
  for (int j = 0; j < spec.dim(); ++j) {
    flat += static_cast<std::size_t>(idx[static_cast<std::size_t>(j)]) * stride;
    stride *= static_cast<std::size_t>(spec.count[static_cast<std::size_t>(j)]);
  }
  return flat;
}

std::vector<int> multi_index(const GridSpec& spec, std::size_t flat) {
  std::vector<int> idx(static_cast<std::size_t>(spec.dim()));
  for (int j = 0; j < spec.dim(); ++j) {
    std::size_t n = static_cast<std::size_t>(spec.count[static_cast<std::size_t>(j)]);
    idx[static_cast<std::size_t>(j)] = static_cast<int>(flat % n);
    flat /= n;
  }
  return idx;
}

std::vector<int> nearest_cell(const GridSpec& spec, const std::vector<double>& x) {
  std::vector<int> idx(static_cast<std::size_t>(spec.dim()));
  for (int j = 0; j < spec.dim(); ++j) {
    std::size_t k = static_cast<std::size_t>(j);
    double t = (x[k] - spec.origin[k]) / spec.spacing[k] - 0.5;
    int i = static_cast<int>(std::lround(t));
    idx[k] = std::clamp(i, 0, spec.count[k] - 1);
  }
  return idx;
}

double value_at(const GridFunction& f, const std::vector<double>& x) {
  return f.value(flat_index(f.spec(), nearest_cell(f.spec(), x)));
}

GridFunction sample(const Sampler& fn, const GridSpec& spec) {
  spec.validate();
  std::vector<double> vals(spec.cell_count());
  std::vector<double> x(static_cast<std::size_t>(spec.dim()));
  std::vector<int> idx(static_cast<std::size_t>(spec.dim()), 0);
  for (std::size_t flat = 0; flat < vals.size(); ++flat) {
    for (int j = 0; j < spec.dim(); ++j)
      x[static_cast<std::size_t>(j)] = spec.center(j, idx[static_cast<std::size_t>(j)]);
    double v = fn(x);
    if (!std::isfinite(v))
      throw admissibility_error("sample: sampler produced a non-finite value; truncate singular functions");
    vals[flat] = v;
    for (int j = 0; j < spec.dim(); ++j) {
      std::size_t k = static_cast<std::size_t>(j);
      if (++idx[k] < spec.count[k]) break;
      idx[k] = 0;
    }
  }
  return GridFunction(spec, std::move(vals));
}

double integrate(const GridFunction& f) {
  double s = 0.0;
  for (double v : f.values()) s += v;
  return s * f.spec().cell_volume();
}

namespace {

template <typename Region>
GridFunction restrict_impl(const GridFunction& f, const Region& region, bool keep_inside) {
  region.validate();
  if (region.dim() != f.dim()) throw admissibility_error("restrict: region dimension mismatch");
  std::vector<double> vals(f.size(), 0.0);
  const GridSpec& spec = f.spec();
  std::vector<double> x(static_cast<std::size_t>(spec.dim()));
  std::vector<int> idx(static_cast<std::size_t>(spec.dim()), 0);
  for (std::size_t flat = 0; flat < vals.size(); ++flat) {
    for (int j = 0; j < spec.dim(); ++j)
      x[static_cast<std::size_t>(j)] = spec.center(j, idx[static_cast<std::size_t>(j)]);
    if (region.contains(x) == keep_inside) vals[flat] = f.value(flat);
    for (int j = 0; j < spec.dim(); ++j) {
      std::size_t k = static_cast<std::size_t>(j);
      if (++idx[k] < spec.count[k]) break;
      idx[k] = 0;
    }
  }
  return GridFunction(spec, std::move(vals));
}

}  // namespace

GridFunction restrict_to(const GridFunction& f, const Cube& region) {
  return restrict_impl(f, region, true);
}

GridFunction restrict_to(const GridFunction& f, const Rectangle& region) {
  return restrict_impl(f, region, true);
}

GridFunction restrict_outside(const GridFunction& f, const Cube& region) {
  return restrict_impl(f, region, false);
}

GridFunction dilate(const GridFunction& f, double t) {
  if (!(t > 0.0)) throw admissibility_error("dilate: t must be positive");
  GridSpec s = f.spec();
  for (std::size_t j = 0; j < s.origin.size(); ++j) {
    s.origin[j] /= t;
    s.spacing[j] /= t;
  }
  return GridFunction(s, f.values());
}

GridFunction map_values(const GridFunction& f, const std::function<double(double)>& op) {
  std::vector<double> vals(f.size());
  for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = op(f.value(i));
  return GridFunction(f.spec(), std::move(vals));
}

GridFunction combine(const GridFunction& f, const GridFunction& g,
                     const std::function<double(double, double)>& op) {
  if (!(f.spec() == g.spec())) throw admissibility_error("combine: grids must match");
  std::vector<double> vals(f.size());
  for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = op(f.value(i), g.value(i));
  return GridFunction(f.spec(), std::move(vals));
}

GridFunction abs_power(const GridFunction& f, double t) {
  if (!(t > 0.0)) throw admissibility_error("abs_power: exponent must be positive");
  std::vector<double> vals(f.size());
  if (t == 1.0) {
    for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = std::abs(f.value(i));
  } else {
    for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = std::pow(std::abs(f.value(i)), t);
  }
  return GridFunction(f.spec(), std::move(vals));
}

GridFunction lq_combine(const std::vector<GridFunction>& fs, double u) {
  if (fs.empty()) throw admissibility_error("lq_combine: empty tuple");
  if (!(u > 0.0)) throw admissibility_error("lq_combine: u must be positive");
  for (const GridFunction& g : fs) {
    if (!(g.spec() == fs.front().spec())) throw admissibility_error("lq_combine: grids must match");
  }
  std::vector<double> vals(fs.front().size(), 0.0);
  if (std::isinf(u)) {
    for (const GridFunction& g : fs)
      for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = std::max(vals[i], std::abs(g.value(i)));
  } else {
    for (const GridFunction& g : fs)
      for (std::size_t i = 0; i < vals.size(); ++i) vals[i] += std::pow(std::abs(g.value(i)), u);
    for (double& v : vals) v = std::pow(v, 1.0 / u);
  }
  return GridFunction(fs.front().spec(), std::move(vals));
}

}  // namespace mixnorm
