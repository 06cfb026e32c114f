#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "mixnorm/errors.hpp"

namespace mixnorm {

// Axis-aligned cube: center and radius (half side length), so l(Q) = 2*radius.
struct Cube {
  std::vector<double> center;
  double radius = 0.0;

  int dim() const { return static_cast<int>(center.size()); }
  double side() const { return 2.0 * radius; }
  double volume() const;
  double lo(int axis) const { return center[static_cast<std::size_t>(axis)] - radius; }
  double hi(int axis) const { return center[static_cast<std::size_t>(axis)] + radius; }
  bool contains(const std::vector<double>& x) const;
  // Same center, radius scaled by c (the 5Q enlargement).
  Cube scaled(double c) const;
  void validate() const;
};

// Axis-aligned rectangle with per-axis interval [lo_j, hi_j].
struct Rectangle {
  std::vector<double> lo;
  std::vector<double> hi;

  int dim() const { return static_cast<int>(lo.size()); }
  bool contains(const std::vector<double>& x) const;
  void validate() const;
};

// Uniform grid geometry. Cell i on axis j has center origin[j] + (i + 1/2) * spacing[j],
// so grid-aligned region boundaries never coincide with a sample point.
struct GridSpec {
  std::vector<double> origin;
  std::vector<double> spacing;
  std::vector<int> count;

  int dim() const { return static_cast<int>(count.size()); }
  std::size_t cell_count() const;
  double cell_volume() const;
  double center(int axis, int i) const {
    return origin[static_cast<std::size_t>(axis)] +
           (static_cast<double>(i) + 0.5) * spacing[static_cast<std::size_t>(axis)];
  }
  double box_lo(int axis) const { return origin[static_cast<std::size_t>(axis)]; }
  double box_hi(int axis) const {
    return origin[static_cast<std::size_t>(axis)] +
           spacing[static_cast<std::size_t>(axis)] * count[static_cast<std::size_t>(axis)];
  }
  bool equal_spacing(double rel_tol = 1e-12) const;
  void validate() const;

  // Box [lo, hi]^dim with n cells per axis.
  static GridSpec uniform(int dim, double lo, double hi, int n);
  // Same box, counts doubled (spacing halved).
  GridSpec refined() const;

  bool operator==(const GridSpec& o) const {
    return origin == o.origin && spacing == o.spacing && count == o.count;
  }
};

// Real-valued function sampled at cell centers, implicitly zero outside the grid box.
// Immutable after construction; all operations below return new functions.
class GridFunction {
 public:
  GridFunction(GridSpec spec, std::vector<double> values);

  const GridSpec& spec() const { return spec_; }
  const std::vector<double>& values() const { return values_; }
  int dim() const { return spec_.dim(); }
  std::size_t size() const { return values_.size(); }
  double value(std::size_t flat) const { return values_[flat]; }

  std::vector<double> cell_center(std::size_t flat) const;
  double max_abs() const;

 private:
  GridSpec spec_;
  std::vector<double> values_;
};

using Sampler = std::function<double(const std::vector<double>&)>;

// Evaluate fn at every cell center. Throws if any sampled value is not finite.
GridFunction sample(const Sampler& fn, const GridSpec& spec);

// Midpoint quadrature: sum of values times cell volume.
double integrate(const GridFunction& f);

// Keep the value of every cell whose center lies in the region, zero elsewhere.
GridFunction restrict_to(const GridFunction& f, const Cube& region);
GridFunction restrict_to(const GridFunction& f, const Rectangle& region);
// Complementary restriction: zero inside the region, keep outside.
GridFunction restrict_outside(const GridFunction& f, const Cube& region);

// x -> f(t x), t > 0. Exact: the grid geometry is rescaled
// (origin /= t, spacing /= t), values are untouched.
GridFunction dilate(const GridFunction& f, double t);

// Cellwise transforms.
GridFunction map_values(const GridFunction& f, const std::function<double(double)>& op);
GridFunction combine(const GridFunction& f, const GridFunction& g,
                     const std::function<double(double, double)>& op);
// |f|^t cellwise.
GridFunction abs_power(const GridFunction& f, double t);
// (sum_j |f_j|^u)^{1/u} cellwise; u = inf gives sup_j |f_j|.
GridFunction lq_combine(const std::vector<GridFunction>& fs, double u);

// Flat index helpers (axis 0 fastest).
std::size_t flat_index(const GridSpec& spec, const std::vector<int>& idx);
std::vector<int> multi_index(const GridSpec& spec, std::size_t flat);
// Index of the cell whose center is nearest to x (clamped to the grid).
std::vector<int> nearest_cell(const GridSpec& spec, const std::vector<double>& x);
double value_at(const GridFunction& f, const std::vector<double>& x);  // nearest-cell lookup

}  // namespace mixnorm
