#include "mixnorm/integral.hpp"

#include <algorithm>
#include <cmath>

#include "mixnorm/parallel.hpp"

namespace mixnorm {

AdamsExponents adams_exponents(double p, double alpha, const ExponentVector& q, int n) {
  if (!(alpha > 0.0) || !(alpha < n))
    throw admissibility_error("adams_exponents: 0 < alpha < n required");
  if (!(p > 0.0) || std::isinf(p)) throw admissibility_error("adams_exponents: p must be finite, > 0");
  double inv_r = 1.0 / p - alpha / n;
  if (!(inv_r > 0.0))
    throw admissibility_error("adams_exponents: 1/p - alpha/n must be positive (r undefined)");
  if (q.size() != n) throw admissibility_error("adams_exponents: exponent count mismatch");
  if (q.reciprocal_sum() + 1e-12 < n / p)
    throw admissibility_error("adams_exponents: source exponents violate sum 1/q_j >= n/p");
  AdamsExponents out;
  out.r = 1.0 / inv_r;
  out.s = q.scaled(out.r / p);
  out.s_reciprocal_sum = out.s.reciprocal_sum();
  out.s_admissible = out.s_reciprocal_sum + 1e-12 >= n / out.r;
  return out;
}

namespace {

// Unit sphere surface area 2 pi^{n/2} / Gamma(n/2).
double sphere_area(int n) {
  return 2.0 * std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n);
}

// Contribution of the cell containing x itself: exact integral of |u|^{alpha-n}
// over the inscribed ball, kernel at a mid-shell radius on the remainder.
double self_cell_weight(double h, double alpha, int n) {
  double rad = 0.5 * h;
  double ball = sphere_area(n) * std::pow(rad, alpha) / alpha;
  double cell_vol = std::pow(h, n);
  double ball_vol = sphere_area(n) / n * std::pow(rad, n);
  double rem = cell_vol - ball_vol;
  if (rem <= 0.0) return ball;
  double mid = 0.5 * (rad + rad * std::sqrt(static_cast<double>(n)));
  return ball + rem * std::pow(mid, alpha - n);
}

enum class Trunc { kNone, kBelow, kAbove };

GridFunction riesz_sum(const GridFunction& f, double alpha, Trunc mode, double R) {
  const GridSpec& spec = f.spec();
  const int n = spec.dim();
  if (!(alpha > 0.0) || !(alpha < n))
    throw admissibility_error("fractional_integral: 0 < alpha < n required");
  if (mode != Trunc::kNone && !(R > 0.0))
    throw admissibility_error("fractional_integral: truncation radius must be positive");
  if (!spec.equal_spacing())
    throw admissibility_error("fractional_integral: requires equal spacing (square cells)");

  const double vol = spec.cell_volume();
  const double self_w = self_cell_weight(spec.spacing[0], alpha, n);
  std::vector<double> out(f.size());
  std::size_t total = f.size();

  // cache cell centers once
  std::vector<double> centers(total * static_cast<std::size_t>(n));
  {
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    for (std::size_t flat = 0; flat < total; ++flat) {
      for (int j = 0; j < n; ++j)
        centers[flat * n + static_cast<std::size_t>(j)] = spec.center(j, idx[static_cast<std::size_t>(j)]);
      for (int j = 0; j < n; ++j) {
        std::size_t sj = static_cast<std::size_t>(j);
        if (++idx[sj] < spec.count[sj]) break;
        idx[sj] = 0;
      }
    }
  }

  const double expo = 0.5 * (alpha - n);  // applied to squared distance
  parallel_for(total, [&](std::size_t xi) {
    double acc = 0.0;
    const double* cx = centers.data() + xi * static_cast<std::size_t>(n);
    for (std::size_t yi = 0; yi < total; ++yi) {
      double fy = f.value(yi);
      if (fy == 0.0) continue;
      if (yi == xi) {
        if (mode == Trunc::kAbove) continue;
        acc += fy * self_w / vol;  // self weight already integrates the cell
        continue;
      }
      const double* cy = centers.data() + yi * static_cast<std::size_t>(n);
      double d2 = 0.0;
      for (int j = 0; j < n; ++j) {
        double d = cx[j] - cy[j];
        d2 += d * d;
      }
      if (mode == Trunc::kBelow && d2 > R * R) continue;
      if (mode == Trunc::kAbove && d2 <= R * R) continue;
      acc += fy * std::pow(d2, expo);
    }
    out[xi] = acc * vol;
  });
  return GridFunction(spec, std::move(out));
}

}  // namespace

GridFunction fractional_integral(const GridFunction& f, double alpha) {
  return riesz_sum(f, alpha, Trunc::kNone, 0.0);
}

GridFunction fractional_integral_below(const GridFunction& f, double alpha, double R) {
  return riesz_sum(f, alpha, Trunc::kBelow, R);
}

GridFunction fractional_integral_above(const GridFunction& f, double alpha, double R) {
  return riesz_sum(f, alpha, Trunc::kAbove, R);
}

namespace {

double truncated_at(const GridFunction& f, double alpha, double R, std::size_t cell,
                    bool below) {
  const GridSpec& spec = f.spec();
  const int n = spec.dim();
  if (!(alpha > 0.0) || !(alpha < n))
    throw admissibility_error("fractional_integral: 0 < alpha < n required");
  if (!(R > 0.0)) throw admissibility_error("fractional_integral: truncation radius must be positive");
  if (!spec.equal_spacing())
    throw admissibility_error("fractional_integral: requires equal spacing (square cells)");
  std::vector<int> cx = multi_index(spec, cell);
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) x[static_cast<std::size_t>(j)] = spec.center(j, cx[static_cast<std::size_t>(j)]);
  const double vol = spec.cell_volume();
  const double expo = 0.5 * (alpha - n);
  double acc = 0.0;
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  for (std::size_t yi = 0; yi < f.size(); ++yi) {
    double fy = f.value(yi);
    if (fy != 0.0) {
      if (yi == cell) {
        if (below) acc += fy * self_cell_weight(spec.spacing[0], alpha, n) / vol;
      } else {
        double d2 = 0.0;
        for (int j = 0; j < n; ++j) {
          double d = x[static_cast<std::size_t>(j)] - spec.center(j, idx[static_cast<std::size_t>(j)]);
          d2 += d * d;
        }
        if ((d2 <= R * R) == below) acc += fy * std::pow(d2, expo);
      }
    }
    for (int j = 0; j < n; ++j) {
      std::size_t sj = static_cast<std::size_t>(j);
      if (++idx[sj] < spec.count[sj]) break;
      idx[sj] = 0;
    }
  }
  return acc * vol;
}

}  // namespace

double fractional_below_at(const GridFunction& f, double alpha, double R, std::size_t cell) {
  return truncated_at(f, alpha, R, cell, true);
}

double fractional_above_at(const GridFunction& f, double alpha, double R, std::size_t cell) {
  return truncated_at(f, alpha, R, cell, false);
}

KernelDescriptor KernelDescriptor::hilbert(double delta) {
  KernelDescriptor k;
  k.kind = KernelKind::kHilbert;
  k.dim = 1;
  k.size_constant = 1.0 / M_PI;
  k.smoothness_constant = 4.0 / M_PI;
  k.smoothness = 1.0;
  k.truncation = delta;
  return k;
}

KernelDescriptor KernelDescriptor::riesz(int component, double delta) {
  if (component < 1 || component > 2)
    throw admissibility_error("riesz kernel: component must be 1 or 2");
  KernelDescriptor k;
  k.kind = KernelKind::kRiesz;
  k.dim = 2;
  k.riesz_component = component;
  k.size_constant = 1.0;
  k.smoothness_constant = 12.0;  // covers the sampled increment bound with margin
  k.smoothness = 1.0;
  k.truncation = delta;
  return k;
}

KernelDescriptor KernelDescriptor::custom(
    int dim, double delta, double size_c, double smooth_c, double eps,
    std::function<double(const std::vector<double>&, const std::vector<double>&)> k) {
  KernelDescriptor d;
  d.kind = KernelKind::kCustom;
  d.dim = dim;
  d.size_constant = size_c;
  d.smoothness_constant = smooth_c;
  d.smoothness = eps;
  d.truncation = delta;
  d.evaluator = std::move(k);
  return d;
}

double KernelDescriptor::eval(const std::vector<double>& x, const std::vector<double>& y) const {
  switch (kind) {
    case KernelKind::kHilbert:
      return 1.0 / (M_PI * (x[0] - y[0]));
    case KernelKind::kRiesz: {
      double dx = x[0] - y[0], dy = x[1] - y[1];
      double r = std::sqrt(dx * dx + dy * dy);
      return (riesz_component == 1 ? dx : dy) / (r * r * r);
    }
    case KernelKind::kCustom:
      return evaluator(x, y);
  }
  return 0.0;
}

void KernelDescriptor::validate() const {
  if (dim < 1) throw admissibility_error("kernel: dimension must be >= 1");
  if (!(size_constant > 0.0) || !(smoothness_constant > 0.0))
    throw admissibility_error("kernel: constants must be positive");
  if (!(smoothness > 0.0) || smoothness > 1.0)
    throw admissibility_error("kernel: smoothness exponent must lie in (0, 1]");
  if (!(truncation > 0.0)) throw admissibility_error("kernel: truncation radius must be positive");
  if (kind == KernelKind::kCustom && !evaluator)
    throw admissibility_error("kernel: custom kind needs an evaluator");
}

GridFunction singular_integral(const GridFunction& f, const KernelDescriptor& kernel) {
  kernel.validate();
  const GridSpec& spec = f.spec();
  const int n = spec.dim();
  if (kernel.dim != n) throw admissibility_error("singular_integral: kernel dimension mismatch");
  double diag2 = 0.0;
  for (double h : spec.spacing) diag2 += h * h;
  if (kernel.truncation * kernel.truncation < diag2 * (1.0 - 1e-12))
    throw admissibility_error("singular_integral: delta must be at least one cell diagonal");

  const double vol = spec.cell_volume();
  const double delta2 = kernel.truncation * kernel.truncation;
  std::size_t total = f.size();
  std::vector<double> out(total);

  // Size check on the first output cell's pairs (deterministic sample).
  {
    std::vector<double> x0(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j) x0[static_cast<std::size_t>(j)] = spec.center(j, 0);
    for (std::size_t yi = 0; yi < total; ++yi) {
      double d2 = 0.0;
      for (int j = 0; j < n; ++j) {
        y[static_cast<std::size_t>(j)] = spec.center(j, idx[static_cast<std::size_t>(j)]);
        double d = x0[static_cast<std::size_t>(j)] - y[static_cast<std::size_t>(j)];
        d2 += d * d;
      }
      if (d2 > delta2) {
        double bound = kernel.size_constant * std::pow(d2, -0.5 * n);
        if (std::abs(kernel.eval(x0, y)) > bound * (1.0 + 1e-9))
          throw admissibility_error("singular_integral: kernel fails the size condition on sampled pairs");
      }
      for (int j = 0; j < n; ++j) {
        std::size_t sj = static_cast<std::size_t>(j);
        if (++idx[sj] < spec.count[sj]) break;
        idx[sj] = 0;
      }
    }
  }

  parallel_for(total, [&](std::size_t xi) {
    std::vector<double> x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    std::vector<int> xidx = multi_index(spec, xi);
    for (int j = 0; j < n; ++j) x[static_cast<std::size_t>(j)] = spec.center(j, xidx[static_cast<std::size_t>(j)]);
    double acc = 0.0;
    for (std::size_t yi = 0; yi < total; ++yi) {
      for (int j = 0; j < n; ++j)
        y[static_cast<std::size_t>(j)] = spec.center(j, idx[static_cast<std::size_t>(j)]);
      for (int j = 0; j < n; ++j) {
        std::size_t sj = static_cast<std::size_t>(j);
        if (++idx[sj] < spec.count[sj]) break;
        idx[sj] = 0;
      }
      double fy = f.value(yi);
      if (fy == 0.0) continue;
      double d2 = 0.0;
      for (int j = 0; j < n; ++j) {
        double d = x[static_cast<std::size_t>(j)] - y[static_cast<std::size_t>(j)];
        d2 += d * d;
      }
      if (d2 <= delta2) continue;
      acc += kernel.eval(x, y) * fy;
    }
    out[xi] = acc * vol;
  });
  return GridFunction(spec, std::move(out));
}

KernelCheckReport kernel_condition_check(const KernelDescriptor& kernel,
                                         const KernelSampleSpec& spec) {
  kernel.validate();
  const int n = kernel.dim;
  if (spec.dim != n) throw admissibility_error("kernel_condition_check: dimension mismatch");

  std::vector<double> seps = spec.separations;
  if (seps.empty()) {
    for (double s = 1.0 / 64.0; s <= 32.0; s *= 2.0) seps.push_back(s);
  }
  std::vector<std::vector<double>> dirs;
  if (n == 1) {
    dirs = {{1.0}, {-1.0}};
  } else {
    for (int i = 0; i < spec.directions; ++i) {
      double a = 2.0 * M_PI * i / spec.directions + 0.1;
      std::vector<double> d(static_cast<std::size_t>(n), 0.0);
      d[0] = std::cos(a);
      d[1] = std::sin(a);
      dirs.push_back(std::move(d));
    }
  }
  std::vector<std::vector<double>> bases;
  bases.push_back(std::vector<double>(static_cast<std::size_t>(n), 0.0));
  bases.push_back(std::vector<double>(static_cast<std::size_t>(n), 0.37));

  KernelCheckReport rep;
  rep.tolerance = spec.tol;
  std::vector<double> x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n)),
      z(static_cast<std::size_t>(n));
  for (const auto& base : bases) {
    for (double sep : seps) {
      for (const auto& dy : dirs) {
        for (int j = 0; j < n; ++j) {
          x[static_cast<std::size_t>(j)] = base[static_cast<std::size_t>(j)];
          y[static_cast<std::size_t>(j)] = base[static_cast<std::size_t>(j)] + sep * dy[static_cast<std::size_t>(j)];
        }
        double size_ratio = std::abs(kernel.eval(x, y)) * std::pow(sep, n) / kernel.size_constant;
        rep.max_size_ratio = std::max(rep.max_size_ratio, size_ratio);
        ++rep.samples;
        for (const auto& dz : dirs) {
          for (double frac : spec.z_fractions) {
            double dist_xz = 0.5 * frac * sep;  // |x-z| <= |x-y|/2
            for (int j = 0; j < n; ++j)
              z[static_cast<std::size_t>(j)] =
                  x[static_cast<std::size_t>(j)] + dist_xz * dz[static_cast<std::size_t>(j)];
            double inc = std::abs(kernel.eval(x, y) - kernel.eval(z, y)) +
                         std::abs(kernel.eval(y, x) - kernel.eval(y, z));
            double ratio = inc * std::pow(sep, n + kernel.smoothness) /
                           (kernel.smoothness_constant * std::pow(dist_xz, kernel.smoothness));
            rep.max_smoothness_ratio = std::max(rep.max_smoothness_ratio, ratio);
            ++rep.samples;
          }
        }
      }
    }
  }
  rep.observed_size_constant = rep.max_size_ratio * kernel.size_constant;
  rep.observed_smoothness_constant = rep.max_smoothness_ratio * kernel.smoothness_constant;
  rep.pass = rep.max_size_ratio <= 1.0 + spec.tol && rep.max_smoothness_ratio <= 1.0 + spec.tol;
  return rep;
}

}  // namespace mixnorm
