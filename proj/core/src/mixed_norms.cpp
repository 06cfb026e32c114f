#include "mixnorm/mixed_norms.hpp"

#include <algorithm>
#include <cmath>

#include "mixnorm/oracles.hpp"

namespace mixnorm {

namespace {

// Collapse axis 0 (contiguous) of vals with leading length len: one output per
// trailing block. Finite p: (sum |v|^p * w)^{1/p}; p = inf: max |v|.
std::vector<double> reduce_axis0(const std::vector<double>& vals, std::size_t len, double p,
                                 double w) {
  std::size_t blocks = vals.size() / len;
  std::vector<double> out(blocks);
  if (std::isinf(p)) {
    for (std::size_t b = 0; b < blocks; ++b) {
      double m = 0.0;
      const double* v = vals.data() + b * len;
      for (std::size_t i = 0; i < len; ++i) m = std::max(m, std::abs(v[i]));
      out[b] = m;
    }
  } else {
    for (std::size_t b = 0; b < blocks; ++b) {
      double s = 0.0;
      const double* v = vals.data() + b * len;
      for (std::size_t i = 0; i < len; ++i) s += std::pow(std::abs(v[i]), p);
      out[b] = std::pow(s * w, 1.0 / p);
    }
  }
  return out;
}

double iterated_reduce(std::vector<double> vals, const std::vector<std::size_t>& shape,
                       const std::vector<double>& axis_weight, const ExponentVector& p) {
  for (std::size_t j = 0; j < shape.size(); ++j) {
    vals = reduce_axis0(vals, shape[j], p[static_cast<int>(j)], axis_weight[j]);
  }
  return vals[0];
}

}  // namespace

void MultiArray::validate() const {
  if (shape.empty()) throw admissibility_error("multi array: empty shape");
  std::size_t n = 1;
  for (std::size_t s : shape) {
    if (s == 0) throw admissibility_error("multi array: zero-length axis");
    n *= s;
  }
  if (n != values.size()) throw admissibility_error("multi array: shape/value mismatch");
}

double mixed_lebesgue_norm(const GridFunction& f, const ExponentVector& p) {
  if (p.size() != f.dim())
    throw admissibility_error("mixed_lebesgue_norm: exponent count must match the dimension");
  std::vector<std::size_t> shape;
  std::vector<double> w;
  for (int j = 0; j < f.dim(); ++j) {
    shape.push_back(static_cast<std::size_t>(f.spec().count[static_cast<std::size_t>(j)]));
    w.push_back(f.spec().spacing[static_cast<std::size_t>(j)]);
  }
  return iterated_reduce(f.values(), shape, w, p);
}

double mixed_sequence_norm(const MultiArray& a, const ExponentVector& p) {
  a.validate();
  if (static_cast<std::size_t>(p.size()) != a.shape.size())
    throw admissibility_error("mixed_sequence_norm: exponent count must match the array rank");
  std::vector<double> w(a.shape.size(), 1.0);
  return iterated_reduce(a.values, a.shape, w, p);
}

double mixed_norm_on_cube(const GridFunction& f, const Cube& q, const ExponentVector& p) {
  if (p.size() != f.dim()) throw admissibility_error("mixed_norm_on_cube: dimension mismatch");
  const GridSpec& spec = f.spec();
  const int n = spec.dim();
  std::vector<AxisCellRange> range(static_cast<std::size_t>(n));
  std::vector<std::size_t> shape(static_cast<std::size_t>(n));
  std::size_t cells = 1;
  for (int j = 0; j < n; ++j) {
    range[static_cast<std::size_t>(j)] = cells_in_interval(spec, j, q.lo(j), q.hi(j));
    if (range[static_cast<std::size_t>(j)].empty()) return 0.0;
    shape[static_cast<std::size_t>(j)] =
        static_cast<std::size_t>(range[static_cast<std::size_t>(j)].length());
    cells *= shape[static_cast<std::size_t>(j)];
  }
  // Copy the covered sub-block (axis 0 contiguous) and reduce it.
  std::vector<double> sub(cells);
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) idx[static_cast<std::size_t>(j)] = range[static_cast<std::size_t>(j)].first;
  std::vector<std::size_t> stride(static_cast<std::size_t>(n));
  std::size_t s = 1;
  for (int j = 0; j < n; ++j) {
    stride[static_cast<std::size_t>(j)] = s;
    s *= static_cast<std::size_t>(spec.count[static_cast<std::size_t>(j)]);
  }
  for (std::size_t out = 0; out < cells; ++out) {
    std::size_t flat = 0;
    for (int j = 0; j < n; ++j)
      flat += static_cast<std::size_t>(idx[static_cast<std::size_t>(j)]) * stride[static_cast<std::size_t>(j)];
    sub[out] = f.value(flat);
    for (int j = 0; j < n; ++j) {
      std::size_t sj = static_cast<std::size_t>(j);
      if (++idx[sj] <= range[sj].last) break;
      idx[sj] = range[sj].first;
    }
  }
  std::vector<double> w;
  for (int j = 0; j < n; ++j) w.push_back(spec.spacing[static_cast<std::size_t>(j)]);
  return iterated_reduce(std::move(sub), shape, w, p);
}

std::vector<std::vector<double>> iterated_reduction_stages(const GridFunction& f,
                                                           const ExponentVector& p) {
  if (p.size() != f.dim())
    throw admissibility_error("iterated_reduction_stages: dimension mismatch");
  std::vector<std::vector<double>> stages;
  std::vector<double> cur(f.size());
  for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = std::abs(f.value(i));
  stages.push_back(cur);
  for (int j = 0; j < f.dim(); ++j) {
    std::size_t len = static_cast<std::size_t>(f.spec().count[static_cast<std::size_t>(j)]);
    cur = reduce_axis0(cur, len, p[j], f.spec().spacing[static_cast<std::size_t>(j)]);
    stages.push_back(cur);
  }
  return stages;
}

void MorreyParams::validate(int dim) const {
  if (q.size() != dim) throw admissibility_error("morrey params: exponent count mismatch");
  if (std::isnan(p) || p <= 0.0) throw admissibility_error("morrey params: p must lie in (0, inf]");
  double lhs = q.reciprocal_sum();
  double rhs = dim * reciprocal(p);
  if (lhs + 1e-12 < rhs)
    throw admissibility_error("morrey params: admissibility sum_j 1/q_j >= n/p violated");
}

double MorreyParams::cube_exponent(int dim) const {
  return reciprocal(p) - q.reciprocal_sum() / dim;
}

namespace {

// value-then-tiebreak order making the family supremum deterministic:
// larger value wins; ties go to smaller volume, then smaller center.
bool better_cube(double value, const Cube& q, double best_value, const Cube& best) {
  if (value != best_value) return value > best_value;
  if (q.radius != best.radius) return q.radius < best.radius;
  return q.center < best.center;
}

}  // namespace

double classical_morrey_norm(const GridFunction& f, double p, double q,
                             const CubeFamily& family) {
  if (std::isnan(p) || p <= 0.0 || std::isnan(q) || q <= 0.0)
    throw admissibility_error("classical_morrey_norm: exponents must lie in (0, inf]");
  if (q > p) throw admissibility_error("classical_morrey_norm: q <= p required");
  double best = 0.0;
  for (const Cube& cube : family.cubes()) {
    // All axis exponents equal to q: the iterated reduction telescopes to
    // (int_Q |f|^q)^{1/q}; q = inf gives the cell maximum over Q.
    double val = mixed_norm_on_cube(f, cube, ExponentVector::constant(f.dim(), q));
    double scale = std::pow(cube.volume(), reciprocal(p) - reciprocal(q));
    best = std::max(best, scale * val);
  }
  return best;
}

MorreyResult mixed_morrey_norm(const GridFunction& f, const MorreyParams& params,
                               const CubeFamily& family) {
  params.validate(f.dim());
  if (family.size() == 0) throw admissibility_error("mixed_morrey_norm: empty cube family");
  double expo = params.cube_exponent(f.dim());
  MorreyResult res;
  res.value = -1.0;
  for (const Cube& cube : family.cubes()) {
    double val = std::pow(cube.volume(), expo) * mixed_norm_on_cube(f, cube, params.q);
    if (res.value < 0.0 || better_cube(val, cube, res.value, res.argmax)) {
      res.value = val;
      res.argmax = cube;
    }
  }
  return res;
}

double weighted_lp_norm(const GridFunction& f, double p, const GridFunction& w) {
  if (std::isinf(p) || !(p > 0.0)) throw admissibility_error("weighted_lp_norm: p must be finite, > 0");
  if (!(f.spec() == w.spec())) throw admissibility_error("weighted_lp_norm: grids must match");
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    double wi = w.value(i);
    if (wi < 0.0) throw admissibility_error("weighted_lp_norm: weight must be nonnegative");
    s += std::pow(std::abs(f.value(i)), p) * wi;
  }
  return std::pow(s * f.spec().cell_volume(), 1.0 / p);
}

double equivalent_morrey_norm(const GridFunction& f, const MorreyParams& params, double eta,
                              const CubeFamily& family) {
  params.validate(f.dim());
  double gap = params.q.reciprocal_sum() - f.dim() * reciprocal(params.p);
  if (!(eta > 0.0) || !(eta < 1.0) || !(eta > gap))
    throw admissibility_error(
        "equivalent_morrey_norm: eta must satisfy sum 1/q_j - n/p < eta < 1, eta > 0");
  const GridSpec& spec = f.spec();
  double expo = params.cube_exponent(f.dim());
  double best = 0.0;
  // Per-axis cutoff (M_j chi_{I_j})^eta sampled at cell centers, then one
  // mixed norm of the weighted function per cube.
  std::vector<std::vector<double>> axis_cut(static_cast<std::size_t>(f.dim()));
  for (const Cube& cube : family.cubes()) {
    for (int j = 0; j < f.dim(); ++j) {
      std::size_t sj = static_cast<std::size_t>(j);
      axis_cut[sj].resize(static_cast<std::size_t>(spec.count[sj]));
      for (int i = 0; i < spec.count[sj]; ++i) {
        double m = interval_indicator_maximal(cube.lo(j), cube.hi(j), spec.center(j, i));
        axis_cut[sj][static_cast<std::size_t>(i)] = std::pow(m, eta);
      }
    }
    std::vector<double> vals(f.size());
    std::vector<int> idx(static_cast<std::size_t>(f.dim()), 0);
    for (std::size_t flat = 0; flat < vals.size(); ++flat) {
      double cut = 1.0;
      for (int j = 0; j < f.dim(); ++j)
        cut *= axis_cut[static_cast<std::size_t>(j)][static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
      vals[flat] = f.value(flat) * cut;
      for (int j = 0; j < f.dim(); ++j) {
        std::size_t sj = static_cast<std::size_t>(j);
        if (++idx[sj] < spec.count[sj]) break;
        idx[sj] = 0;
      }
    }
    double norm = mixed_lebesgue_norm(GridFunction(spec, std::move(vals)), params.q);
    best = std::max(best, std::pow(cube.volume(), expo) * norm);
  }
  return best;
}

std::vector<GridFunction> dual_sequence(const std::vector<GridFunction>& fs,
                                        const ExponentVector& p, double q) {
  if (fs.empty()) throw admissibility_error("dual_sequence: empty input");
  const GridSpec& spec = fs.front().spec();
  for (const GridFunction& f : fs) {
    if (!(f.spec() == spec)) throw admissibility_error("dual_sequence: grids must match");
  }
  if (p.size() != spec.dim()) throw admissibility_error("dual_sequence: dimension mismatch");
  if (!p.all_gt(1.0) || !p.all_finite() || std::isinf(q) || !(q > 1.0))
    throw admissibility_error("dual_sequence: finite exponents with p_j, q in (1, inf) required");

  GridFunction big = lq_combine(fs, q);  // F = (sum |f_j|^q)^{1/q}
  bool all_zero = true;
  for (double v : big.values()) {
    if (v != 0.0) {
      all_zero = false;
      break;
    }
  }
  if (all_zero) throw admissibility_error("dual_sequence: all-zero input has no norming sequence");

  const int n = spec.dim();
  std::vector<std::vector<double>> stages = iterated_reduction_stages(big, p);

  // prod(x) = prod_{k=1..n} ||F||_{(p_1..p_k)}(x_{k+1..n})^{p_{k+1} - p_k}, p_{n+1} = 1.
  std::vector<double> prod(big.size(), 1.0);
  std::size_t block = 1;  // cells collapsed by stage k
  for (int k = 1; k <= n; ++k) {
    block *= static_cast<std::size_t>(spec.count[static_cast<std::size_t>(k - 1)]);
    double expo = (k == n ? 1.0 : p[k]) - p[k - 1];
    const std::vector<double>& stage = stages[static_cast<std::size_t>(k)];
    for (std::size_t flat = 0; flat < prod.size(); ++flat) {
      double base = stage[flat / block];
      prod[flat] *= base > 0.0 ? std::pow(base, expo) : 0.0;
    }
  }

  std::vector<GridFunction> gs;
  gs.reserve(fs.size());
  for (const GridFunction& f : fs) {
    std::vector<double> g(f.size(), 0.0);
    for (std::size_t i = 0; i < g.size(); ++i) {
      double F = big.value(i);
      if (F <= 0.0) continue;
      double v = f.value(i);
      double sgn = v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0);
      g[i] = sgn * std::pow(std::abs(v), q - 1.0) * std::pow(F, p[0] - q) * prod[i];
    }
    gs.emplace_back(spec, std::move(g));
  }
  return gs;
}

}  // namespace mixnorm
