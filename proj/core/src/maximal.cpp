#include "mixnorm/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "mixnorm/parallel.hpp"

namespace mixnorm {

AxisOrder AxisOrder::identity(int n) {
  AxisOrder o;
  for (int j = 1; j <= n; ++j) o.order.push_back(j);
  return o;
}

AxisOrder AxisOrder::reversed(int n) {
  AxisOrder o;
  for (int j = n; j >= 1; --j) o.order.push_back(j);
  return o;
}

void AxisOrder::validate(int n) const {
  if (static_cast<int>(order.size()) != n)
    throw admissibility_error("axis order: length must equal the dimension");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int a : order) {
    if (a < 1 || a > n || seen[static_cast<std::size_t>(a - 1)])
      throw admissibility_error("axis order: entries must form a permutation of 1..n");
    seen[static_cast<std::size_t>(a - 1)] = true;
  }
}

namespace {

// All-cells uncentered maximal along one line: out[i] = max over windows
// [l, r] containing i of the mean of vals[l..r]. O(L^2).
//
// For each window start l the suffix maxima of the running means serve every
// cell at once. The pruned variant skips a start l when, for every i >= l,
// the bound (P[L]-P[l])/(i-l+1) cannot beat out[i]; every candidate mean with
// this start is <= that bound (monotone rounding: smaller numerator, larger
// divisor), so skipping is bitwise-neutral.
void line_maximal_all(const double* vals, std::size_t L, double* out, bool pruned,
                      std::vector<double>& prefix, std::vector<double>& suffix) {
  prefix.resize(L + 1);
  suffix.resize(L);
  prefix[0] = 0.0;
  for (std::size_t i = 0; i < L; ++i) prefix[i + 1] = prefix[i] + std::abs(vals[i]);
  for (std::size_t i = 0; i < L; ++i) out[i] = 0.0;
  for (std::size_t l = 0; l < L; ++l) {
    double rest = prefix[L] - prefix[l];
    if (pruned) {
      bool improvable = false;
      for (std::size_t i = l; i < L; ++i) {
        if (rest / static_cast<double>(i - l + 1) > out[i]) {
          improvable = true;
          break;
        }
      }
      if (!improvable) continue;
    }
    for (std::size_t r = l; r < L; ++r)
      suffix[r] = (prefix[r + 1] - prefix[l]) / static_cast<double>(r - l + 1);
    for (std::size_t r = L - 1; r-- > l;) suffix[r] = std::max(suffix[r], suffix[r + 1]);
    for (std::size_t i = l; i < L; ++i) out[i] = std::max(out[i], suffix[i]);
  }
}

struct LineLayout {
  std::size_t length = 0;
  std::size_t stride = 1;
  std::size_t line_count = 0;
  std::size_t outer_block = 0;  // stride * length
};

LineLayout line_layout(const GridSpec& spec, int axis0) {
  LineLayout ll;
  ll.length = static_cast<std::size_t>(spec.count[static_cast<std::size_t>(axis0)]);
  ll.stride = 1;
  for (int j = 0; j < axis0; ++j) ll.stride *= static_cast<std::size_t>(spec.count[static_cast<std::size_t>(j)]);
  ll.outer_block = ll.stride * ll.length;
  ll.line_count = spec.cell_count() / ll.length;
  return ll;
}

std::size_t line_base(const LineLayout& ll, std::size_t line) {
  std::size_t inner = line % ll.stride;
  std::size_t outer = line / ll.stride;
  return outer * ll.outer_block + inner;
}

}  // namespace

GridFunction directional_maximal(const GridFunction& f, int axis, MaxAlgorithm algorithm) {
  if (axis < 1 || axis > f.dim())
    throw admissibility_error("directional_maximal: axis must lie in 1..n");
  const int a = axis - 1;
  const LineLayout ll = line_layout(f.spec(), a);
  std::vector<double> result(f.size());
  const bool pruned = algorithm == MaxAlgorithm::kPruned;

  parallel_for(ll.line_count, [&](std::size_t line) {
    std::vector<double> buf(ll.length), out(ll.length), prefix, suffix;
    std::size_t base = line_base(ll, line);
    for (std::size_t i = 0; i < ll.length; ++i) buf[i] = f.value(base + i * ll.stride);
    line_maximal_all(buf.data(), ll.length, out.data(), pruned, prefix, suffix);
    for (std::size_t i = 0; i < ll.length; ++i) result[base + i * ll.stride] = out[i];
  });
  return GridFunction(f.spec(), std::move(result));
}

GridFunction iterated_maximal(const GridFunction& f, const MaximalConfig& cfg) {
  if (!(cfg.t > 0.0)) throw admissibility_error("iterated_maximal: t must be positive");
  cfg.order.validate(f.dim());
  GridFunction g = abs_power(f, cfg.t);
  for (int axis : cfg.order.order) g = directional_maximal(g, axis, cfg.algorithm);
  if (cfg.t == 1.0) return g;
  return map_values(g, [t = cfg.t](double v) { return std::pow(v, 1.0 / t); });
}

namespace {

// Exclusive n-dim prefix table with dims N_j + 1 (axis 0 fastest).
struct PrefixTable {
  std::vector<double> data;
  std::vector<std::size_t> dims;

  std::size_t flat(const std::vector<int>& idx) const {
    std::size_t f = 0, s = 1;
    for (std::size_t j = 0; j < dims.size(); ++j) {
      f += static_cast<std::size_t>(idx[j]) * s;
      s *= dims[j];
    }
    return f;
  }

  // Sum of |f| over the inclusive cell box [lo_j, hi_j]; empty axes give 0.
  double box_sum(const std::vector<int>& lo, const std::vector<int>& hi) const {
    const int n = static_cast<int>(dims.size());
    for (int j = 0; j < n; ++j) {
      if (hi[static_cast<std::size_t>(j)] < lo[static_cast<std::size_t>(j)]) return 0.0;
    }
    double total = 0.0;
    std::vector<int> corner(static_cast<std::size_t>(n));
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      for (int j = 0; j < n; ++j) {
        std::size_t sj = static_cast<std::size_t>(j);
        corner[sj] = (mask & (1u << j)) ? hi[sj] + 1 : lo[sj];
      }
      // an even number of lo-corner picks contributes positively
      total += ((n - __builtin_popcount(mask)) % 2 == 0 ? 1.0 : -1.0) * data[flat(corner)];
    }
    return total;
  }
};

PrefixTable build_prefix(const GridFunction& f) {
  const GridSpec& spec = f.spec();
  const int n = spec.dim();
  PrefixTable p;
  p.dims.resize(static_cast<std::size_t>(n));
  std::size_t total = 1;
  for (int j = 0; j < n; ++j) {
    p.dims[static_cast<std::size_t>(j)] = static_cast<std::size_t>(spec.count[static_cast<std::size_t>(j)]) + 1;
    total *= p.dims[static_cast<std::size_t>(j)];
  }
  p.data.assign(total, 0.0);
  // scatter |f| into the shifted slots
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  for (std::size_t flat = 0; flat < f.size(); ++flat) {
    std::vector<int> shifted(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) shifted[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j)] + 1;
    p.data[p.flat(shifted)] = std::abs(f.value(flat));
    for (int j = 0; j < n; ++j) {
      std::size_t sj = static_cast<std::size_t>(j);
      if (++idx[sj] < spec.count[sj]) break;
      idx[sj] = 0;
    }
  }
  // running sums along each axis
  for (int a = 0; a < n; ++a) {
    std::size_t stride = 1;
    for (int j = 0; j < a; ++j) stride *= p.dims[static_cast<std::size_t>(j)];
    std::size_t len = p.dims[static_cast<std::size_t>(a)];
    std::size_t lines = p.data.size() / len;
    for (std::size_t line = 0; line < lines; ++line) {
      std::size_t inner = line % stride;
      std::size_t outer = line / stride;
      std::size_t base = outer * stride * len + inner;
      for (std::size_t i = 1; i < len; ++i)
        p.data[base + i * stride] += p.data[base + (i - 1) * stride];
    }
  }
  return p;
}

// In-place forward-window maximum of length w along one axis:
// arr[.., q, ..] <- max over s in [q, min(q + w - 1, M - 1)] of arr[.., s, ..].
void sliding_forward_max(std::vector<double>& arr, const std::vector<std::size_t>& dims,
                         std::size_t axis, std::size_t w) {
  if (w <= 1) return;
  std::size_t stride = 1;
  for (std::size_t j = 0; j < axis; ++j) stride *= dims[j];
  std::size_t len = dims[axis];
  std::size_t lines = arr.size() / len;
  parallel_for(lines, [&](std::size_t line) {
    std::size_t inner = line % stride;
    std::size_t outer = line / stride;
    std::size_t base = outer * stride * len + inner;
    std::deque<std::size_t> dq;  // indices with decreasing values
    std::vector<double> out(len);
    // sweep q downward: index q enters the window [q, q+w-1], q+w leaves
    for (std::size_t q = len; q-- > 0;) {
      double v = arr[base + q * stride];
      while (!dq.empty() && arr[base + dq.back() * stride] <= v) dq.pop_back();
      dq.push_back(q);
      while (dq.front() > q + w - 1) dq.pop_front();
      out[q] = arr[base + dq.front() * stride];
    }
    for (std::size_t q = 0; q < len; ++q) arr[base + q * stride] = out[q];
  });
}

}  // namespace

GridFunction hl_maximal(const GridFunction& f) {
  const GridSpec& spec = f.spec();
  if (!spec.equal_spacing())
    throw admissibility_error("hl_maximal: cubes require equal spacing on all axes");
  const int n = spec.dim();
  PrefixTable prefix = build_prefix(f);
  int kmax = 0;
  for (int c : spec.count) kmax = std::max(kmax, c);

  std::vector<double> out(f.size(), 0.0);
  std::vector<std::size_t> mdims(static_cast<std::size_t>(n));
  std::vector<int> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
  for (int k = 1; k <= kmax; ++k) {
    std::size_t mtotal = 1;
    for (int j = 0; j < n; ++j) {
      mdims[static_cast<std::size_t>(j)] =
          static_cast<std::size_t>(spec.count[static_cast<std::size_t>(j)] + k - 1);
      mtotal *= mdims[static_cast<std::size_t>(j)];
    }
    // candidate means per aligned position (position may overhang the grid)
    std::vector<double> cand(mtotal);
    double inv_cells = 1.0 / std::pow(static_cast<double>(k), n);
    std::vector<int> q(static_cast<std::size_t>(n), 0);
    for (std::size_t flat = 0; flat < mtotal; ++flat) {
      for (int j = 0; j < n; ++j) {
        std::size_t sj = static_cast<std::size_t>(j);
        int pos = q[sj] - (k - 1);
        lo[sj] = std::max(0, pos);
        hi[sj] = std::min(spec.count[sj] - 1, pos + k - 1);
      }
      cand[flat] = prefix.box_sum(lo, hi) * inv_cells;
      for (int j = 0; j < n; ++j) {
        std::size_t sj = static_cast<std::size_t>(j);
        if (static_cast<std::size_t>(++q[sj]) < mdims[sj]) break;
        q[sj] = 0;
      }
    }
    for (int j = 0; j < n; ++j)
      sliding_forward_max(cand, mdims, static_cast<std::size_t>(j), static_cast<std::size_t>(k));
    // cell i reads the window max anchored at q_j = i_j
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    for (std::size_t flat = 0; flat < f.size(); ++flat) {
      std::size_t mflat = 0, s = 1;
      for (int j = 0; j < n; ++j) {
        std::size_t sj = static_cast<std::size_t>(j);
        mflat += static_cast<std::size_t>(idx[sj]) * s;
        s *= mdims[sj];
      }
      out[flat] = std::max(out[flat], cand[mflat]);
      for (int j = 0; j < n; ++j) {
        std::size_t sj = static_cast<std::size_t>(j);
        if (++idx[sj] < spec.count[sj]) break;
        idx[sj] = 0;
      }
    }
  }
  return GridFunction(spec, std::move(out));
}

namespace {

double strong_cost_estimate(const GridSpec& spec) {
  const int n = spec.dim();
  double combos = 1.0, update = 1.0;
  for (int j = 0; j + 1 < n; ++j) {
    double N = spec.count[static_cast<std::size_t>(j)];
    combos *= N * (N + 1.0) / 2.0;
    update *= N * N * N / 6.0;
  }
  double L = spec.count[static_cast<std::size_t>(n - 1)];
  return combos * (L * L + L * 16.0) + update * L;
}

}  // namespace

GridFunction strong_maximal(const GridFunction& f) {
  const GridSpec& spec = f.spec();
  const int n = spec.dim();
  if (n == 1) return directional_maximal(f, 1);
  if (strong_cost_estimate(spec) > 6e9)
    throw admissibility_error(
        "strong_maximal: grid too large for the exact sweep; use "
        "strong_maximal_sandwich_upper or coarsen the grid");

  PrefixTable prefix = build_prefix(f);
  std::vector<double> out(f.size(), 0.0);
  const int last = n - 1;
  const std::size_t L = static_cast<std::size_t>(spec.count[static_cast<std::size_t>(last)]);

  // Odometer over (l_j, r_j) ranges for the leading n-1 axes.
  std::vector<int> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
  std::vector<int> rl(static_cast<std::size_t>(last), 0), rr(static_cast<std::size_t>(last), 0);
  std::vector<double> strip(L), line_out(L), pbuf, sbuf;

  std::vector<std::size_t> stride(static_cast<std::size_t>(n));
  std::size_t s = 1;
  for (int j = 0; j < n; ++j) {
    stride[static_cast<std::size_t>(j)] = s;
    s *= static_cast<std::size_t>(spec.count[static_cast<std::size_t>(j)]);
  }

  while (true) {
    double area = 1.0;
    for (int j = 0; j < last; ++j) {
      std::size_t sj = static_cast<std::size_t>(j);
      lo[sj] = rl[sj];
      hi[sj] = rr[sj];
      area *= static_cast<double>(rr[sj] - rl[sj] + 1);
    }
    for (std::size_t i = 0; i < L; ++i) {
      lo[static_cast<std::size_t>(last)] = static_cast<int>(i);
      hi[static_cast<std::size_t>(last)] = static_cast<int>(i);
      strip[i] = prefix.box_sum(lo, hi);
    }
    line_maximal_all(strip.data(), L, line_out.data(), /*pruned=*/true, pbuf, sbuf);

    // every cell inside the leading ranges sees this rectangle family
    std::vector<int> idx(static_cast<std::size_t>(last));
    for (int j = 0; j < last; ++j) idx[static_cast<std::size_t>(j)] = rl[static_cast<std::size_t>(j)];
    while (true) {
      std::size_t base = 0;
      for (int j = 0; j < last; ++j)
        base += static_cast<std::size_t>(idx[static_cast<std::size_t>(j)]) * stride[static_cast<std::size_t>(j)];
      for (std::size_t i = 0; i < L; ++i) {
        std::size_t flat = base + i * stride[static_cast<std::size_t>(last)];
        out[flat] = std::max(out[flat], line_out[i] / area);
      }
      int j = 0;
      for (; j < last; ++j) {
        std::size_t sj = static_cast<std::size_t>(j);
        if (++idx[sj] <= rr[sj]) break;
        idx[sj] = rl[sj];
      }
      if (j == last) break;
    }

    // advance the (l, r) odometer: r sweeps up, then l advances
    int j = 0;
    for (; j < last; ++j) {
      std::size_t sj = static_cast<std::size_t>(j);
      int nj = spec.count[sj];
      if (++rr[sj] < nj) break;
      if (++rl[sj] < nj) {
        rr[sj] = rl[sj];
        break;
      }
      rl[sj] = 0;
      rr[sj] = 0;
    }
    if (j == last) break;
  }
  return GridFunction(spec, std::move(out));
}

double interval_maximal_at(const std::vector<double>& vals, std::size_t index) {
  const std::size_t L = vals.size();
  if (index >= L) throw admissibility_error("interval_maximal_at: index out of range");
  std::vector<double> prefix(L + 1);
  prefix[0] = 0.0;
  for (std::size_t i = 0; i < L; ++i) prefix[i + 1] = prefix[i] + std::abs(vals[i]);
  double best = 0.0;
  for (std::size_t l = 0; l <= index; ++l) {
    // No window starting at l can beat (P[L]-P[l])/(index-l+1).
    double rest = prefix[L] - prefix[l];
    if (rest / static_cast<double>(index - l + 1) <= best) continue;
    for (std::size_t r = index; r < L; ++r)
      best = std::max(best, (prefix[r + 1] - prefix[l]) / static_cast<double>(r - l + 1));
  }
  return best;
}

GridFunction strong_maximal_sandwich_upper(const GridFunction& f) {
  MaximalConfig cfg;
  cfg.t = 1.0;
  cfg.order = AxisOrder::identity(f.dim());
  GridFunction a = iterated_maximal(f, cfg);
  cfg.order = AxisOrder::reversed(f.dim());
  GridFunction b = iterated_maximal(f, cfg);
  return combine(a, b, [](double x, double y) { return std::min(x, y); });
}

AwayFromCubeBound away_from_cube_bound(const GridFunction& f, const Cube& q, double enlargement) {
  q.validate();
  const GridSpec& spec = f.spec();
  if (q.dim() != spec.dim()) throw admissibility_error("away_from_cube_bound: dimension mismatch");
  if (!cube_intersects_box(spec, q))
    throw admissibility_error("away_from_cube_bound: cube must intersect the grid box");
  if (!(enlargement >= 1.0))
    throw admissibility_error("away_from_cube_bound: enlargement must be >= 1");
  if (!spec.equal_spacing())
    throw admissibility_error("away_from_cube_bound: requires equal spacing");

  GridFunction outside = restrict_outside(f, q.scaled(enlargement));
  GridFunction m = hl_maximal(outside);
  double lhs = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (q.contains(m.cell_center(i))) lhs = std::max(lhs, m.value(i));
  }

  // rhs: aligned cubes R containing Q, up to one size past covering the box.
  const int n = spec.dim();
  const double h = spec.spacing[0];
  int kmin = 1, kcover = 1;
  for (int j = 0; j < n; ++j) {
    kmin = std::max(kmin, static_cast<int>(std::ceil(q.side() / h - 1e-9)));
    double span = std::max(spec.box_hi(j), q.hi(j)) - std::min(spec.box_lo(j), q.lo(j));
    kcover = std::max(kcover, static_cast<int>(std::ceil(span / h - 1e-9)));
  }
  PrefixTable prefix = build_prefix(f);
  double rhs = 0.0;
  std::vector<int> ilo(static_cast<std::size_t>(n)), ihi(static_cast<std::size_t>(n));
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int k = kmin; k <= kcover; ++k) {
    // aligned positions i with origin + i h <= Q.lo and origin + (i + k) h >= Q.hi
    std::vector<int> plo(static_cast<std::size_t>(n)), phi(static_cast<std::size_t>(n));
    bool any = true;
    for (int j = 0; j < n; ++j) {
      std::size_t sj = static_cast<std::size_t>(j);
      phi[sj] = static_cast<int>(std::floor((q.lo(j) - spec.origin[sj]) / h + 1e-9));
      plo[sj] = static_cast<int>(std::ceil((q.hi(j) - spec.origin[sj]) / h - 1e-9)) - k;
      if (plo[sj] > phi[sj]) any = false;
    }
    if (!any) continue;
    pos = plo;
    double inv_vol = 1.0 / std::pow(k * h, n);
    while (true) {
      for (int j = 0; j < n; ++j) {
        std::size_t sj = static_cast<std::size_t>(j);
        ilo[sj] = std::max(0, pos[sj]);
        ihi[sj] = std::min(spec.count[sj] - 1, pos[sj] + k - 1);
      }
      rhs = std::max(rhs, prefix.box_sum(ilo, ihi) * spec.cell_volume() * inv_vol);
      int j = 0;
      for (; j < n; ++j) {
        std::size_t sj = static_cast<std::size_t>(j);
        if (++pos[sj] <= phi[sj]) break;
        pos[sj] = plo[sj];
      }
      if (j == n) break;
    }
  }
  return AwayFromCubeBound{lhs, rhs};
}

}  // namespace mixnorm
