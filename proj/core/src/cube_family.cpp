#include "mixnorm/cube_family.hpp"

#include <algorithm>
#include <cmath>

namespace mixnorm {

AxisCellRange cells_in_interval(const GridSpec& spec, int axis, double lo, double hi) {
  std::size_t j = static_cast<std::size_t>(axis);
  // center(i) = origin + (i + 1/2) h  in [lo, hi]
  double a = (lo - spec.origin[j]) / spec.spacing[j] - 0.5;
  double b = (hi - spec.origin[j]) / spec.spacing[j] - 0.5;
  AxisCellRange r;
  r.first = std::max(0, static_cast<int>(std::ceil(a - 1e-12)));
  r.last = std::min(spec.count[j] - 1, static_cast<int>(std::floor(b + 1e-12)));
  return r;
}

bool cube_intersects_box(const GridSpec& spec, const Cube& q) {
  for (int j = 0; j < spec.dim(); ++j) {
    if (q.hi(j) <= spec.box_lo(j) || q.lo(j) >= spec.box_hi(j)) return false;
  }
  return true;
}

namespace {

void require_square_cells(const GridSpec& spec, const char* who) {
  if (!spec.equal_spacing())
    throw admissibility_error(std::string(who) + ": cube enumeration requires equal spacing on all axes");
}

}  // namespace

CubeFamily CubeFamily::exact_aligned(const GridSpec& spec) {
  spec.validate();
  require_square_cells(spec, "exact_aligned");
  const int n = spec.dim();
  const double h = spec.spacing[0];
  int kmax = 0;
  for (int c : spec.count) kmax = std::max(kmax, c);

  std::vector<Cube> cubes;
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int k = 1; k <= kmax; ++k) {
    // Position range per axis: in-box for k <= N_j, axis-covering otherwise.
    std::vector<int> lo_pos(static_cast<std::size_t>(n)), hi_pos(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      int nj = spec.count[static_cast<std::size_t>(j)];
      lo_pos[static_cast<std::size_t>(j)] = std::min(0, nj - k);
      hi_pos[static_cast<std::size_t>(j)] = std::max(0, nj - k);
    }
    pos = lo_pos;
    while (true) {
      Cube q;
      q.center.resize(static_cast<std::size_t>(n));
      q.radius = 0.5 * k * h;
      for (int j = 0; j < n; ++j) {
        std::size_t sj = static_cast<std::size_t>(j);
        q.center[sj] = spec.origin[sj] + (pos[sj] + 0.5 * k) * h;
      }
      cubes.push_back(std::move(q));
      int j = 0;
      for (; j < n; ++j) {
        std::size_t sj = static_cast<std::size_t>(j);
        if (++pos[sj] <= hi_pos[sj]) break;
        pos[sj] = lo_pos[sj];
      }
      if (j == n) break;
    }
  }
  return CubeFamily(std::move(cubes), "exact-all-aligned");
}

CubeFamily CubeFamily::dyadic(const GridSpec& spec) {
  spec.validate();
  require_square_cells(spec, "dyadic");
  const int n = spec.dim();
  const double h = spec.spacing[0];
  double box_side = 0.0;
  for (int j = 0; j < n; ++j) box_side = std::max(box_side, spec.box_hi(j) - spec.box_lo(j));

  std::vector<Cube> cubes;
  // Bounding cube of the whole box, anchored at the box corner.
  {
    Cube q;
    q.radius = 0.5 * box_side;
    q.center.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      q.center[static_cast<std::size_t>(j)] = spec.box_lo(j) + 0.5 * box_side;
    cubes.push_back(std::move(q));
  }

  std::vector<int> pos(static_cast<std::size_t>(n));
  for (double side = box_side; side >= h * (1.0 - 1e-12); side *= 0.5) {
    double stride = 0.5 * side;
    std::vector<int> lo_t(static_cast<std::size_t>(n)), hi_t(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      // lattice lo = box_lo + t * stride; keep cubes meeting the box interior
      double len = spec.box_hi(j) - spec.box_lo(j);
      lo_t[static_cast<std::size_t>(j)] = -1;
      hi_t[static_cast<std::size_t>(j)] = static_cast<int>(std::ceil(len / stride - 1.0 + 1e-9));
    }
    pos = lo_t;
    while (true) {
      Cube q;
      q.radius = 0.5 * side;
      q.center.resize(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) {
        std::size_t sj = static_cast<std::size_t>(j);
        q.center[sj] = spec.box_lo(j) + pos[sj] * stride + 0.5 * side;
      }
      if (cube_intersects_box(spec, q)) cubes.push_back(std::move(q));
      int j = 0;
      for (; j < n; ++j) {
        std::size_t sj = static_cast<std::size_t>(j);
        if (++pos[sj] <= hi_t[sj]) break;
        pos[sj] = lo_t[sj];
      }
      if (j == n) break;
    }
  }
  return CubeFamily(std::move(cubes), "dyadic-multiscale");
}

CubeFamily CubeFamily::explicit_list(std::vector<Cube> cubes, const GridSpec& spec) {
  if (cubes.empty()) throw admissibility_error("cube family must be nonempty");
  for (const Cube& q : cubes) {
    q.validate();
    if (q.dim() != spec.dim()) throw admissibility_error("cube family: dimension mismatch");
    if (!cube_intersects_box(spec, q))
      throw admissibility_error("cube family: every cube must intersect the grid box");
  }
  return CubeFamily(std::move(cubes), "explicit");
}

}  // namespace mixnorm
