#include "mixnorm/generators.hpp"

#include <cmath>
#include <random>

#include "mixnorm/oracles.hpp"

namespace mixnorm {

namespace {

// Uniform in [0, 1) from the raw engine output; avoids the
// implementation-defined std::uniform_real_distribution.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

Sampler draw_dyadic_step(std::mt19937_64& rng, const GridSpec& box) {
  int level = 2 + static_cast<int>(rng() % 2);  // 2 or 3
  int cells_per_axis = 1 << level;
  const int n = box.dim();
  std::size_t total = 1;
  for (int j = 0; j < n; ++j) total *= static_cast<std::size_t>(cells_per_axis);
  std::vector<double> vals(total);
  for (double& v : vals) v = uniform01(rng);
  std::vector<double> lo(static_cast<std::size_t>(n)), len(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    lo[static_cast<std::size_t>(j)] = box.box_lo(j);
    len[static_cast<std::size_t>(j)] = box.box_hi(j) - box.box_lo(j);
  }
  return [=](const std::vector<double>& x) {
    std::size_t flat = 0, stride = 1;
    for (std::size_t j = 0; j < x.size(); ++j) {
      double t = (x[j] - lo[j]) / len[j];
      if (t < 0.0 || t >= 1.0) return 0.0;
      flat += static_cast<std::size_t>(t * cells_per_axis) * stride;
      stride *= static_cast<std::size_t>(cells_per_axis);
    }
    return vals[flat];
  };
}

Sampler draw_tensor_step(std::mt19937_64& rng, const GridSpec& box) {
  const int n = box.dim();
  std::vector<std::function<double(double)>> factors;
  for (int j = 0; j < n; ++j) {
    int level = 2 + static_cast<int>(rng() % 2);
    int cells = 1 << level;
    std::vector<double> vals(static_cast<std::size_t>(cells));
    for (double& v : vals) v = uniform01(rng);
    double lo = box.box_lo(j), len = box.box_hi(j) - box.box_lo(j);
    factors.push_back([=](double x) {
      double t = (x - lo) / len;
      if (t < 0.0 || t >= 1.0) return 0.0;
      return vals[static_cast<std::size_t>(t * cells)];
    });
  }
  return tensor_sampler(std::move(factors));
}

Sampler draw_power_bump(std::mt19937_64& rng, const GridSpec& box) {
  const int n = box.dim();
  std::vector<double> center(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    double lo = box.box_lo(j), hi = box.box_hi(j);
    double quarter = 0.25 * (hi - lo);
    center[static_cast<std::size_t>(j)] = uniform(rng, lo + quarter, hi - quarter);
  }
  double gamma = uniform(rng, 0.25, 0.75);
  double amp = uniform(rng, 0.5, 1.5);
  const double cap = 1.0 / 32.0;  // fixed truncation radius, grid-independent
  Sampler base = power_radial_sampler(gamma, cap, std::move(center));
  std::vector<double> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    lo[static_cast<std::size_t>(j)] = box.box_lo(j);
    hi[static_cast<std::size_t>(j)] = box.box_hi(j);
  }
  return [=](const std::vector<double>& x) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j] < lo[j] || x[j] > hi[j]) return 0.0;
    }
    return amp * base(x);
  };
}

}  // namespace

nlohmann::json GeneratorSpec::to_json() const {
  return nlohmann::json{{"family", family},
                        {"count", count},
                        {"seed", seed},
                        {"grid", nlohmann::json{{"origin", grid.origin},
                                                {"spacing", grid.spacing},
                                                {"count", grid.count}}},
                        {"params", params}};
}

std::vector<Sampler> draw_functions(const GeneratorSpec& spec) {
  spec.grid.validate();
  if (spec.count < 1) throw admissibility_error("generator: count must be >= 1");
  std::mt19937_64 rng(spec.seed);
  std::vector<Sampler> out;
  out.reserve(static_cast<std::size_t>(spec.count));

  if (spec.family == "oracle-case") {
    // fixed deterministic list, cycled to the requested count
    std::vector<Sampler> base;
    Cube unit;
    unit.center.assign(static_cast<std::size_t>(spec.grid.dim()), 0.5);
    unit.radius = 0.5;
    base.push_back(indicator_sampler(unit));
    Cube big;
    big.center.assign(static_cast<std::size_t>(spec.grid.dim()), 0.0);
    big.radius = 1.0;
    base.push_back(indicator_sampler(big));
    base.push_back(power_radial_sampler(0.5, 1.0 / 32.0));
    if (spec.grid.dim() == 2) base.push_back(triangle_example().sampler);
    for (int i = 0; i < spec.count; ++i)
      out.push_back(base[static_cast<std::size_t>(i) % base.size()]);
    return out;
  }

  for (int i = 0; i < spec.count; ++i) {
    if (spec.family == "dyadic-step") {
      out.push_back(draw_dyadic_step(rng, spec.grid));
    } else if (spec.family == "tensor-step") {
      out.push_back(draw_tensor_step(rng, spec.grid));
    } else if (spec.family == "power-bump") {
      out.push_back(draw_power_bump(rng, spec.grid));
    } else {
      throw config_error("unknown generator family: " + spec.family);
    }
  }
  return out;
}

std::vector<GridFunction> generate_corpus(const GeneratorSpec& spec, const GridSpec& grid) {
  std::vector<Sampler> fns = draw_functions(spec);
  std::vector<GridFunction> out;
  out.reserve(fns.size());
  for (const Sampler& fn : fns) out.push_back(sample(fn, grid));
  return out;
}

std::vector<std::vector<GridFunction>> generate_tuple_corpus(const GeneratorSpec& spec,
                                                             const GridSpec& grid,
                                                             int tuple_size) {
  if (tuple_size < 1) throw admissibility_error("generator: tuple size must be >= 1");
  GeneratorSpec wide = spec;
  wide.count = spec.count * tuple_size;
  std::vector<Sampler> fns = draw_functions(wide);
  std::vector<std::vector<GridFunction>> out;
  out.reserve(static_cast<std::size_t>(spec.count));
  for (int i = 0; i < spec.count; ++i) {
    std::vector<GridFunction> tuple;
    tuple.reserve(static_cast<std::size_t>(tuple_size));
    for (int j = 0; j < tuple_size; ++j)
      tuple.push_back(sample(fns[static_cast<std::size_t>(i * tuple_size + j)], grid));
    out.push_back(std::move(tuple));
  }
  return out;
}

}  // namespace mixnorm
