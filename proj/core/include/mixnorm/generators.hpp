#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "mixnorm/grid.hpp"

namespace mixnorm {

// Deterministic corpus description: the same seed draws the same continuum
// functions, so sampling them on a grid and on its refinement gives matched
// pairs for refinement-stability tests.
struct GeneratorSpec {
  std::string family = "dyadic-step";  // dyadic-step | tensor-step | power-bump | oracle-case
  GridSpec grid;
  int count = 10;
  std::uint64_t seed = 1;
  nlohmann::json params;  // family-specific knobs (oracle case name, ...)

  nlohmann::json to_json() const;
};

// Draw `count` continuum functions from the spec (grid-independent).
std::vector<Sampler> draw_functions(const GeneratorSpec& spec);

// Sample the drawn functions on a grid (normally spec.grid or its refinement).
std::vector<GridFunction> generate_corpus(const GeneratorSpec& spec, const GridSpec& grid);

// Tuples for vector-valued checks: `tuple_size` functions per instance.
std::vector<std::vector<GridFunction>> generate_tuple_corpus(const GeneratorSpec& spec,
                                                             const GridSpec& grid,
                                                             int tuple_size);

}  // namespace mixnorm
