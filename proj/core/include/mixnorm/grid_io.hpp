#pragma once

#include <string>

#include <json.hpp>

#include "mixnorm/grid.hpp"

namespace mixnorm {

nlohmann::json grid_header_json(const GridSpec& spec);
GridSpec grid_spec_from_json(const nlohmann::json& j);

nlohmann::json grid_to_json(const GridFunction& f);
GridFunction grid_from_json(const nlohmann::json& j);

// ".json": one document with header and values. ".csv": "index,value" rows
// plus a sidecar "<path>.header.json" carrying the grid geometry.
void save_grid(const GridFunction& f, const std::string& path);
GridFunction load_grid(const std::string& path);

}  // namespace mixnorm
