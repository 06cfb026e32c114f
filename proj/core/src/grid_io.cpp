#include "mixnorm/grid_io.hpp"

#include <fstream>
#include <sstream>

namespace mixnorm {

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

nlohmann::json grid_header_json(const GridSpec& spec) {
  return nlohmann::json{{"dim", spec.dim()},
                        {"origin", spec.origin},
                        {"spacing", spec.spacing},
                        {"count", spec.count}};
}

GridSpec grid_spec_from_json(const nlohmann::json& j) {
  GridSpec spec;
  try {
    spec.origin = j.at("origin").get<std::vector<double>>();
    spec.spacing = j.at("spacing").get<std::vector<double>>();
    spec.count = j.at("count").get<std::vector<int>>();
    if (j.contains("dim") && j.at("dim").get<int>() != spec.dim())
      throw io_error("grid header: dim field disagrees with the axis arrays");
  } catch (const nlohmann::json::exception& e) {
    throw io_error(std::string("grid header: ") + e.what());
  }
  spec.validate();
  return spec;
}

nlohmann::json grid_to_json(const GridFunction& f) {
  nlohmann::json j = grid_header_json(f.spec());
  j["values"] = f.values();
  return j;
}

GridFunction grid_from_json(const nlohmann::json& j) {
  GridSpec spec = grid_spec_from_json(j);
  std::vector<double> vals;
  try {
    vals = j.at("values").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw io_error(std::string("grid values: ") + e.what());
  }
  return GridFunction(std::move(spec), std::move(vals));
}

void save_grid(const GridFunction& f, const std::string& path) {
  if (ends_with(path, ".csv")) {
    std::ofstream csv(path);
    if (!csv) throw io_error("cannot open for writing: " + path);
    csv << "index,value\n";
    csv.precision(17);
    for (std::size_t i = 0; i < f.size(); ++i) csv << i << "," << f.value(i) << "\n";
    if (!csv) throw io_error("write failed: " + path);
    std::ofstream hdr(path + ".header.json");
    if (!hdr) throw io_error("cannot open for writing: " + path + ".header.json");
    hdr << grid_header_json(f.spec()).dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw io_error("cannot open for writing: " + path);
  out << grid_to_json(f).dump() << "\n";
  if (!out) throw io_error("write failed: " + path);
}

GridFunction load_grid(const std::string& path) {
  if (ends_with(path, ".csv")) {
    std::ifstream hdr(path + ".header.json");
    if (!hdr) throw io_error("cannot open: " + path + ".header.json");
    nlohmann::json jh;
    try {
      hdr >> jh;
    } catch (const nlohmann::json::exception& e) {
      throw io_error(std::string("bad grid header: ") + e.what());
    }
    GridSpec spec = grid_spec_from_json(jh);
    std::ifstream csv(path);
    if (!csv) throw io_error("cannot open: " + path);
    std::string line;
    std::getline(csv, line);  // header row
    std::vector<double> vals(spec.cell_count(), 0.0);
    while (std::getline(csv, line)) {
      if (line.empty()) continue;
      std::istringstream row(line);
      std::size_t idx;
      char comma;
      double v;
      if (!(row >> idx >> comma >> v) || idx >= vals.size())
        throw io_error("bad csv row in " + path + ": " + line);
      vals[idx] = v;
    }
    return GridFunction(std::move(spec), std::move(vals));
  }
  std::ifstream in(path);
  if (!in) throw io_error("cannot open: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw io_error(std::string("bad grid file: ") + e.what());
  }
  return grid_from_json(j);
}

}  // namespace mixnorm
