#include <fstream>
#include <nlohmann/json.hpp>

#include "lovol/chart.hpp"
#include "lovol/json_writer.hpp"

namespace lovol {

std::string grid_metric_to_json(const GridMetric& grid) {
  const Chart& c = grid.chart;
  JsonWriter w;
  w.begin_object();
  w.field("dim", c.dim).comma();
  w.key("lower").begin_array();
  for (int a = 0; a < c.dim; ++a) {
    if (a) w.comma();
    w.number(c.lower[a]);
  }
  w.end_array().comma();
  w.key("upper").begin_array();
  for (int a = 0; a < c.dim; ++a) {
    if (a) w.comma();
    w.number(c.upper[a]);
  }
  w.end_array().comma();
  w.key("resolution").begin_array();
  for (int a = 0; a < c.dim; ++a) {
    if (a) w.comma();
    w.number(c.resolution[a]);
  }
  w.end_array().comma();
  w.key("periodic").begin_array();
  for (int a = 0; a < c.dim; ++a) {
    if (a) w.comma();
    w.boolean(c.periodic[a]);
  }
  w.end_array().comma();
  w.key("components").number_array(grid.samples);
  w.end_object();
  return w.take();
}

void write_grid_metric(const GridMetric& grid, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw BadParameterError("cannot open " + path + " for writing");
  out << grid_metric_to_json(grid) << "\n";
  if (!out) throw BadParameterError("failed writing " + path);
}

GridMetric read_grid_metric(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BadParameterError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw BadParameterError("invalid grid metric JSON in " + path + ": " + e.what());
  }

  try {
    const int dim = j.at("dim").get<int>();
    if (dim < 1 || dim > kMaxDim)
      throw BadParameterError("grid metric dim out of range in " + path);
    Vec lower(dim), upper(dim);
    IVec res(dim);
    std::vector<bool> periodic(std::size_t(dim), false);
    for (int a = 0; a < dim; ++a) {
      lower[a] = j.at("lower").at(std::size_t(a)).get<double>();
      upper[a] = j.at("upper").at(std::size_t(a)).get<double>();
      res[a] = j.at("resolution").at(std::size_t(a)).get<int>();
      periodic[std::size_t(a)] = j.at("periodic").at(std::size_t(a)).get<bool>();
    }
    GridMetric grid;
    grid.chart = Chart(std::move(lower), std::move(upper), std::move(res), std::move(periodic));
    grid.samples = j.at("components").get<std::vector<double>>();
    const std::int64_t want = grid.chart.node_count() * grid.component_count();
    if (std::int64_t(grid.samples.size()) != want)
      throw BadParameterError("grid metric component count mismatch in " + path);
    return grid;
  } catch (const nlohmann::json::exception& e) {
    throw BadParameterError("grid metric schema error in " + path + ": " + e.what());
  }
}

}  // namespace lovol
