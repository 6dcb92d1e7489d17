#include "denopt/density.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace denopt {

namespace {

void format17(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

}  // namespace

Density::Density(Grid grid, std::vector<double> values, double norm_tol)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.size())
    throw std::invalid_argument("Density: values length does not match grid");
  min_value_ = values_.empty() ? 0.0 : *std::min_element(values_.begin(), values_.end());
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("Density: non-finite value");
    if (v < 0.0) throw std::invalid_argument("Density: negative value");
  }
  integral_ = integrate(grid_, values_);
  if (std::abs(integral_ - 1.0) > norm_tol)
    throw std::domain_error("Density: integral deviates from 1 beyond tolerance");
}

Density normalize(const Grid& grid, std::span<const double> values) {
  if (values.size() != grid.size())
    throw std::invalid_argument("normalize: values length does not match grid");
  for (double v : values) {
    if (!std::isfinite(v) || v < 0.0)
      throw std::invalid_argument("normalize: values must be finite and nonnegative");
  }
  const double total = integrate(grid, values);
  if (!(total > 0.0)) throw std::domain_error("normalize: values integrate to 0");
  std::vector<double> scaled(values.begin(), values.end());
  for (double& v : scaled) v /= total;
  return Density(grid, std::move(scaled), 1e-6);
}

double moment(const Density& p, unsigned k) {
  const Grid& g = p.grid();
  double acc = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    acc += g.weight(i) * std::pow(g.node(i), static_cast<double>(k)) * p.value(i);
  return acc;
}

void write_density_csv(std::ostream& os, const Density& p) {
  std::string out = "z,p\n";
  out.reserve(40 * p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    format17(out, p.grid().node(k));
    out += ',';
    format17(out, p.value(k));
    out += '\n';
  }
  os << out;
}

Density read_density_csv(std::istream& is, const Grid& grid, double norm_tol) {
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("density csv: empty stream");
  // tolerate a BOM or surrounding whitespace in the header
  if (line.find("z,p") == std::string::npos)
    throw std::invalid_argument("density csv: missing 'z,p' header");
  std::vector<double> values;
  values.reserve(grid.size());
  std::size_t k = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("density csv: malformed row '" + line + "'");
    double z = 0.0, v = 0.0;
    try {
      z = std::stod(line.substr(0, comma));
      v = std::stod(line.substr(comma + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("density csv: unparsable row '" + line + "'");
    }
    if (k >= grid.size()) throw std::invalid_argument("density csv: more rows than grid nodes");
    const double tol = 1e-12 * std::max(1.0, std::abs(grid.node(k)));
    if (std::abs(z - grid.node(k)) > tol)
      throw std::invalid_argument("density csv: node mismatch at row " + std::to_string(k));
    values.push_back(v);
    ++k;
  }
  if (k != grid.size()) throw std::invalid_argument("density csv: fewer rows than grid nodes");
  return Density(grid, std::move(values), norm_tol);
}

}  // namespace denopt
