#include "denopt/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace denopt {

Grid::Grid(double lower, double upper, std::vector<double> nodes, std::vector<double> weights) {
  if (!(lower < upper)) throw std::invalid_argument("Grid: lower must be < upper");
  if (nodes.size() < 2) throw std::invalid_argument("Grid: need at least 2 nodes");
  if (nodes.size() != weights.size())
    throw std::invalid_argument("Grid: nodes and weights must have equal length");
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (!std::isfinite(nodes[k])) throw std::invalid_argument("Grid: non-finite node");
    if (k > 0 && !(nodes[k - 1] < nodes[k]))
      throw std::invalid_argument("Grid: nodes must be strictly increasing");
    if (!(weights[k] > 0.0)) throw std::invalid_argument("Grid: weights must be positive");
  }
  if (nodes.front() < lower || nodes.back() > upper)
    throw std::invalid_argument("Grid: nodes must lie in [lower, upper]");
  data_ = std::make_shared<const Data>(Data{lower, upper, std::move(nodes), std::move(weights)});
}

Grid Grid::uniform_trapezoid(double lower, double upper, std::size_t node_count) {
  if (node_count < 2) throw std::invalid_argument("Grid: need at least 2 nodes");
  const double h = (upper - lower) / static_cast<double>(node_count - 1);
  std::vector<double> nodes(node_count);
  std::vector<double> weights(node_count, h);
  for (std::size_t k = 0; k < node_count; ++k) nodes[k] = lower + static_cast<double>(k) * h;
  nodes.back() = upper;  // guards against accumulated rounding in the last node
  weights.front() = 0.5 * h;
  weights.back() = 0.5 * h;
  return Grid(lower, upper, std::move(nodes), std::move(weights));
}

bool operator==(const Grid& a, const Grid& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->lower == b.data_->lower && a.data_->upper == b.data_->upper &&
         a.data_->nodes == b.data_->nodes && a.data_->weights == b.data_->weights;
}

double integrate(const Grid& grid, std::span<const double> values) {
  if (values.size() != grid.size())
    throw std::invalid_argument("integrate: values length does not match grid");
  double acc = 0.0;
  const auto w = grid.weights();
  for (std::size_t k = 0; k < values.size(); ++k) acc += w[k] * values[k];
  return acc;
}

}  // namespace denopt
