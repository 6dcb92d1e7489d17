#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace denopt {

// Quadrature discretization of a bounded interval: strictly increasing nodes
// plus positive weights, so that integrate(grid, f) realizes the weighted sum
// sum_k w_k f(z_k). Immutable after construction; copies share storage.
class Grid {
 public:
  Grid(double lower, double upper, std::vector<double> nodes, std::vector<double> weights);

  // Composite trapezoid rule on equally spaced nodes. Exact on affine
  // integrands; integrates the constant 1 to (upper - lower).
  static Grid uniform_trapezoid(double lower, double upper, std::size_t node_count);

  double lower() const { return data_->lower; }
  double upper() const { return data_->upper; }
  std::size_t size() const { return data_->nodes.size(); }
  double node(std::size_t k) const { return data_->nodes[k]; }
  double weight(std::size_t k) const { return data_->weights[k]; }
  std::span<const double> nodes() const { return data_->nodes; }
  std::span<const double> weights() const { return data_->weights; }

  // Samples a callable on the nodes.
  template <typename Fn>
  std::vector<double> sample(Fn&& fn) const {
    std::vector<double> out(size());
    for (std::size_t k = 0; k < size(); ++k) out[k] = fn(node(k));
    return out;
  }

  friend bool operator==(const Grid& a, const Grid& b);
  friend bool operator!=(const Grid& a, const Grid& b) { return !(a == b); }

 private:
  struct Data {
    double lower;
    double upper;
    std::vector<double> nodes;
    std::vector<double> weights;
  };
  std::shared_ptr<const Data> data_;
};

// sum_k w_k values_k. Throws std::invalid_argument on length mismatch.
double integrate(const Grid& grid, std::span<const double> values);

}  // namespace denopt
