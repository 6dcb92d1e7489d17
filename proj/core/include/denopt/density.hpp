#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "denopt/grid.hpp"

namespace denopt {

// A probability density on a Grid: nonnegative node values whose quadrature
// integral is 1 within a normalization tolerance. Values may be exactly 0 on
// parts of the grid; no flooring is applied here.
class Density {
 public:
  static constexpr double kDefaultNormTol = 1e-9;

  // Throws std::invalid_argument on length mismatch or negative values and
  // std::domain_error when |integral - 1| exceeds norm_tol. A loose norm_tol
  // admits deliberately denormalized inputs (e.g. for certificate checks on
  // external data).
  Density(Grid grid, std::vector<double> values, double norm_tol = kDefaultNormTol);

  const Grid& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  double value(std::size_t k) const { return values_[k]; }
  std::size_t size() const { return values_.size(); }
  double integral() const { return integral_; }
  double min_value() const { return min_value_; }

 private:
  Grid grid_;
  std::vector<double> values_;
  double integral_;
  double min_value_;
};

// Rescales nonnegative values to unit integral. Throws std::domain_error when
// the input integrates to 0 and std::invalid_argument on negative entries.
Density normalize(const Grid& grid, std::span<const double> values);

// k-th raw moment: integral of z^k p(z).
double moment(const Density& p, unsigned k);

// Two-column export with header "z,p"; 17 significant digits.
void write_density_csv(std::ostream& os, const Density& p);

// Parses the z,p format and checks the nodes against `grid` (tolerance
// 1e-12 * max(1,|z|)). Throws std::invalid_argument on malformed input or a
// node mismatch; norm_tol is forwarded to the Density constructor.
Density read_density_csv(std::istream& is, const Grid& grid,
                         double norm_tol = Density::kDefaultNormTol);

}  // namespace denopt
