#pragma once

#include <span>
#include <vector>

#include "denopt/density.hpp"
#include "denopt/functional.hpp"
#include "denopt/grid.hpp"

namespace denopt {

// Linear equality constraint: integral of phi(z) p(z) equals target.
struct LinearEqualityConstraint {
  std::vector<double> phi;  // phi sampled on the grid nodes
  double target = 0.0;
};

// Convex inequality constraint spec.value(p) <= 0; any bound is already
// absorbed into the value.
struct InequalityConstraint {
  FunctionalSpec spec;
};

// Objective + equality constraints + inequality constraints on one grid.
// The normalization constraint (integral of p equals 1) is implicit and
// always enforced as the (m+1)-th equality; it must not appear in
// `equalities`.
class ProblemSpec {
 public:
  ProblemSpec(Grid grid, FunctionalSpec objective,
              std::vector<LinearEqualityConstraint> equalities,
              std::vector<InequalityConstraint> inequalities);

  const Grid& grid() const { return grid_; }
  const FunctionalSpec& objective() const { return objective_; }
  const std::vector<LinearEqualityConstraint>& equalities() const { return equalities_; }
  const std::vector<InequalityConstraint>& inequalities() const { return inequalities_; }
  std::size_t equality_count() const { return equalities_.size(); }      // m
  std::size_t inequality_count() const { return inequalities_.size(); }  // n

 private:
  Grid grid_;
  FunctionalSpec objective_;
  std::vector<LinearEqualityConstraint> equalities_;
  std::vector<InequalityConstraint> inequalities_;
};

// Residuals of the m user equalities followed by the normalization residual
// (integral of p minus 1); length m+1.
std::vector<double> equality_residuals(const ProblemSpec& problem, std::span<const double> values);
std::vector<double> equality_residuals(const ProblemSpec& problem, const Density& p);

// Values of the n inequality functionals; feasible iff all <= 0.
std::vector<double> inequality_values(const ProblemSpec& problem, std::span<const double> values);
std::vector<double> inequality_values(const ProblemSpec& problem, const Density& p);

struct FeasibilityReport {
  bool feasible = false;
  std::vector<double> equality_residuals;  // m+1, last is normalization
  std::vector<double> inequality_values;   // n
  double max_abs_equality = 0.0;
  double max_inequality = 0.0;  // most positive inequality value (0 when n = 0)
  double tol_eq = 0.0;
  double tol_ineq = 0.0;
};

FeasibilityReport is_feasible(const ProblemSpec& problem, const Density& p,
                              double tol_eq = 1e-8, double tol_ineq = 1e-8);

}  // namespace denopt
