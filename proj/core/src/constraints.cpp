#include "denopt/constraints.hpp"

#include <cmath>
#include <stdexcept>

namespace denopt {

ProblemSpec::ProblemSpec(Grid grid, FunctionalSpec objective,
                         std::vector<LinearEqualityConstraint> equalities,
                         std::vector<InequalityConstraint> inequalities)
    : grid_(std::move(grid)),
      objective_(std::move(objective)),
      equalities_(std::move(equalities)),
      inequalities_(std::move(inequalities)) {
  if (objective_.grid() != grid_)
    throw std::invalid_argument("ProblemSpec: objective defined on a different grid");
  if (!objective_.local())
    throw std::invalid_argument(
        "ProblemSpec: objective must have a pointwise derivative kernel");
  for (const auto& eq : equalities_) {
    if (eq.phi.size() != grid_.size())
      throw std::invalid_argument("ProblemSpec: equality phi length does not match grid");
    for (double v : eq.phi)
      if (!std::isfinite(v)) throw std::invalid_argument("ProblemSpec: non-finite equality phi");
    if (!std::isfinite(eq.target))
      throw std::invalid_argument("ProblemSpec: non-finite equality target");
  }
  for (const auto& ineq : inequalities_) {
    if (ineq.spec.grid() != grid_)
      throw std::invalid_argument("ProblemSpec: inequality defined on a different grid");
    if (!ineq.spec.local())
      throw std::invalid_argument(
          "ProblemSpec: inequality constraints must have pointwise derivative kernels");
  }
}

std::vector<double> equality_residuals(const ProblemSpec& problem,
                                       std::span<const double> values) {
  const Grid& g = problem.grid();
  if (values.size() != g.size())
    throw std::invalid_argument("equality_residuals: values length does not match grid");
  std::vector<double> out;
  out.reserve(problem.equality_count() + 1);
  for (const auto& eq : problem.equalities()) {
    double acc = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k) acc += g.weight(k) * eq.phi[k] * values[k];
    out.push_back(acc - eq.target);
  }
  out.push_back(integrate(g, values) - 1.0);
  return out;
}

std::vector<double> equality_residuals(const ProblemSpec& problem, const Density& p) {
  if (p.grid() != problem.grid())
    throw std::invalid_argument("equality_residuals: density on a different grid");
  return equality_residuals(problem, p.values());
}

std::vector<double> inequality_values(const ProblemSpec& problem,
                                      std::span<const double> values) {
  if (values.size() != problem.grid().size())
    throw std::invalid_argument("inequality_values: values length does not match grid");
  std::vector<double> out;
  out.reserve(problem.inequality_count());
  for (const auto& ineq : problem.inequalities()) out.push_back(ineq.spec.value(values));
  return out;
}

std::vector<double> inequality_values(const ProblemSpec& problem, const Density& p) {
  if (p.grid() != problem.grid())
    throw std::invalid_argument("inequality_values: density on a different grid");
  return inequality_values(problem, p.values());
}

FeasibilityReport is_feasible(const ProblemSpec& problem, const Density& p, double tol_eq,
                              double tol_ineq) {
  FeasibilityReport report;
  report.tol_eq = tol_eq;
  report.tol_ineq = tol_ineq;
  report.equality_residuals = equality_residuals(problem, p);
  report.inequality_values = inequality_values(problem, p);
  for (double r : report.equality_residuals)
    report.max_abs_equality = std::max(report.max_abs_equality, std::abs(r));
  if (!report.inequality_values.empty()) {
    report.max_inequality = report.inequality_values.front();
    for (double v : report.inequality_values)
      report.max_inequality = std::max(report.max_inequality, v);
  }
  report.feasible =
      report.max_abs_equality <= tol_eq && report.max_inequality <= tol_ineq;
  return report;
}

}  // namespace denopt
