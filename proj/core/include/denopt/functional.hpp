#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "denopt/density.hpp"
#include "denopt/extended_real.hpp"
#include "denopt/grid.hpp"

namespace denopt {

enum class Convexity { Affine, Convex, StrictlyConvex };

// A scalar convex function x -> f(x) on [0, inf) together with its derivative
// and the derivative's boundary limits. Factories that accept user-supplied
// pairs spot-check f against f' by central differences at construction.
struct ScalarFunction {
  std::function<double(double)> f;
  std::function<double(double)> df;
  ExtReal df_at_zero;      // lim_{x -> 0+} f'(x)
  ExtReal df_at_infinity;  // lim_{x -> +inf} f'(x)
};

// x log x with 0 log 0 = 0.
ScalarFunction scalar_xlogx();
// (x - 1)^2 (the chi-square generator).
ScalarFunction scalar_square_shifted();
// x^2.
ScalarFunction scalar_square();

// A functional F[p] of densities together with its pointwise derivative
// kernel dF/dp(z)(p(z), z) and the kernel's limits at p(z) = 0 and +inf.
//
// Most catalogue entries are integrals of node-local expressions, so the
// kernel is a pure map (p_value, node) -> extended real; those report
// local() == true. The Renyi divergence's kernel carries a factor depending
// on the whole density, so only derivative_field() is exact for it and the
// pointwise map is unavailable (local() == false).
class FunctionalSpec {
 public:
  struct Parts {
    std::string name;
    Grid grid;
    Convexity convexity = Convexity::Convex;
    std::function<double(std::span<const double>)> value;
    // Pointwise kernel; empty for nonlocal functionals.
    std::function<ExtReal(double, std::size_t)> derivative;
    std::function<ExtReal(std::size_t)> derivative_at_zero;
    std::function<ExtReal(std::size_t)> derivative_at_infinity;
    // Full kernel at a density; defaults to mapping `derivative` per node.
    std::function<std::vector<ExtReal>(std::span<const double>)> derivative_field;
    std::optional<Density> reference;
  };

  explicit FunctionalSpec(Parts parts);

  const std::string& name() const { return parts_.name; }
  const Grid& grid() const { return parts_.grid; }
  Convexity convexity() const { return parts_.convexity; }
  bool local() const { return static_cast<bool>(parts_.derivative); }
  const std::optional<Density>& reference() const { return parts_.reference; }

  double value(std::span<const double> values) const;
  double value(const Density& p) const { return value(p.values()); }

  // Pointwise kernel at p(z_k) = p_value. Throws std::logic_error when the
  // functional is nonlocal.
  ExtReal derivative(double p_value, std::size_t node) const;
  ExtReal derivative_at_zero(std::size_t node) const { return parts_.derivative_at_zero(node); }
  ExtReal derivative_at_infinity(std::size_t node) const {
    return parts_.derivative_at_infinity(node);
  }

  // Kernel evaluated at a full density; exact for every catalogue entry.
  std::vector<ExtReal> derivative_field(std::span<const double> values) const;
  std::vector<ExtReal> derivative_field(const Density& p) const {
    return derivative_field(p.values());
  }

  // Same functional with the value shifted by -offset (e.g. to absorb an
  // inequality bound); derivative and convexity class are unchanged.
  FunctionalSpec shifted(double offset) const;

 private:
  Parts parts_;
};

// A direction eta with zero quadrature integral, so p + eps*eta keeps unit
// mass.
class PerturbationDirection {
 public:
  static constexpr double kIntegralTol = 1e-10;

  PerturbationDirection(Grid grid, std::vector<double> values);
  // Subtracts the weighted mean so the integral vanishes exactly.
  static PerturbationDirection recentered(const Grid& grid, std::vector<double> values);

  const Grid& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  double value(std::size_t k) const { return values_[k]; }

 private:
  Grid grid_;
  std::vector<double> values_;
};

// --- Catalogue -------------------------------------------------------------

// Negative Shannon entropy: integral of p log p; kernel log p + 1.
FunctionalSpec neg_shannon(Grid grid);

// KL divergence D(P||Q) as a functional of the first argument p with fixed
// reference q; kernel log(p/q) + 1.
FunctionalSpec relative_entropy_first(Grid grid, Density reference_q);

// D(P||Q) as a functional of the second argument q with fixed reference p;
// kernel -p/q.
FunctionalSpec relative_entropy_second(Grid grid, Density reference_p);

// f-divergence of the first argument: integral of q f(p/q); kernel f'(p/q).
// Requires f(1) = 0 within 1e-12 and a consistent derivative.
FunctionalSpec f_divergence_first(Grid grid, ScalarFunction f, Density reference_q);

// f-divergence as a functional of the second argument q; kernel g'(q/p) with
// g(x) = x f(1/x).
FunctionalSpec f_divergence_second(Grid grid, ScalarFunction f, Density reference_p);

// Bregman divergence of f between p and fixed q; kernel f'(p) - f'(q).
FunctionalSpec bregman(Grid grid, ScalarFunction f, Density reference_q);

// Renyi divergence of order alpha as a functional of the second argument;
// nonlocal (see class comment). alpha > 0, alpha != 1.
FunctionalSpec renyi_divergence_second(Grid grid, double alpha, Density reference_p);

// Integral of p^alpha for alpha > 1; kernel alpha p^(alpha-1). Minimizing it
// maximizes the Renyi entropy of the same order.
FunctionalSpec power_functional(Grid grid, double alpha);

// Affine functional: integral of phi p minus shift; kernel phi(z).
FunctionalSpec affine_integral(Grid grid, std::vector<double> phi, double shift);

// Convenience wrappers used by the CLI names.
FunctionalSpec chi_square(Grid grid, Density reference_q);     // f = (x-1)^2
FunctionalSpec bregman_square(Grid grid, Density reference_q); // f = x^2

// H_alpha(p) = log(integral of p^alpha) / (1 - alpha); alpha > 0, alpha != 1.
double renyi_entropy(const Density& p, double alpha);

// |central difference of F along eta at step eps  -  integral of kernel*eta|.
// Requires p +- eps*eta to stay nonnegative (std::domain_error otherwise).
double check_functional_derivative(const FunctionalSpec& spec, const Density& p,
                                   const PerturbationDirection& eta, double eps);

}  // namespace denopt
