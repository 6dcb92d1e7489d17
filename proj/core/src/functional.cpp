#include "denopt/functional.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace denopt {

namespace {

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

// Finite-difference spot check of a user-supplied (f, f') pair; the pair is
// the main configuration risk for divergence factories.
void check_scalar_consistency(const ScalarFunction& sf, const char* who) {
  static constexpr double pts[10] = {0.08, 0.2, 0.4, 0.7, 1.0, 1.4, 2.0, 3.0, 5.0, 8.0};
  for (double x : pts) {
    const double h = 1e-5 * (1.0 + x);
    const double fd = (sf.f(x + h) - sf.f(x - h)) / (2.0 * h);
    if (std::abs(fd - sf.df(x)) > 1e-6 * (1.0 + std::abs(sf.df(x))))
      throw std::invalid_argument(std::string(who) + ": f and its derivative are inconsistent");
  }
}

void require_reference_on_grid(const Grid& grid, const Density& ref, const char* who) {
  if (ref.grid() != grid) throw std::invalid_argument(std::string(who) + ": reference density on a different grid");
}

// Limit of g at +inf (or 0+), classified from a far sample. Used for
// derivative limits of swapped-argument f-divergences where no closed form
// is supplied.
ExtReal classify_limit(const std::function<double(double)>& g, double probe) {
  const double v = g(probe);
  if (std::isnan(v)) throw std::invalid_argument("scalar function: derivative limit is undefined");
  if (v > 1e10) return ExtReal::pos_infinity();
  if (v < -1e10) return ExtReal::neg_infinity();
  return ExtReal(v);
}

}  // namespace

ScalarFunction scalar_xlogx() {
  return ScalarFunction{
      [](double x) { return xlogx(x); },
      [](double x) { return std::log(x) + 1.0; },
      ExtReal::neg_infinity(),
      ExtReal::pos_infinity(),
  };
}

ScalarFunction scalar_square_shifted() {
  return ScalarFunction{
      [](double x) { return (x - 1.0) * (x - 1.0); },
      [](double x) { return 2.0 * (x - 1.0); },
      ExtReal(-2.0),
      ExtReal::pos_infinity(),
  };
}

ScalarFunction scalar_square() {
  return ScalarFunction{
      [](double x) { return x * x; },
      [](double x) { return 2.0 * x; },
      ExtReal(0.0),
      ExtReal::pos_infinity(),
  };
}

FunctionalSpec::FunctionalSpec(Parts parts) : parts_(std::move(parts)) {
  if (!parts_.value) throw std::invalid_argument("FunctionalSpec: missing value map");
  if (!parts_.derivative && !parts_.derivative_field)
    throw std::invalid_argument("FunctionalSpec: missing derivative map");
  if (!parts_.derivative_at_zero || !parts_.derivative_at_infinity)
    throw std::invalid_argument("FunctionalSpec: missing derivative boundary limits");
}

double FunctionalSpec::value(std::span<const double> values) const {
  if (values.size() != parts_.grid.size())
    throw std::invalid_argument("FunctionalSpec: values length does not match grid");
  return parts_.value(values);
}

ExtReal FunctionalSpec::derivative(double p_value, std::size_t node) const {
  if (!parts_.derivative)
    throw std::logic_error("FunctionalSpec: '" + parts_.name +
                           "' has a nonlocal derivative; use derivative_field");
  if (p_value < 0.0) throw std::domain_error("FunctionalSpec: derivative below p = 0");
  return parts_.derivative(p_value, node);
}

std::vector<ExtReal> FunctionalSpec::derivative_field(std::span<const double> values) const {
  if (values.size() != parts_.grid.size())
    throw std::invalid_argument("FunctionalSpec: values length does not match grid");
  if (parts_.derivative_field) return parts_.derivative_field(values);
  std::vector<ExtReal> out;
  out.reserve(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) out.push_back(parts_.derivative(values[k], k));
  return out;
}

FunctionalSpec FunctionalSpec::shifted(double offset) const {
  Parts parts = parts_;
  parts.value = [base = parts_.value, offset](std::span<const double> v) {
    return base(v) - offset;
  };
  return FunctionalSpec(std::move(parts));
}

PerturbationDirection::PerturbationDirection(Grid grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.size())
    throw std::invalid_argument("PerturbationDirection: values length does not match grid");
  const double total = integrate(grid_, values_);
  if (std::abs(total) > kIntegralTol)
    throw std::invalid_argument("PerturbationDirection: integral must vanish");
}

PerturbationDirection PerturbationDirection::recentered(const Grid& grid,
                                                        std::vector<double> values) {
  if (values.size() != grid.size())
    throw std::invalid_argument("PerturbationDirection: values length does not match grid");
  double weight_sum = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) weight_sum += grid.weight(k);
  const double mean = integrate(grid, values) / weight_sum;
  for (double& v : values) v -= mean;
  return PerturbationDirection(grid, std::move(values));
}

FunctionalSpec neg_shannon(Grid grid) {
  FunctionalSpec::Parts parts;
  parts.name = "neg_shannon";
  parts.grid = grid;
  parts.convexity = Convexity::StrictlyConvex;
  parts.value = [grid](std::span<const double> p) {
    double acc = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) acc += grid.weight(k) * xlogx(p[k]);
    return acc;
  };
  parts.derivative = [](double p, std::size_t) {
    return p > 0.0 ? ExtReal(std::log(p) + 1.0) : ExtReal::neg_infinity();
  };
  parts.derivative_at_zero = [](std::size_t) { return ExtReal::neg_infinity(); };
  parts.derivative_at_infinity = [](std::size_t) { return ExtReal::pos_infinity(); };
  return FunctionalSpec(std::move(parts));
}

FunctionalSpec relative_entropy_first(Grid grid, Density reference_q) {
  require_reference_on_grid(grid, reference_q, "relative_entropy_first");
  auto q = std::make_shared<const std::vector<double>>(reference_q.values().begin(),
                                                       reference_q.values().end());
  FunctionalSpec::Parts parts;
  parts.name = "kl_first";
  parts.grid = grid;
  parts.convexity = Convexity::StrictlyConvex;
  parts.reference = std::move(reference_q);
  parts.value = [grid, q](std::span<const double> p) {
    double acc = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (p[k] == 0.0) continue;
      if ((*q)[k] == 0.0)
        throw std::domain_error("kl_first: reference vanishes where the density is positive");
      acc += grid.weight(k) * p[k] * std::log(p[k] / (*q)[k]);
    }
    return acc;
  };
  parts.derivative = [q](double p, std::size_t k) {
    if ((*q)[k] == 0.0)
      throw std::domain_error("kl_first: derivative undefined where the reference vanishes");
    return p > 0.0 ? ExtReal(std::log(p / (*q)[k]) + 1.0) : ExtReal::neg_infinity();
  };
  parts.derivative_at_zero = [](std::size_t) { return ExtReal::neg_infinity(); };
  parts.derivative_at_infinity = [](std::size_t) { return ExtReal::pos_infinity(); };
  return FunctionalSpec(std::move(parts));
}

FunctionalSpec relative_entropy_second(Grid grid, Density reference_p) {
  require_reference_on_grid(grid, reference_p, "relative_entropy_second");
  auto p = std::make_shared<const std::vector<double>>(reference_p.values().begin(),
                                                       reference_p.values().end());
  FunctionalSpec::Parts parts;
  parts.name = "kl_second";
  parts.grid = grid;
  parts.convexity = Convexity::StrictlyConvex;
  parts.reference = std::move(reference_p);
  parts.value = [grid, p](std::span<const double> qv) {
    double acc = 0.0;
    for (std::size_t k = 0; k < qv.size(); ++k) {
      if ((*p)[k] == 0.0) continue;
      if (qv[k] == 0.0)
        throw std::domain_error("kl_second: density vanishes where the reference is positive");
      acc += grid.weight(k) * (*p)[k] * std::log((*p)[k] / qv[k]);
    }
    return acc;
  };
  parts.derivative = [p](double qv, std::size_t k) {
    if ((*p)[k] == 0.0) return ExtReal(0.0);
    return qv > 0.0 ? ExtReal(-(*p)[k] / qv) : ExtReal::neg_infinity();
  };
  parts.derivative_at_zero = [p](std::size_t k) {
    return (*p)[k] > 0.0 ? ExtReal::neg_infinity() : ExtReal(0.0);
  };
  parts.derivative_at_infinity = [](std::size_t) { return ExtReal(0.0); };
  return FunctionalSpec(std::move(parts));
}

namespace {

FunctionalSpec f_divergence_first_named(std::string name, Grid grid, ScalarFunction f,
                                        Density reference_q) {
  require_reference_on_grid(grid, reference_q, "f_divergence_first");
  check_scalar_consistency(f, "f_divergence_first");
  if (std::abs(f.f(1.0)) > 1e-12)
    throw std::invalid_argument("f_divergence_first: f(1) must be 0");
  auto q = std::make_shared<const std::vector<double>>(reference_q.values().begin(),
                                                       reference_q.values().end());
  auto fn = std::make_shared<const ScalarFunction>(std::move(f));
  FunctionalSpec::Parts parts;
  parts.name = std::move(name);
  parts.grid = grid;
  parts.convexity = Convexity::StrictlyConvex;
  parts.reference = std::move(reference_q);
  parts.value = [grid, q, fn](std::span<const double> p) {
    double acc = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if ((*q)[k] == 0.0) {
        if (p[k] > 0.0)
          throw std::domain_error("f_divergence: reference vanishes where the density is positive");
        continue;
      }
      acc += grid.weight(k) * (*q)[k] * fn->f(p[k] / (*q)[k]);
    }
    return acc;
  };
  parts.derivative = [q, fn](double p, std::size_t k) -> ExtReal {
    if ((*q)[k] == 0.0)
      throw std::domain_error("f_divergence: derivative undefined where the reference vanishes");
    if (p == 0.0) return fn->df_at_zero;
    return ExtReal(fn->df(p / (*q)[k]));
  };
  parts.derivative_at_zero = [fn](std::size_t) { return fn->df_at_zero; };
  parts.derivative_at_infinity = [fn](std::size_t) { return fn->df_at_infinity; };
  return FunctionalSpec(std::move(parts));
}

FunctionalSpec bregman_named(std::string name, Grid grid, ScalarFunction f, Density reference_q) {
  require_reference_on_grid(grid, reference_q, "bregman");
  check_scalar_consistency(f, "bregman");
  auto q = std::make_shared<const std::vector<double>>(reference_q.values().begin(),
                                                       reference_q.values().end());
  auto fn = std::make_shared<const ScalarFunction>(std::move(f));
  FunctionalSpec::Parts parts;
  parts.name = std::move(name);
  parts.grid = grid;
  parts.convexity = Convexity::StrictlyConvex;
  parts.reference = std::move(reference_q);
  parts.value = [grid, q, fn](std::span<const double> p) {
    double acc = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
      const double qk = (*q)[k];
      acc += grid.weight(k) * (fn->f(p[k]) - fn->f(qk) - fn->df(qk) * (p[k] - qk));
    }
    return acc;
  };
  parts.derivative = [q, fn](double p, std::size_t k) -> ExtReal {
    const double dq = fn->df((*q)[k]);
    if (p == 0.0) return fn->df_at_zero + ExtReal(-dq);
    return ExtReal(fn->df(p) - dq);
  };
  parts.derivative_at_zero = [q, fn](std::size_t k) {
    return fn->df_at_zero + ExtReal(-fn->df((*q)[k]));
  };
  parts.derivative_at_infinity = [q, fn](std::size_t k) {
    return fn->df_at_infinity + ExtReal(-fn->df((*q)[k]));
  };
  return FunctionalSpec(std::move(parts));
}

}  // namespace

FunctionalSpec f_divergence_first(Grid grid, ScalarFunction f, Density reference_q) {
  return f_divergence_first_named("f_div_first", std::move(grid), std::move(f),
                                  std::move(reference_q));
}

FunctionalSpec f_divergence_second(Grid grid, ScalarFunction f, Density reference_p) {
  require_reference_on_grid(grid, reference_p, "f_divergence_second");
  check_scalar_consistency(f, "f_divergence_second");
  if (std::abs(f.f(1.0)) > 1e-12)
    throw std::invalid_argument("f_divergence_second: f(1) must be 0");
  auto p = std::make_shared<const std::vector<double>>(reference_p.values().begin(),
                                                       reference_p.values().end());
  auto fn = std::make_shared<const ScalarFunction>(std::move(f));
  // Swapped-argument derivative g'(x) for g(x) = x f(1/x).
  auto swapped_df = [fn](double x) { return fn->f(1.0 / x) - fn->df(1.0 / x) / x; };
  // g'(0+) = lim_{y->inf} f(y) - y f'(y); g'(inf) = f(0) when f(0) is finite.
  const ExtReal at_zero = classify_limit([fn](double y) { return fn->f(y) - y * fn->df(y); }, 1e12);
  const ExtReal at_inf = classify_limit([fn](double y) { return fn->f(y); }, 0.0);
  FunctionalSpec::Parts parts;
  parts.name = "f_div_second";
  parts.grid = grid;
  parts.convexity = Convexity::StrictlyConvex;
  parts.reference = std::move(reference_p);
  parts.value = [grid, p, fn](std::span<const double> qv) {
    double acc = 0.0;
    for (std::size_t k = 0; k < qv.size(); ++k) {
      if (qv[k] == 0.0) {
        if ((*p)[k] > 0.0)
          throw std::domain_error("f_divergence: density vanishes where the reference is positive");
        continue;
      }
      acc += grid.weight(k) * qv[k] * fn->f((*p)[k] / qv[k]);
    }
    return acc;
  };
  parts.derivative = [p, fn, swapped_df, at_zero](double qv, std::size_t k) -> ExtReal {
    if ((*p)[k] == 0.0) return ExtReal(fn->f(0.0));
    if (qv == 0.0) return at_zero;
    return ExtReal(swapped_df(qv / (*p)[k]));
  };
  parts.derivative_at_zero = [p, fn, at_zero](std::size_t k) {
    return (*p)[k] > 0.0 ? at_zero : ExtReal(fn->f(0.0));
  };
  parts.derivative_at_infinity = [p, fn, at_inf](std::size_t k) {
    return (*p)[k] > 0.0 ? at_inf : ExtReal(fn->f(0.0));
  };
  return FunctionalSpec(std::move(parts));
}

FunctionalSpec bregman(Grid grid, ScalarFunction f, Density reference_q) {
  return bregman_named("bregman", std::move(grid), std::move(f), std::move(reference_q));
}

FunctionalSpec renyi_divergence_second(Grid grid, double alpha, Density reference_p) {
  require_reference_on_grid(grid, reference_p, "renyi_divergence_second");
  if (!(alpha > 0.0) || alpha == 1.0)
    throw std::invalid_argument("renyi_divergence_second: requires alpha > 0, alpha != 1");
  auto p = std::make_shared<const std::vector<double>>(reference_p.values().begin(),
                                                       reference_p.values().end());
  auto mass = [grid, p, alpha](std::span<const double> qv) {
    double acc = 0.0;
    for (std::size_t k = 0; k < qv.size(); ++k) {
      if ((*p)[k] == 0.0) continue;
      if (qv[k] == 0.0)
        throw std::domain_error("renyi_div: density vanishes where the reference is positive");
      acc += grid.weight(k) * std::pow((*p)[k], alpha) * std::pow(qv[k], 1.0 - alpha);
    }
    return acc;
  };
  FunctionalSpec::Parts parts;
  parts.name = "renyi_div";
  parts.grid = grid;
  parts.convexity = Convexity::StrictlyConvex;
  parts.reference = std::move(reference_p);
  parts.value = [mass, alpha](std::span<const double> qv) {
    const double m = mass(qv);
    if (!(m > 0.0)) throw std::domain_error("renyi_div: power integral vanishes");
    return std::log(m) / (alpha - 1.0);
  };
  // The kernel carries the factor 1/mass(q), which depends on the whole
  // density: only the field form is available.
  parts.derivative_field = [mass, p, alpha](std::span<const double> qv) {
    const double m = mass(qv);
    if (!(m > 0.0)) throw std::domain_error("renyi_div: power integral vanishes");
    std::vector<ExtReal> out;
    out.reserve(qv.size());
    for (std::size_t k = 0; k < qv.size(); ++k) {
      if ((*p)[k] == 0.0) {
        out.push_back(ExtReal(0.0));
      } else if (qv[k] == 0.0) {
        out.push_back(ExtReal::neg_infinity());
      } else {
        out.push_back(ExtReal(-std::pow((*p)[k] / qv[k], alpha) / m));
      }
    }
    return out;
  };
  parts.derivative_at_zero = [p](std::size_t k) {
    return (*p)[k] > 0.0 ? ExtReal::neg_infinity() : ExtReal(0.0);
  };
  parts.derivative_at_infinity = [](std::size_t) { return ExtReal(0.0); };
  return FunctionalSpec(std::move(parts));
}

FunctionalSpec power_functional(Grid grid, double alpha) {
  if (!(alpha > 1.0)) throw std::invalid_argument("power_functional: requires alpha > 1");
  FunctionalSpec::Parts parts;
  parts.name = "power";
  parts.grid = grid;
  parts.convexity = Convexity::StrictlyConvex;
  parts.value = [grid, alpha](std::span<const double> p) {
    double acc = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) acc += grid.weight(k) * std::pow(p[k], alpha);
    return acc;
  };
  parts.derivative = [alpha](double p, std::size_t) {
    return ExtReal(p > 0.0 ? alpha * std::pow(p, alpha - 1.0) : 0.0);
  };
  parts.derivative_at_zero = [](std::size_t) { return ExtReal(0.0); };
  parts.derivative_at_infinity = [](std::size_t) { return ExtReal::pos_infinity(); };
  return FunctionalSpec(std::move(parts));
}

FunctionalSpec affine_integral(Grid grid, std::vector<double> phi, double shift) {
  if (phi.size() != grid.size())
    throw std::invalid_argument("affine_integral: phi length does not match grid");
  for (double v : phi)
    if (!std::isfinite(v)) throw std::invalid_argument("affine_integral: non-finite phi");
  auto coeff = std::make_shared<const std::vector<double>>(std::move(phi));
  FunctionalSpec::Parts parts;
  parts.name = "affine";
  parts.grid = grid;
  parts.convexity = Convexity::Affine;
  parts.value = [grid, coeff, shift](std::span<const double> p) {
    double acc = -shift;
    for (std::size_t k = 0; k < p.size(); ++k) acc += grid.weight(k) * (*coeff)[k] * p[k];
    return acc;
  };
  parts.derivative = [coeff](double, std::size_t k) { return ExtReal((*coeff)[k]); };
  parts.derivative_at_zero = [coeff](std::size_t k) { return ExtReal((*coeff)[k]); };
  parts.derivative_at_infinity = [coeff](std::size_t k) { return ExtReal((*coeff)[k]); };
  return FunctionalSpec(std::move(parts));
}

FunctionalSpec chi_square(Grid grid, Density reference_q) {
  return f_divergence_first_named("chi2", std::move(grid), scalar_square_shifted(),
                                  std::move(reference_q));
}

FunctionalSpec bregman_square(Grid grid, Density reference_q) {
  return bregman_named("bregman_square", std::move(grid), scalar_square(),
                       std::move(reference_q));
}

double renyi_entropy(const Density& p, double alpha) {
  if (!(alpha > 0.0) || alpha == 1.0)
    throw std::invalid_argument("renyi_entropy: requires alpha > 0, alpha != 1");
  const Grid& g = p.grid();
  double acc = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k)
    acc += g.weight(k) * std::pow(p.value(k), alpha);
  if (!(acc > 0.0)) throw std::domain_error("renyi_entropy: power integral vanishes");
  return std::log(acc) / (1.0 - alpha);
}

double check_functional_derivative(const FunctionalSpec& spec, const Density& p,
                                   const PerturbationDirection& eta, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("check_functional_derivative: eps must be > 0");
  if (p.grid() != eta.grid())
    throw std::invalid_argument("check_functional_derivative: grid mismatch");
  const std::size_t n = p.size();
  std::vector<double> plus(n), minus(n);
  for (std::size_t k = 0; k < n; ++k) {
    plus[k] = p.value(k) + eps * eta.value(k);
    minus[k] = p.value(k) - eps * eta.value(k);
    if (plus[k] < 0.0 || minus[k] < 0.0)
      throw std::domain_error("check_functional_derivative: perturbed density leaves p >= 0");
  }
  const double central = (spec.value(plus) - spec.value(minus)) / (2.0 * eps);
  const auto field = spec.derivative_field(p.values());
  double inner = 0.0;
  const Grid& g = p.grid();
  for (std::size_t k = 0; k < n; ++k) {
    if (eta.value(k) == 0.0) continue;
    if (!field[k].finite())
      throw std::domain_error("check_functional_derivative: kernel infinite at a perturbed node");
    inner += g.weight(k) * field[k].value() * eta.value(k);
  }
  return std::abs(central - inner);
}

}  // namespace denopt
