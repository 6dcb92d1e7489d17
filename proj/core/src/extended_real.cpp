#include "denopt/extended_real.hpp"

#include <cmath>
#include <ostream>

namespace denopt {

ExtReal::ExtReal(double v) : state_(State::Finite), value_(v) {
  if (std::isnan(v)) throw std::domain_error("ExtReal: NaN is not a point of the extended real line");
  if (std::isinf(v)) {
    state_ = v > 0 ? State::PosInf : State::NegInf;
    value_ = 0.0;
  }
}

double ExtReal::value() const {
  if (state_ != State::Finite) throw std::domain_error("ExtReal: value() on an infinite state");
  return value_;
}

double ExtReal::as_double() const {
  switch (state_) {
    case State::NegInf: return -std::numeric_limits<double>::infinity();
    case State::PosInf: return std::numeric_limits<double>::infinity();
    default: return value_;
  }
}

ExtReal operator+(const ExtReal& a, const ExtReal& b) {
  if (a.finite() && b.finite()) return ExtReal(a.value_ + b.value_);
  if (a.state_ == b.state_) return a;
  if (a.finite()) return b;
  if (b.finite()) return a;
  throw std::domain_error("ExtReal: indeterminate sum of opposite infinities");
}

ExtReal operator-(const ExtReal& a) {
  if (a.is_pos_infinity()) return ExtReal::neg_infinity();
  if (a.is_neg_infinity()) return ExtReal::pos_infinity();
  return ExtReal(-a.value_);
}

ExtReal scale(double c, const ExtReal& x) {
  if (std::isnan(c)) throw std::domain_error("ExtReal: NaN scale factor");
  if (c == 0.0) return ExtReal(0.0);
  if (x.finite()) return ExtReal(c * x.value());
  const bool pos = x.is_pos_infinity() == (c > 0);
  return pos ? ExtReal::pos_infinity() : ExtReal::neg_infinity();
}

std::ostream& operator<<(std::ostream& os, const ExtReal& x) {
  if (x.is_neg_infinity()) return os << "-inf";
  if (x.is_pos_infinity()) return os << "+inf";
  return os << x.value();
}

}  // namespace denopt
