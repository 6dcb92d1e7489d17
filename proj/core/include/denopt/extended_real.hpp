#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>

namespace denopt {

// A point on the extended real line [-inf, +inf].
//
// Functional derivatives take the values -inf/+inf at the boundary of the
// nonnegative orthant (e.g. d/dp of p*log(p) at p = 0), and the membership
// and sign tests built on them need exact three-way state rather than IEEE
// infinity propagation through arithmetic.
class ExtReal {
 public:
  constexpr ExtReal() : state_(State::Finite), value_(0.0) {}

  // Implicit from double; IEEE infinities map onto the infinite states.
  // NaN is rejected.
  ExtReal(double v);

  static constexpr ExtReal neg_infinity() { return ExtReal(State::NegInf); }
  static constexpr ExtReal pos_infinity() { return ExtReal(State::PosInf); }

  constexpr bool finite() const { return state_ == State::Finite; }
  constexpr bool is_pos_infinity() const { return state_ == State::PosInf; }
  constexpr bool is_neg_infinity() const { return state_ == State::NegInf; }

  // Finite value; throws std::domain_error on an infinite state.
  double value() const;

  // Lossy view: infinite states become IEEE infinities.
  double as_double() const;

  friend constexpr bool operator==(const ExtReal& a, const ExtReal& b) {
    if (a.state_ != b.state_) return false;
    return a.state_ != State::Finite || a.value_ == b.value_;
  }
  friend constexpr bool operator<(const ExtReal& a, const ExtReal& b) {
    if (a.state_ == b.state_) {
      return a.state_ == State::Finite && a.value_ < b.value_;
    }
    if (a.state_ == State::NegInf) return true;
    if (b.state_ == State::PosInf) return a.state_ != State::PosInf;
    return false;
  }
  friend constexpr bool operator>(const ExtReal& a, const ExtReal& b) { return b < a; }
  friend constexpr bool operator<=(const ExtReal& a, const ExtReal& b) { return !(b < a); }
  friend constexpr bool operator>=(const ExtReal& a, const ExtReal& b) { return !(a < b); }

  // Throws std::domain_error on (+inf) + (-inf).
  friend ExtReal operator+(const ExtReal& a, const ExtReal& b);
  friend ExtReal operator-(const ExtReal& a);

 private:
  enum class State : std::uint8_t { NegInf, Finite, PosInf };
  constexpr explicit ExtReal(State s) : state_(s), value_(0.0) {}

  State state_;
  double value_;
};

// Multiplier scaling with the convention 0 * (+-inf) == 0: a constraint term
// with zero multiplier drops out of the Lagrangian regardless of its
// derivative limits.
ExtReal scale(double c, const ExtReal& x);

std::ostream& operator<<(std::ostream& os, const ExtReal& x);

}  // namespace denopt
