#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

namespace rmatch {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact element of the field Q(sqrt 2), stored as a + b*sqrt(2) with
// rational coefficients. The field is closed under +, -, *, /, so every
// quantity derived from sqrt(2)-weighted instances (profiles, ratios,
// game values, probabilities) stays exact end to end.
class Quad {
 public:
  Quad() = default;
  Quad(int v) : a_(v) {}  // NOLINT: implicit by design
  Quad(long v) : a_(v) {}
  Quad(long long v) : a_(v) {}
  Quad(const BigInt& v) : a_(v) {}
  Quad(Rational a) : a_(std::move(a)) {}
  Quad(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Quad sqrt2() { return Quad(Rational(0), Rational(1)); }

  // 2^e for any integer e (negative allowed).
  static Quad pow2(long e);

  // Exact value of the double (doubles are dyadic rationals).
  static Quad from_double(double v);

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  int sign() const;
  double to_double() const;
  std::string str() const;

  Quad operator-() const { return Quad(-a_, -b_); }

  Quad& operator+=(const Quad& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  Quad& operator-=(const Quad& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  Quad& operator*=(const Quad& o) {
    // (a + b r)(c + d r) = ac + 2bd + (ad + bc) r, r = sqrt 2
    Rational a = a_ * o.a_ + 2 * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }
  Quad& operator/=(const Quad& o);

  friend Quad operator+(Quad l, const Quad& r) { return l += r; }
  friend Quad operator-(Quad l, const Quad& r) { return l -= r; }
  friend Quad operator*(Quad l, const Quad& r) { return l *= r; }
  friend Quad operator/(Quad l, const Quad& r) { return l /= r; }

  friend bool operator==(const Quad& l, const Quad& r) {
    return l.a_ == r.a_ && l.b_ == r.b_;
  }
  friend std::strong_ordering operator<=>(const Quad& l, const Quad& r) {
    const int s = (l - r).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rational a_;  // rational part
  Rational b_;  // coefficient of sqrt(2)
};

std::ostream& operator<<(std::ostream& os, const Quad& q);

inline Quad abs(const Quad& q) { return q.sign() < 0 ? -q : q; }

}  // namespace rmatch
