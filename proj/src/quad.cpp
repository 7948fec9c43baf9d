#include "rmatch/quad.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rmatch {

using BigFloat = boost::multiprecision::cpp_bin_float_50;

Quad Quad::pow2(long e) {
  BigInt p = BigInt(1) << static_cast<unsigned>(e < 0 ? -e : e);
  return e >= 0 ? Quad(Rational(p)) : Quad(Rational(1, p));
}

Quad Quad::from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite value");
  return Quad(Rational(v));
}

int Quad::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: |a| vs |b|*sqrt2 decides, i.e. a^2 vs 2 b^2. Equality
  // would force a = b = 0, which was handled above.
  return a_ * a_ > 2 * b_ * b_ ? sa : sb;
}

Quad& Quad::operator/=(const Quad& o) {
  if (o.is_zero()) throw std::invalid_argument("division by zero");
  // 1 / (c + d r) = (c - d r) / (c^2 - 2 d^2)
  const Rational denom = o.a_ * o.a_ - 2 * o.b_ * o.b_;
  const Quad conj(o.a_ / denom, -o.b_ / denom);
  return *this *= conj;
}

double Quad::to_double() const {
  static const BigFloat kSqrt2 = sqrt(BigFloat(2));
  const BigFloat v = BigFloat(a_) + BigFloat(b_) * kSqrt2;
  return v.convert_to<double>();
}

std::string Quad::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Quad& q) {
  if (q.is_rational()) return os << q.rational_part();
  if (q.rational_part() == 0) return os << q.sqrt2_part() << "*sqrt2";
  return os << q.rational_part() << (q.sqrt2_part().sign() < 0 ? "" : "+")
            << q.sqrt2_part() << "*sqrt2";
}

}  // namespace rmatch
