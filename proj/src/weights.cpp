#include "rmatch/weights.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <stdexcept>

namespace rmatch {

using BigFloat = boost::multiprecision::cpp_bin_float_50;

Weighting::Weighting(std::vector<Quad> w) : w_(std::move(w)) {
  for (const Quad& q : w_)
    if (q.sign() < 0) throw std::invalid_argument("negative weight");
}

Quad Weighting::sum(std::span<const int> elems) const {
  Quad total;
  for (int e : elems) total += (*this)[e];
  return total;
}

bool Weighting::all_positive() const {
  return std::all_of(w_.begin(), w_.end(),
                     [](const Quad& q) { return q.sign() > 0; });
}

Weighting BitFunction::to_weighting() const {
  std::vector<Quad> w;
  w.reserve(exponents.size());
  for (int e : exponents) w.push_back(Quad::pow2(e));
  return Weighting(std::move(w));
}

std::vector<int> order_by_weight(std::span<const int> s, const Weighting& w) {
  std::vector<int> order(s.begin(), s.end());
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto cmp = w[a] <=> w[b];
    if (cmp != 0) return cmp > 0;
    return a < b;
  });
  return order;
}

ElemSet top_k(std::span<const int> s, const Weighting& w, int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  std::vector<int> order = order_by_weight(s, w);
  if (static_cast<size_t>(k) < order.size()) order.resize(k);
  std::sort(order.begin(), order.end());
  return order;
}

Quad top_k_weight(std::span<const int> s, const Weighting& w, int k) {
  return w.sum(top_k(s, w, k));
}

namespace {

constexpr int kFracBits = 40;

Rational grid_round(const BigFloat& v) {
  const BigFloat scaled = v * BigFloat(BigInt(1) << kFracBits);
  const BigInt num = round(scaled).convert_to<BigInt>();
  return Rational(num, BigInt(1) << kFracBits);
}

}  // namespace

Log2Parts log2_parts(const Quad& w) {
  if (w.sign() <= 0) throw std::invalid_argument("log2 of non-positive value");

  long q = 0;
  const double estimate = w.to_double();
  if (std::isfinite(estimate) && estimate > 0) {
    q = static_cast<long>(std::floor(std::log2(estimate)));
  } else {
    // magnitudes beyond double range: bit lengths give log2 within +-2
    const Rational& r =
        abs(Quad(w.rational_part())) >= abs(Quad(w.sqrt2_part()))
            ? w.rational_part()
            : w.sqrt2_part();
    const BigInt num = abs(numerator(r));
    const BigInt den = denominator(r);
    q = static_cast<long>(msb(num)) - static_cast<long>(msb(den));
  }
  while (Quad::pow2(q + 1) <= w) ++q;
  while (Quad::pow2(q) > w) --q;

  const Quad t = w / Quad::pow2(q);  // t in [1, 2)
  Log2Parts out;
  out.floor_log2 = q;
  if (t == Quad(1)) {
    out.frac = 0;
    out.exact = true;
    return out;
  }
  if (t == Quad::sqrt2()) {
    out.frac = Rational(1, 2);
    out.exact = true;
    return out;
  }

  static const BigFloat kLog2 = log(BigFloat(2));
  const BigFloat tf = BigFloat(t.rational_part()) +
                      BigFloat(t.sqrt2_part()) * sqrt(BigFloat(2));
  out.frac = grid_round(log(tf) / kLog2);
  if (out.frac < 0) out.frac = 0;
  const Rational one_minus(BigInt((BigInt(1) << kFracBits) - 1),
                           BigInt(1) << kFracBits);
  if (out.frac > one_minus) out.frac = one_minus;
  out.exact = false;
  return out;
}

}  // namespace rmatch
