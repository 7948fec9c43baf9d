#include "rmatch/generators.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <random>
#include <stdexcept>

namespace rmatch {

using BigFloat = boost::multiprecision::cpp_bin_float_50;

WeightedGraph gen_tight_path() {
  return make_graph(4, {{0, 1}, {1, 2}, {2, 3}},
                    {Quad(1), Quad::sqrt2(), Quad(1)});
}

namespace {

// 2^(num/den) as a Quad: exact when the exponent is a multiple of 1/2,
// otherwise a dyadic approximation accurate to 2^-60.
Quad pow2_exact_or_close(long num, long den) {
  if (num % den == 0) return Quad::pow2(num / den);
  if ((2 * num) % den == 0) {
    const long half_exp = 2 * num / den;  // odd
    return Quad::pow2((half_exp - 1) / 2) * Quad::sqrt2();
  }
  const BigFloat value =
      exp(BigFloat(num) / BigFloat(den) * log(BigFloat(2)));
  const BigFloat scaled = value * BigFloat(BigInt(1) << 60);
  return Quad(Rational(round(scaled).convert_to<BigInt>(), BigInt(1) << 60));
}

}  // namespace

WeightedGraph gen_tight_family(int n) {
  if (n < 1 || n > 12)
    throw std::invalid_argument("tight-family parameter must lie in 1..12");
  std::vector<std::pair<int, int>> edges;
  std::vector<Quad> weights;
  for (int k = 0; k < n; ++k) {
    const int step = 1 << k;
    const Quad w = pow2_exact_or_close(n - k, n);
    for (int i = 0; i < step; ++i) {
      edges.emplace_back(i, i + step);
      weights.push_back(w);
    }
  }
  return make_graph(1 << n, std::move(edges), std::move(weights));
}

WeightedGraph gen_copies(int K) {
  if (K < 1) throw std::invalid_argument("copy count must be positive");
  std::vector<std::pair<int, int>> edges;
  std::vector<Quad> weights;
  for (int c = 0; c < K; ++c) {
    const int base = 4 * c;
    edges.emplace_back(base + 0, base + 1);
    weights.push_back(Quad(1));
    edges.emplace_back(base + 1, base + 2);
    weights.push_back(Quad::sqrt2());
    edges.emplace_back(base + 2, base + 3);
    weights.push_back(Quad(1));
  }
  return make_graph(4 * K, std::move(edges), std::move(weights));
}

ExplicitInstance gen_not_good() {
  ExplicitInstance inst;
  inst.ground = 6;  // 0=a1, 1=a2, 2=b1, 3=b2, 4=b3, 5=b4
  inst.bases = {{0, 1}, {2, 3, 4, 5}, {0, 4, 5}, {1, 4, 5}};
  inst.weights = Weighting(
      {Quad(2), Quad(2), Quad(2), Quad(1), Quad(1), Quad(1)});
  return inst;
}

WeightedGraph gen_random(int n_vertices, double edge_prob, WeightDist dist,
                         int W, std::uint64_t seed) {
  if (n_vertices < 0) throw std::invalid_argument("negative vertex count");
  if (edge_prob < 0 || edge_prob > 1)
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  if (W < 1) throw std::invalid_argument("weight bound must be positive");

  std::mt19937_64 rng(seed);
  const auto uniform01 = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };

  std::vector<std::pair<int, int>> edges;
  std::vector<Quad> weights;
  for (int u = 0; u < n_vertices; ++u) {
    for (int v = u + 1; v < n_vertices; ++v) {
      if (uniform01() >= edge_prob) continue;
      edges.emplace_back(u, v);
      if (dist == WeightDist::uniform_int) {
        weights.push_back(
            Quad(1 + static_cast<long>(rng() % static_cast<std::uint64_t>(W))));
      } else {
        const double exponent = uniform01() * std::log2(static_cast<double>(W));
        weights.push_back(Quad::from_double(std::exp2(exponent)));
      }
    }
  }
  return make_graph(n_vertices, std::move(edges), std::move(weights));
}

}  // namespace rmatch
