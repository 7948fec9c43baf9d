#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rmatch/generators.hpp"
#include "rmatch/robust.hpp"
#include "support/corpus.hpp"

#include <cmath>
#include <random>

using namespace rmatch;

namespace {

const Quad kSqrt2 = Quad::sqrt2();
const Quad kInvSqrt2(Rational(0), Rational(1, 2));        // 1/sqrt2
const Quad kHalfPlus(Rational(1, 2), Rational(1, 4));     // (1+1/sqrt2)/2

RandomizedSolution uniform_pair(ElemSet a, ElemSet b) {
  RandomizedSolution lam;
  lam.support.push_back({std::move(a), Quad(Rational(1, 2))});
  lam.support.push_back({std::move(b), Quad(Rational(1, 2))});
  return lam;
}

}  // namespace

TEST_CASE("rounded weights") {
  const Weighting w({kSqrt2, Quad(1), Quad(4)});
  const Weighting quarter = rounded_weights(w, Rational(1, 4));
  CHECK(quarter[0] == Quad(1));                 // floor(1/2 - 1/4) = 0
  CHECK(quarter[1] == Quad(Rational(1, 2)));    // floor(0 - 1/4) = -1
  const Weighting zero = rounded_weights(w, Rational(0));
  CHECK(zero[2] == Quad(4));                    // exact power at x = 0

  CHECK_THROWS_AS(rounded_weights(Weighting({Quad(0)}), Rational(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(rounded_weights(w, Rational(3, 2)), std::invalid_argument);
}

TEST_CASE("rounded weights sandwich") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const double value = std::exp2(corpus::uniform01(rng) * 12.0 - 6.0);
    const Quad w = Quad::from_double(value);
    const Rational x(static_cast<long>(rng() % 1000), 1000);
    const Weighting rounded = rounded_weights(Weighting({w}), x);
    const double xr = x.convert_to<double>();
    const double lo = std::exp2(xr) * rounded[0].to_double();
    const double hi = std::exp2(xr + 1) * rounded[0].to_double();
    CHECK(w.to_double() >= lo * (1 - 1e-12));
    CHECK(w.to_double() < hi * (1 + 1e-12));
  }
}

TEST_CASE("squared weight solution") {
  const WeightedGraph fig1 = gen_tight_path();
  CHECK(squared_weight_solution(MatchingSystem(fig1), fig1.weights) ==
        ElemSet{0, 2});  // tie broken toward larger cardinality

  const auto single = make_graph(2, {{0, 1}}, {Quad(3)});
  CHECK(squared_weight_solution(MatchingSystem(single), single.weights) ==
        ElemSet{0});

  const auto spiky = make_graph(4, {{0, 1}, {1, 2}, {2, 3}},
                                {Quad(1), Quad(10), Quad(1)});
  CHECK(squared_weight_solution(MatchingSystem(spiky), spiky.weights) ==
        ElemSet{1});
}

TEST_CASE("deterministic robustness on the tight path") {
  const WeightedGraph g = gen_tight_path();
  const MatchingSystem sys(g);

  const RobustnessReport outer = robustness(sys, g.weights, ElemSet{0, 2});
  CHECK(outer.alpha == kInvSqrt2);
  CHECK(outer.argmin_k == 1);
  CHECK(outer.per_k[1].ratio == Quad(1));

  const RobustnessReport central = robustness(sys, g.weights, ElemSet{1});
  CHECK(central.alpha == kInvSqrt2);
  CHECK(central.argmin_k == 2);
  CHECK(central.per_k[0].ratio == Quad(1));

  CHECK_THROWS_AS(robustness(sys, g.weights, ElemSet{0, 1}),
                  std::invalid_argument);
}

TEST_CASE("the optimum witness is 1.0 at its own cardinality") {
  for (const auto& inst : corpus::good_family(15, 101)) {
    const OptProfile p = opt_profile(*inst.sys, inst.weights);
    const int r = p.max_size();
    if (r == 0) continue;
    const RobustnessReport rep = robustness(*inst.sys, inst.weights,
                                            p.witness(r));
    CHECK(rep.per_k[static_cast<size_t>(r) - 1].ratio == Quad(1));
  }
}

TEST_CASE("randomized robustness on the tight path") {
  const WeightedGraph g = gen_tight_path();
  const MatchingSystem sys(g);
  const RobustnessReport rep = randomized_robustness(
      sys, g.weights, uniform_pair(ElemSet{1}, ElemSet{0, 2}));
  CHECK(rep.alpha == kHalfPlus);

  // Point mass reproduces the deterministic report.
  RandomizedSolution point;
  point.support.push_back({ElemSet{0, 2}, Quad(1)});
  const RobustnessReport single = randomized_robustness(sys, g.weights, point);
  CHECK(single.alpha == robustness(sys, g.weights, ElemSet{0, 2}).alpha);

  RandomizedSolution broken;
  broken.support.push_back({ElemSet{1}, Quad(Rational(9, 10))});
  CHECK_THROWS_AS(randomized_robustness(sys, g.weights, broken),
                  std::invalid_argument);
  RandomizedSolution dependent;
  dependent.support.push_back({ElemSet{0, 1}, Quad(1)});
  CHECK_THROWS_AS(randomized_robustness(sys, g.weights, dependent),
                  std::invalid_argument);
}

TEST_CASE("rounding distribution on the tight path") {
  const WeightedGraph g = gen_tight_path();
  const MatchingSystem sys(g);
  const RandomizedSolution lam = randomized_robust(sys, g.weights);
  REQUIRE(lam.support.size() == 2);
  CHECK(lam.support[0].set == ElemSet{0, 2});
  CHECK(lam.support[0].prob == Quad(Rational(1, 2)));
  CHECK(lam.support[1].set == ElemSet{1});
  CHECK(lam.support[1].prob == Quad(Rational(1, 2)));
  CHECK(randomized_robustness(sys, g.weights, lam).alpha == kHalfPlus);
}

TEST_CASE("rounding distribution degenerate cases") {
  const auto flat = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}},
                               {Quad(2), Quad(2), Quad(2), Quad(2)});
  const MatchingSystem sys(flat);
  const RandomizedSolution lam = randomized_robust(sys, flat.weights);
  REQUIRE(lam.support.size() == 1);
  CHECK(lam.support[0].prob == Quad(1));
  CHECK(lam.support[0].set.size() == 2);  // a maximum-cardinality matching

  const auto zeros = make_graph(2, {{0, 1}}, {Quad(0)});
  CHECK_THROWS_AS(randomized_robust(MatchingSystem(zeros), zeros.weights),
                  std::invalid_argument);

  // Zero-weight elements are stripped and never appear in the support.
  const auto mixed = make_graph(4, {{0, 1}, {1, 2}, {2, 3}},
                                {Quad(3), Quad(0), Quad(3)});
  const RandomizedSolution mixed_lam =
      randomized_robust(MatchingSystem(mixed), mixed.weights);
  for (const auto& entry : mixed_lam.support)
    CHECK_FALSE(set_contains(entry.set, 1));
}

TEST_CASE("rounding distribution on the tightness family, n = 2") {
  const WeightedGraph g = gen_tight_family(2);
  const MatchingSystem sys(g);
  const RandomizedSolution lam = randomized_robust(sys, g.weights);
  REQUIRE(lam.support.size() == 2);
  CHECK(lam.support[0].prob == Quad(Rational(1, 2)));
  CHECK(lam.support[1].prob == Quad(Rational(1, 2)));
  const RobustnessReport rep = randomized_robustness(sys, g.weights, lam);
  // ratio at k = 1 is (2^0 + 2^(-1/2)) / 2
  CHECK(rep.per_k[0].ratio == kHalfPlus);
}

TEST_CASE("rounding distribution is invariant under doubling") {
  for (const auto& inst : corpus::good_family(20, 67)) {
    const RandomizedSolution base = randomized_robust(*inst.sys, inst.weights);
    for (const Quad& factor : {Quad(4), Quad(Rational(1, 2))}) {
      std::vector<Quad> scaled;
      for (const Quad& q : inst.weights.values()) scaled.push_back(q * factor);
      const RandomizedSolution shifted =
          randomized_robust(*inst.sys, Weighting(std::move(scaled)));
      REQUIRE(base.support.size() == shifted.support.size());
      for (std::size_t i = 0; i < base.support.size(); ++i) {
        CHECK(base.support[i].set == shifted.support[i].set);
        CHECK(base.support[i].prob == shifted.support[i].prob);
      }
    }
  }
}

TEST_CASE("rounding guarantee on the concave corpus") {
  const Quad threshold =
      Quad::from_double(1.0 / std::log(4.0)) - Quad::from_double(1e-9);
  for (const auto& inst : corpus::good_family(45, 7)) {
    const RandomizedSolution lam = randomized_robust(*inst.sys, inst.weights);
    const RobustnessReport rep =
        randomized_robustness(*inst.sys, inst.weights, lam);
    CHECK(rep.alpha >= threshold);
    // support stays within |E|+1
    CHECK(lam.support.size() <=
          static_cast<size_t>(inst.sys->ground_size()) + 1);
  }
}

TEST_CASE("all-zero weights give ratio 1 everywhere") {
  const auto g = make_graph(4, {{0, 1}, {2, 3}}, {Quad(0), Quad(0)});
  const MatchingSystem sys(g);
  const RobustnessReport rep = robustness(sys, g.weights, ElemSet{0});
  CHECK(rep.alpha == Quad(1));
  CHECK(rep.argmin_k == 0);
  for (const auto& row : rep.per_k) CHECK(row.ratio == Quad(1));
}

TEST_CASE("priority values") {
  const WeightedGraph g = gen_tight_path();
  PriorityDistribution half;
  half.mass = {{1, Quad(Rational(1, 2))}, {2, Quad(Rational(1, 2))}};
  CHECK(priority_value(ElemSet{0, 2}, g.weights, half) ==
        Quad(Rational(3, 2)));
  CHECK(priority_value(ElemSet{1}, g.weights, half) == kSqrt2);

  PriorityDistribution point;
  point.mass = {{2, Quad(1)}};
  CHECK(priority_value(ElemSet{0, 2}, g.weights, point) == Quad(2));
}

TEST_CASE("priority best response from the support") {
  const WeightedGraph g = gen_tight_path();
  const MatchingSystem sys(g);
  const RandomizedSolution lam = randomized_robust(sys, g.weights);

  PriorityDistribution delta1;
  delta1.mass = {{1, Quad(1)}};
  CHECK(priority_best_in_support(lam, g.weights, delta1) == ElemSet{1});

  PriorityDistribution delta2;
  delta2.mass = {{2, Quad(1)}};
  CHECK(priority_best_in_support(lam, g.weights, delta2) == ElemSet{0, 2});

  PriorityDistribution half;
  half.mass = {{1, Quad(Rational(1, 2))}, {2, Quad(Rational(1, 2))}};
  CHECK(priority_best_in_support(lam, g.weights, half) == ElemSet{0, 2});

  RandomizedSolution empty;
  CHECK_THROWS_AS(priority_best_in_support(empty, g.weights, half),
                  std::invalid_argument);
}

TEST_CASE("priority coefficient conversions") {
  const auto [mu, scale] = priorities_to_mu({Quad(2), Quad(1)});
  CHECK(scale == Quad(2));
  REQUIRE(mu.mass.size() == 2);
  CHECK(mu.mass[0] == std::pair<int, Quad>{1, Quad(Rational(1, 2))});
  CHECK(mu.mass[1] == std::pair<int, Quad>{2, Quad(Rational(1, 2))});

  const auto [flat_mu, flat_scale] =
      priorities_to_mu({Quad(1), Quad(1), Quad(1)});
  CHECK(flat_scale == Quad(1));
  REQUIRE(flat_mu.mass.size() == 1);
  CHECK(flat_mu.mass[0] == std::pair<int, Quad>{3, Quad(1)});

  PriorityDistribution delta1;
  delta1.mass = {{1, Quad(1)}};
  CHECK(mu_to_priorities(delta1) == std::vector<Quad>{Quad(1)});

  CHECK_THROWS_AS(priorities_to_mu({Quad(1), Quad(2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(priorities_to_mu({Quad(0)}), std::invalid_argument);
}

TEST_CASE("priority round trip and objective identity") {
  std::mt19937_64 rng(3);
  const WeightedGraph g = gen_tight_path();
  for (int trial = 0; trial < 50; ++trial) {
    // random non-increasing positive c
    std::vector<Quad> c;
    long level = 10 + static_cast<long>(rng() % 10);
    for (int i = 0; i < 4; ++i) {
      c.push_back(Quad(level));
      level -= static_cast<long>(rng() % 4);
      if (level < 0) level = 0;
    }
    if (c.front().is_zero()) continue;
    const auto [mu, scale] = priorities_to_mu(c);
    // f(M) = sum_i c_i w_{e_i} over the sorted edges equals the converted
    // objective scale * sum_k mu_k w(M_k).
    for (const ElemSet& m :
         {ElemSet{}, ElemSet{1}, ElemSet{0, 2}, ElemSet{0}}) {
      const std::vector<int> order = order_by_weight(m, g.weights);
      Quad direct;
      for (std::size_t i = 0; i < order.size() && i < c.size(); ++i)
        direct += c[i] * g.weights[order[i]];
      CHECK(direct == scale * priority_value(m, g.weights, mu));
    }
    // mu -> c -> mu is the identity up to scale
    const std::vector<Quad> back = mu_to_priorities(mu);
    const auto [mu2, scale2] = priorities_to_mu(back);
    CHECK(scale2 == Quad(1));
    CHECK(mu2.mass == mu.mass);
  }
}

TEST_CASE("best-response guarantee against sampled cardinality priors") {
  std::mt19937_64 rng(13);
  const Quad threshold =
      Quad::from_double(1.0 / std::log(4.0)) - Quad::from_double(1e-9);
  for (const auto& inst : corpus::good_family(12, 301)) {
    const RandomizedSolution lam = randomized_robust(*inst.sys, inst.weights);
    const auto sets = enumerate_independent(*inst.sys, false);
    const int r = opt_profile(*inst.sys, inst.weights).max_size();
    if (r == 0) continue;
    for (int trial = 0; trial < 10; ++trial) {
      PriorityDistribution mu;
      Quad total;
      for (int k = 1; k <= r; ++k) {
        const long mass = static_cast<long>(rng() % 5);
        if (mass > 0) {
          mu.mass.emplace_back(k, Quad(mass));
          total += Quad(mass);
        }
      }
      if (mu.mass.empty()) continue;
      for (auto& [k, p] : mu.mass) p = p / total;

      const ElemSet best = priority_best_in_support(lam, inst.weights, mu);
      Quad brute;
      for (const ElemSet& s : sets) {
        const Quad v = priority_value(s, inst.weights, mu);
        if (v > brute) brute = v;
      }
      CHECK(priority_value(best, inst.weights, mu) >= threshold * brute);
    }
  }
}
