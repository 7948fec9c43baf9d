#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rmatch/generators.hpp"
#include "rmatch/io.hpp"
#include "rmatch/systems.hpp"
#include "support/corpus.hpp"

#include <random>

using namespace rmatch;

namespace {

ExplicitSystem not_good_system() {
  const ExplicitInstance inst = gen_not_good();
  return ExplicitSystem(inst.ground, inst.bases);
}

}  // namespace

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(make_graph(2, {{0, 0}}, {Quad(1)}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(2, {{0, 1}, {1, 0}}, {Quad(1), Quad(1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_graph(2, {{0, 2}}, {Quad(1)}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(2, {{0, 1}}, {Quad(-1)}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(2, {{0, 1}}, {}), std::invalid_argument);
}

TEST_CASE("bipartition") {
  CHECK(gen_tight_path().bipartition().has_value());
  const auto triangle =
      make_graph(3, {{0, 1}, {1, 2}, {0, 2}}, {Quad(1), Quad(1), Quad(1)});
  CHECK_FALSE(triangle.bipartition().has_value());
  CHECK(gen_tight_family(4).bipartition().has_value());  // a tree
}

TEST_CASE("matching independence on the tight path") {
  const MatchingSystem sys(gen_tight_path());
  CHECK(sys.is_independent_checked(ElemSet{1}));
  CHECK_FALSE(sys.is_independent_checked(ElemSet{0, 1}));
  CHECK(sys.is_independent_checked(ElemSet{0, 2}));
  CHECK(sys.is_independent_checked(ElemSet{}));
  CHECK_THROWS_AS(sys.is_independent_checked(ElemSet{3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(sys.is_independent_checked(ElemSet{-1}),
                  std::invalid_argument);
}

TEST_CASE("explicit system from the 2-extendible counterexample") {
  const ExplicitSystem sys = not_good_system();
  CHECK(sys.is_independent_checked(ElemSet{0, 1}));   // A
  CHECK(sys.is_independent_checked(ElemSet{4, 5}));
  CHECK_FALSE(sys.is_independent_checked(ElemSet{0, 1, 2}));
  const auto maximal = enumerate_independent(sys, true);
  CHECK(maximal.size() == 4);  // the four bases
  CHECK(std::find(maximal.begin(), maximal.end(), ElemSet{0, 1}) !=
        maximal.end());
  CHECK(std::find(maximal.begin(), maximal.end(), ElemSet{2, 3, 4, 5}) !=
        maximal.end());
}

TEST_CASE("explicit system normalizes dominated bases") {
  const ExplicitSystem sys(4, {{0}, {0, 1}, {2, 3}, {2, 3}});
  CHECK(sys.bases().size() == 2);
  const ExplicitSystem empty(3, {});
  CHECK(empty.is_independent_checked(ElemSet{}));
  CHECK_FALSE(empty.is_independent_checked(ElemSet{0}));
}

TEST_CASE("enumeration") {
  const MatchingSystem fig1(gen_tight_path());
  const auto maximal = enumerate_independent(fig1, true);
  CHECK(maximal == std::vector<ElemSet>{{0, 2}, {1}});
  const auto all = enumerate_independent(fig1, false);
  CHECK(all.size() == 5);  // {}, {0}, {0,2}, {1}, {2}

  const ExplicitSystem empty_ground(0, {});
  CHECK(enumerate_independent(empty_ground, true) ==
        std::vector<ElemSet>{{}});

  const UniformMatroid big(25, 3);
  CHECK_THROWS_AS(enumerate_independent(big, false), ResourceLimitError);
}

TEST_CASE("top_k") {
  const WeightedGraph g = gen_tight_path();
  const ElemSet all{0, 1, 2};
  CHECK(top_k(all, g.weights, 1) == ElemSet{1});
  CHECK(top_k(all, g.weights, 0) == ElemSet{});
  CHECK(top_k(all, g.weights, 5) == all);
  CHECK_THROWS_AS(top_k(all, g.weights, -1), std::invalid_argument);

  const Weighting equal({Quad(3), Quad(3)});
  CHECK(top_k(ElemSet{0, 1}, equal, 1) == ElemSet{0});  // tie by id
}

TEST_CASE("top_k nesting and diminishing gains") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    std::vector<Quad> w;
    for (int i = 0; i < n; ++i)
      w.push_back(Quad(static_cast<long>(rng() % 20)));
    const Weighting weights(std::move(w));
    ElemSet s;
    for (int i = 0; i < n; ++i)
      if (rng() % 2) s.push_back(i);
    Quad prev_gain(-1);
    for (int k = static_cast<int>(s.size()); k >= 1; --k) {
      const ElemSet small = top_k(s, weights, k - 1);
      const ElemSet large = top_k(s, weights, k);
      CHECK(is_subset(small, large));
      const Quad gain = weights.sum(large) - weights.sum(small);
      if (prev_gain.sign() >= 0) CHECK(gain >= prev_gain);
      prev_gain = gain;
    }
  }
}

TEST_CASE("b-matching with unit bounds is the matching system") {
  const auto triangle =
      make_graph(3, {{0, 1}, {1, 2}, {0, 2}}, {Quad(1), Quad(2), Quad(3)});
  const MatchingSystem matching(triangle);
  const BMatchingSystem unit(triangle, {1, 1, 1});
  CHECK(enumerate_independent(matching, false) ==
        enumerate_independent(unit, false));
  CHECK(enumerate_independent(matching, true) ==
        enumerate_independent(unit, true));
}

TEST_CASE("b-matching on a star") {
  // K_{1,3} with capacity 2 at the center: maximal sets are the 2-subsets.
  const auto star = make_graph(
      4, {{0, 1}, {0, 2}, {0, 3}}, {Quad(1), Quad(1), Quad(1)});
  const BMatchingSystem sys(star, {2, 1, 1, 1});
  const auto maximal = enumerate_independent(sys, true);
  CHECK(maximal == std::vector<ElemSet>{{0, 1}, {0, 2}, {1, 2}});
  CHECK_THROWS_AS(BMatchingSystem(star, {2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(BMatchingSystem(star, {2, 1, 1, -1}),
                  std::invalid_argument);
}

TEST_CASE("matroid intersection") {
  const auto u2 = std::make_shared<UniformMatroid>(4, 2);
  const auto u3 = std::make_shared<UniformMatroid>(4, 3);
  const MatroidIntersection sys(u2, u3);
  for (const ElemSet& s : enumerate_independent(sys, false))
    CHECK(s.size() <= 2);
  const auto maximal = enumerate_independent(sys, true);
  CHECK(maximal.size() == 6);  // all 2-subsets of a 4-set

  const auto small = std::make_shared<UniformMatroid>(3, 1);
  CHECK_THROWS_AS(MatroidIntersection(u2, small), std::invalid_argument);
}

TEST_CASE("matroid exchange axiom spot check") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 3 + static_cast<int>(rng() % 5);
    std::vector<int> block_of;
    for (int e = 0; e < m; ++e)
      block_of.push_back(static_cast<int>(rng() % 3));
    std::vector<int> caps{1 + static_cast<int>(rng() % 2),
                          1 + static_cast<int>(rng() % 2),
                          1 + static_cast<int>(rng() % 2)};
    const PartitionMatroid matroid(block_of, caps);
    const auto sets = enumerate_independent(matroid, false);
    for (const ElemSet& small : sets) {
      for (const ElemSet& large : sets) {
        if (large.size() <= small.size()) continue;
        bool extended = false;
        for (int e : set_difference(large, small)) {
          ElemSet ext = set_union(small, ElemSet{e});
          if (matroid.is_independent(ext)) {
            extended = true;
            break;
          }
        }
        CHECK(extended);
      }
    }
  }
}

TEST_CASE("downward closure across the corpus") {
  std::mt19937_64 rng(23);
  const auto instances = corpus::good_family(40, 17);
  int checked = 0;
  while (checked < 1000) {
    const auto& inst = instances[rng() % instances.size()];
    const auto sets = enumerate_independent(*inst.sys, false);
    const ElemSet& t = sets[rng() % sets.size()];
    ElemSet s;
    for (int e : t)
      if (rng() % 2) s.push_back(e);
    CHECK(inst.sys->is_independent(s));
    ++checked;
  }
}

TEST_CASE("instance JSON round trip preserves exact weights") {
  const WeightedGraph g1 = gen_tight_path();
  const Json j1 = instance_to_json(g1);
  const auto parsed = parse_instance(j1);
  const auto& g2 = std::get<WeightedGraph>(parsed);
  CHECK(g2.n_vertices == g1.n_vertices);
  CHECK(g2.edges == g1.edges);
  CHECK(g2.weights == g1.weights);
  CHECK(instance_to_json(g2) == j1);

  const ExplicitInstance lem = gen_not_good();
  const Json j2 = instance_to_json(lem);
  const auto parsed2 = parse_instance(j2);
  const auto& back = std::get<ExplicitInstance>(parsed2);
  CHECK(back.ground == lem.ground);
  CHECK(back.bases == lem.bases);
  CHECK(back.weights == lem.weights);

  // Large magnitudes survive via decimal strings.
  const Quad huge(Rational(BigInt("123456789012345678901234567890"), 7),
                  Rational(-3, BigInt("98765432109876543210")));
  CHECK(quad_from_json(quad_to_json(huge)) == huge);
}

TEST_CASE("generators") {
  const WeightedGraph r1 = gen_tight_family(1);
  CHECK(r1.n_vertices == 2);
  CHECK(r1.edge_count() == 1);
  CHECK(r1.weights[0] == Quad(2));
  const WeightedGraph r2 = gen_tight_family(2);
  CHECK(r2.weights.values() ==
        std::vector<Quad>{Quad(2), Quad::sqrt2(), Quad::sqrt2()});
  CHECK(gen_tight_family(8).edge_count() == 255);
  CHECK_THROWS_AS(gen_tight_family(0), std::invalid_argument);
  CHECK_THROWS_AS(gen_tight_family(13), std::invalid_argument);

  const WeightedGraph one_copy = gen_copies(1);
  const WeightedGraph fig1 = gen_tight_path();
  CHECK(one_copy.edges == fig1.edges);
  CHECK(one_copy.weights == fig1.weights);
  CHECK(gen_copies(3).n_vertices == 12);
  CHECK(gen_copies(3).edge_count() == 9);

  CHECK(gen_random(5, 0.0, WeightDist::uniform_int, 10, 1).edge_count() == 0);
  const WeightedGraph triangle =
      gen_random(3, 1.0, WeightDist::uniform_int, 10, 1);
  CHECK(triangle.edge_count() == 3);
  const WeightedGraph a = gen_random(8, 0.5, WeightDist::log_uniform, 64, 99);
  const WeightedGraph b = gen_random(8, 0.5, WeightDist::log_uniform, 64, 99);
  CHECK(a.edges == b.edges);
  CHECK(a.weights == b.weights);
  for (const Quad& w : a.weights.values()) {
    CHECK(w >= Quad(1));
    CHECK(w <= Quad(64));
  }
}

TEST_CASE("decimal rational parsing") {
  CHECK(parse_decimal_rational("0.3") == Rational(3, 10));
  CHECK(parse_decimal_rational("0.5") == Rational(1, 2));
  CHECK(parse_decimal_rational("2") == Rational(2));
  CHECK(parse_decimal_rational("-1.25") == Rational(-5, 4));
  CHECK(parse_decimal_rational("3/10") == Rational(3, 10));
  CHECK_THROWS_AS(parse_decimal_rational("1/0"), std::invalid_argument);
}
