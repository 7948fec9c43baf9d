#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rmatch/generators.hpp"
#include "rmatch/solvers.hpp"
#include "support/corpus.hpp"

#include <random>

using namespace rmatch;

namespace {

const Quad kSqrt2 = Quad::sqrt2();

ExplicitSystem not_good_system() {
  const ExplicitInstance inst = gen_not_good();
  return ExplicitSystem(inst.ground, inst.bases);
}

SolveOptions force_bipartite() {
  SolveOptions opt;
  opt.enumeration_cap = 0;
  return opt;
}

}  // namespace

TEST_CASE("cardinality-bounded optimum on the tight path") {
  const WeightedGraph g = gen_tight_path();
  const MatchingSystem sys(g);
  auto [s1, v1] = max_weight_at_most_k(sys, g.weights, 1);
  CHECK(s1 == ElemSet{1});
  CHECK(v1 == kSqrt2);
  auto [s2, v2] = max_weight_at_most_k(sys, g.weights, 2);
  CHECK(s2 == ElemSet{0, 2});
  CHECK(v2 == Quad(2));
  auto [s0, v0] = max_weight_at_most_k(sys, g.weights, 0);
  CHECK(s0.empty());
  CHECK(v0 == Quad(0));
}

TEST_CASE("profiles on the named instances") {
  const WeightedGraph fig1 = gen_tight_path();
  const OptProfile p = opt_profile(MatchingSystem(fig1), fig1.weights);
  CHECK(p.values == std::vector<Quad>{Quad(0), kSqrt2, Quad(2)});
  CHECK(p.witness(1) == ElemSet{1});
  CHECK(p.witness(2) == ElemSet{0, 2});
  CHECK(p.at(7) == Quad(2));  // saturates past r

  const WeightedGraph r2 = gen_tight_family(2);
  const OptProfile q =
      brute_force_profile(MatchingSystem(r2), r2.weights);
  CHECK(q.values == std::vector<Quad>{Quad(0), Quad(2), Quad(2) * kSqrt2});

  const auto single = make_graph(2, {{0, 1}}, {Quad(5)});
  const OptProfile s = opt_profile(MatchingSystem(single), single.weights);
  CHECK(s.values == std::vector<Quad>{Quad(0), Quad(5)});
}

TEST_CASE("bipartite profile equals enumeration") {
  const WeightedGraph fig1 = gen_tight_path();
  CHECK(bipartite_profile(fig1, fig1.weights).values ==
        brute_force_profile(MatchingSystem(fig1), fig1.weights).values);

  // 4-cycle with the two heavy edges opposite each other.
  const auto c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}},
                             {Quad(4), Quad(1), Quad(4), Quad(1)});
  const OptProfile p = bipartite_profile(c4, c4.weights);
  CHECK(p.values == std::vector<Quad>{Quad(0), Quad(4), Quad(8)});

  const auto empty = make_graph(3, {}, {});
  CHECK(bipartite_profile(empty, empty.weights).values ==
        std::vector<Quad>{Quad(0)});

  const auto triangle =
      make_graph(3, {{0, 1}, {1, 2}, {0, 2}}, {Quad(1), Quad(1), Quad(1)});
  CHECK_THROWS_AS(bipartite_profile(triangle, triangle.weights),
                  std::invalid_argument);
}

TEST_CASE("oracle equivalence on random bipartite instances") {
  const auto graphs = corpus::bipartite_family(1200, 91);
  int checked = 0;
  for (const auto& g : graphs) {
    if (g.edge_count() > 12 || checked >= 500) continue;
    ++checked;
    const MatchingSystem sys(g);
    const OptProfile brute = brute_force_profile(sys, g.weights);
    const OptProfile fast = bipartite_profile(g, g.weights);
    REQUIRE(fast.values == brute.values);
    CHECK(fast.is_concave());
    // Witnesses are valid optima of their cardinality.
    for (int k = 0; k <= fast.max_size(); ++k) {
      CHECK(sys.is_independent(fast.witness(k)));
      CHECK(static_cast<int>(fast.witness(k).size()) <= k);
      CHECK(g.weights.sum(fast.witness(k)) == fast.at(k));
    }
  }
  CHECK(checked == 500);
}

TEST_CASE("profiles of concave families are concave") {
  for (const auto& inst : corpus::good_family(60, 3)) {
    CHECK(brute_force_profile(*inst.sys, inst.weights).is_concave());
  }
}

TEST_CASE("lexicographic maximization on the tight path") {
  const WeightedGraph g = gen_tight_path();
  const MatchingSystem sys(g);
  const Weighting all_half({Quad(Rational(1, 2)), Quad(Rational(1, 2)),
                            Quad(Rational(1, 2))});
  CHECK(lex_max(sys, all_half) == ElemSet{0, 2});
  const Weighting mid_heavy(
      {Quad(Rational(1, 2)), Quad(1), Quad(Rational(1, 2))});
  CHECK(lex_max(sys, mid_heavy) == ElemSet{1});
}

TEST_CASE("lexicographic maximization on the counterexample system") {
  const ExplicitSystem sys = not_good_system();
  const Weighting witness = gen_not_good().weights;  // (2,2,2,1,1,1)
  CHECK(lex_max(sys, witness) == ElemSet{0, 1});  // the unique lex maximum
}

TEST_CASE("lex_max agrees with enumeration order on random systems") {
  std::mt19937_64 rng(37);
  for (const auto& inst : corpus::good_family(60, 29)) {
    const auto sets = enumerate_independent(*inst.sys, false);
    // random small weights to force plenty of ties
    std::vector<Quad> w;
    for (int e = 0; e < inst.sys->ground_size(); ++e)
      w.push_back(Quad(static_cast<long>(rng() % 4)));
    const Weighting weights(std::move(w));
    const ElemSet best = lex_max(*inst.sys, weights);
    for (const ElemSet& s : sets)
      CHECK(compare_lex_keys(best, s, weights) >= 0);
  }
}

TEST_CASE("lex_max truncations stay lexicographically maximal") {
  // The k heaviest elements of a lex-max set are lex-max among the
  // cardinality-k independent sets.
  std::mt19937_64 rng(53);
  for (const auto& inst : corpus::good_family(30, 41)) {
    std::vector<Quad> w;
    for (int e = 0; e < inst.sys->ground_size(); ++e)
      w.push_back(Quad::pow2(static_cast<long>(rng() % 7) - 3));
    const Weighting weights(std::move(w));
    const ElemSet best = lex_max(*inst.sys, weights);
    const auto sets = enumerate_independent(*inst.sys, false);
    for (int k = 1; k <= static_cast<int>(best.size()); ++k) {
      const ElemSet bk = top_k(best, weights, k);
      for (const ElemSet& s : sets) {
        if (static_cast<int>(s.size()) > k) continue;
        CHECK(compare_lex_keys(bk, s, weights) >= 0);
      }
    }
  }
}

TEST_CASE("bipartite lex path agrees with enumeration") {
  std::mt19937_64 rng(77);
  const auto graphs = corpus::bipartite_family(120, 67);
  for (const auto& g : graphs) {
    std::vector<Quad> w;
    for (int e = 0; e < g.edge_count(); ++e)
      w.push_back(Quad::pow2(static_cast<long>(rng() % 5) - 2));
    const Weighting weights(std::move(w));
    const MatchingSystem sys(g);
    const ElemSet via_enum = lex_max(sys, weights);
    const ElemSet via_matching = lex_max(sys, weights, force_bipartite());
    CHECK(compare_lex_keys(via_enum, via_matching, weights) == 0);
  }
}

TEST_CASE("bipartite paths handle large instances") {
  const WeightedGraph big = gen_tight_family(8);
  CHECK(big.edge_count() == 255);
  CHECK(big.n_vertices == 256);
  const MatchingSystem sys(big);
  const OptProfile p = opt_profile(sys, big.weights);
  CHECK(p.is_concave());
  CHECK(p.at(1) == Quad(2));
  CHECK_THROWS_AS(brute_force_profile(sys, big.weights), ResourceLimitError);
}

TEST_CASE("greedy") {
  const UniformMatroid u1(2, 1);
  const Weighting w({Quad(3), Quad(2)});
  CHECK(greedy(u1, w) == ElemSet{0});

  const WeightedGraph fig1 = gen_tight_path();
  CHECK(greedy(MatchingSystem(fig1), fig1.weights) == ElemSet{1});

  const ExplicitSystem sys = not_good_system();
  const ElemSet g = greedy(sys, gen_not_good().weights);
  // maximality: no single extension stays independent
  for (int e = 0; e < sys.ground_size(); ++e) {
    if (set_contains(g, e)) continue;
    CHECK_FALSE(sys.is_independent(set_union(g, ElemSet{e})));
  }
}

TEST_CASE("max_weight_set prefers cardinality on ties") {
  const WeightedGraph fig1 = gen_tight_path();
  std::vector<Quad> squared;
  for (const Quad& q : fig1.weights.values()) squared.push_back(q * q);
  const Weighting w(std::move(squared));  // (1, 2, 1): both matchings tie
  auto [s, v] = max_weight_set(MatchingSystem(fig1), w);
  CHECK(v == Quad(2));
  CHECK(s == ElemSet{0, 2});
  // bipartite path resolves the same tie the same way
  auto [sb, vb] = max_weight_set(MatchingSystem(fig1), w, force_bipartite());
  CHECK(vb == Quad(2));
  CHECK(sb == ElemSet{0, 2});
}
