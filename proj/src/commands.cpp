#include "rmatch/commands.hpp"

#include "rmatch/certify.hpp"
#include "rmatch/game.hpp"
#include "rmatch/merge.hpp"
#include "rmatch/theory.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rmatch::cmd {

namespace {

std::map<std::string, std::string> parse_kv(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("expected key=value in generator params");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

}  // namespace

Instance generate(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string params =
      colon == std::string::npos ? "" : spec.substr(colon + 1);

  if (name == "tight") return gen_tight_path();
  if (name == "notgood") return gen_not_good();
  if (name == "tightfamily") return gen_tight_family(std::stoi(params));
  if (name == "copies") return gen_copies(std::stoi(params));
  if (name == "random") {
    auto kv = parse_kv(params);
    const int n = kv.count("n") ? std::stoi(kv["n"]) : 8;
    const double p = kv.count("p") ? std::stod(kv["p"]) : 0.5;
    const int w = kv.count("W") ? std::stoi(kv["W"]) : 64;
    const std::uint64_t seed = kv.count("seed") ? std::stoull(kv["seed"]) : 0;
    WeightDist dist = WeightDist::log_uniform;
    if (kv.count("dist")) {
      if (kv["dist"] == "uniform")
        dist = WeightDist::uniform_int;
      else if (kv["dist"] == "logu")
        dist = WeightDist::log_uniform;
      else
        throw std::invalid_argument("unknown weight distribution: " +
                                    kv["dist"]);
    }
    return gen_random(n, p, dist, w, seed);
  }
  throw std::invalid_argument("unknown generator: " + name);
}

Loaded load(const Options& opt) {
  Instance instance = [&]() -> Instance {
    if (opt.instance_path) {
      std::ifstream in(*opt.instance_path);
      if (!in)
        throw std::invalid_argument("cannot open instance file: " +
                                    *opt.instance_path);
      Json j;
      in >> j;
      return parse_instance(j);
    }
    if (opt.gen) return generate(*opt.gen);
    throw std::invalid_argument("provide --instance or --gen");
  }();

  Loaded loaded{std::move(instance), nullptr, {}};
  if (const auto* g = std::get_if<WeightedGraph>(&loaded.instance)) {
    loaded.sys = std::make_shared<MatchingSystem>(*g);
    loaded.weights = g->weights;
  } else {
    const auto& inst = std::get<ExplicitInstance>(loaded.instance);
    loaded.sys = std::make_shared<ExplicitSystem>(inst.ground, inst.bases);
    loaded.weights = inst.weights;
  }
  return loaded;
}

Json robustness_to_json(const RobustnessReport& rep) {
  Json per_k = Json::array();
  for (const auto& row : rep.per_k) {
    per_k.push_back(Json{{"k", row.k},
                         {"achieved", row.achieved.to_double()},
                         {"opt", row.opt.to_double()},
                         {"ratio", row.ratio.to_double()}});
  }
  return Json{{"alpha", rep.alpha.to_double()},
              {"alpha_exact", quad_to_json(rep.alpha)},
              {"argmin_k", rep.argmin_k},
              {"per_k", per_k}};
}

Json run_gen(const Options& opt) {
  if (!opt.gen) throw std::invalid_argument("gen requires --gen");
  const Instance instance = generate(*opt.gen);
  if (const auto* g = std::get_if<WeightedGraph>(&instance))
    return instance_to_json(*g);
  return instance_to_json(std::get<ExplicitInstance>(instance));
}

Json run_solve(const Loaded& inst, const Options& opt) {
  const int k = opt.k >= 0 ? opt.k : inst.sys->ground_size();
  const auto [set, value] = max_weight_at_most_k(*inst.sys, inst.weights, k);
  return Json{{"k", k},
              {"set", set},
              {"value", value.to_double()},
              {"value_exact", quad_to_json(value)}};
}

Json run_profile(const Loaded& inst) {
  const OptProfile p = opt_profile(*inst.sys, inst.weights);
  Json opt = Json::array();
  Json opt_exact = Json::array();
  Json witnesses = Json::array();
  for (int k = 0; k <= p.max_size(); ++k) {
    opt.push_back(p.values[static_cast<size_t>(k)].to_double());
    opt_exact.push_back(quad_to_json(p.values[static_cast<size_t>(k)]));
    witnesses.push_back(p.witnesses[static_cast<size_t>(k)]);
  }
  return Json{{"r", p.max_size()},
              {"opt", opt},
              {"opt_exact", opt_exact},
              {"witnesses", witnesses}};
}

Json run_robust(const Loaded& inst) {
  const ElemSet set = squared_weight_solution(*inst.sys, inst.weights);
  Json j = robustness_to_json(robustness(*inst.sys, inst.weights, set));
  j["set"] = set;
  return j;
}

Json run_randomized(const Loaded& inst) {
  const RandomizedSolution lam = randomized_robust(*inst.sys, inst.weights);
  Json j =
      robustness_to_json(randomized_robustness(*inst.sys, inst.weights, lam));
  Json support = Json::array();
  for (const auto& entry : lam.support) {
    if (!entry.prob.is_rational())
      throw std::logic_error("rounding probabilities must be rational");
    support.push_back(Json{
        {"set", entry.set},
        {"prob", rational_to_json(entry.prob.rational_part())}});
  }
  j["support"] = support;
  return j;
}

Json run_game(const Loaded& inst, const Options& opt) {
  const GameMatrix matrix = build_matrix(*inst.sys, inst.weights);
  const GameSolution sol = solve_game(matrix);
  const GameVerification check =
      verify_solution(matrix, sol, Quad::from_double(opt.tol));
  if (!check.ok)
    throw std::logic_error("game solution failed verification: " +
                           check.violations.front());

  Json alice = Json::array();
  for (const auto& entry : sol.alice.support)
    alice.push_back(
        Json{{"set", entry.set}, {"prob", entry.prob.to_double()}});
  Json bob = Json::array();
  for (const auto& [k, y] : sol.bob)
    bob.push_back(Json{{"k", k}, {"y", y.to_double()}});
  Json mu = Json::array();
  for (const auto& [k, m] : sol.induced_mu)
    mu.push_back(Json{{"k", k}, {"mu", m.to_double()}});
  return Json{{"alpha_star", sol.alpha_star.to_double()},
              {"alpha_star_exact", quad_to_json(sol.alpha_star)},
              {"alice", alice},
              {"bob", bob},
              {"induced_mu", mu},
              {"deterministic_best", sol.deterministic_best.to_double()}};
}

Json run_certify(const Loaded& inst) {
  const auto* g = inst.graph();
  if (g == nullptr)
    throw std::invalid_argument("certify requires a graph instance");
  const auto [matching, dual] = squared_matching_dual(*g, inst.weights);
  const OptProfile profile = opt_profile(*inst.sys, inst.weights);

  Json records = Json::array();
  const double sqrt2 = std::sqrt(2.0);
  for (int k = 1; k <= static_cast<int>(matching.size()); ++k) {
    const DualCertificate cert =
        build_certificate(*g, inst.weights, matching, dual, k);
    const CertificateCheck check =
        verify_certificate(*g, inst.weights, matching, cert);
    const double wmk =
        top_k_weight(matching, inst.weights, k).to_double();
    const double optk = profile.at(k).to_double();
    records.push_back(Json{{"k", k},
                           {"feasible", check.feasible},
                           {"value", check.value},
                           {"wMk", wmk},
                           {"optk", optk},
                           {"ratio_bound", optk > 0 ? sqrt2 * wmk / optk : 1.0}});
  }
  return Json{{"matching", matching}, {"records", records}};
}

namespace {

// The instance weighting as a bit-function when all weights are powers of 2.
std::optional<BitFunction> instance_bit_function(const Weighting& w) {
  BitFunction f;
  for (const Quad& q : w.values()) {
    if (q.sign() <= 0) return std::nullopt;
    const Log2Parts parts = log2_parts(q);
    if (!parts.exact || parts.frac != 0) return std::nullopt;
    f.exponents.push_back(static_cast<int>(parts.floor_log2));
  }
  return f;
}

}  // namespace

CheckOutcome run_check(const Loaded& inst, const Options& opt) {
  BitSampler sampler;
  sampler.samples = opt.samples > 0 ? opt.samples : 1000;
  sampler.seed = opt.seed + 1;

  std::vector<BitFunction> extra;
  if (auto f = instance_bit_function(inst.weights)) extra.push_back(*f);

  const auto concave = check_bit_concave(*inst.sys, sampler, extra);
  const auto good = check_good_sampled(*inst.sys, sampler, extra);
  const auto two_ext = check_2_extendible(*inst.sys);

  Json witnesses = Json::object();
  if (concave)
    witnesses["bit_concave"] =
        Json{{"exponents", concave->w.exponents}, {"k", concave->k}};
  if (good)
    witnesses["good"] = Json{{"exponents", good->w.exponents},
                             {"set", good->set},
                             {"k", good->k}};
  if (two_ext)
    witnesses["two_extendible"] = Json{{"x", two_ext->x},
                                       {"y", two_ext->y},
                                       {"elem", two_ext->elem}};

  CheckOutcome outcome;
  outcome.report = Json{{"bit_concave", !concave},
                        {"good", !good},
                        {"two_extendible", !two_ext},
                        {"witnesses", witnesses}};
  outcome.violation_found = concave || good || two_ext;
  return outcome;
}

Json run_priority(const Loaded& inst, const Options& opt) {
  if (!opt.mu) throw std::invalid_argument("priority requires --mu <file>");
  std::ifstream in(*opt.mu);
  if (!in)
    throw std::invalid_argument("cannot open mu file: " + *opt.mu);
  Json j;
  in >> j;
  PriorityDistribution mu;
  for (const Json& row : j.at("mu"))
    mu.mass.emplace_back(row.at("k").get<int>(),
                         Quad(rational_from_json(row.at("p"))));
  std::sort(mu.mass.begin(), mu.mass.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  mu.validate();

  const RandomizedSolution lam = randomized_robust(*inst.sys, inst.weights);
  const ElemSet best = priority_best_in_support(lam, inst.weights, mu);
  const Quad value = priority_value(best, inst.weights, mu);
  return Json{{"set", best},
              {"value", value.to_double()},
              {"value_exact", quad_to_json(value)}};
}

Json run_merge(const Loaded& inst, const Options& opt) {
  const auto* g = inst.graph();
  if (g == nullptr)
    throw std::invalid_argument("merge requires a graph instance");

  // Default pair: the two most likely sets of the rounding distribution.
  RandomizedSolution lam = randomized_robust(*inst.sys, inst.weights);
  std::sort(lam.support.begin(), lam.support.end(),
            [](const auto& a, const auto& b) {
              if (a.prob != b.prob) return a.prob > b.prob;
              return a.set < b.set;
            });
  const ElemSet m = lam.support.front().set;
  const ElemSet mp =
      lam.support.size() > 1 ? lam.support[1].set : lam.support.front().set;

  const MergeParams params =
      MergeParams::make(parse_decimal_rational(opt.delta), opt.K);
  const double mu = opt.mu ? std::stod(*opt.mu) : 0.5;
  const int samples = opt.samples > 0 ? opt.samples : 10000;

  Json out{{"delta", params.delta.convert_to<double>()},
           {"K", params.K},
           {"samples", samples}};
  try {
    const auto [ma, mb] = simplify_pair(m, mp, *g, inst.weights, params);
    const MergeStats stats = random_merge(ma, mb, *g, inst.weights, mu,
                                          params.K, samples, opt.seed);
    out["bullets_hold"] = true;
    out["best_ratio"] = stats.best_min_ratio;
    out["best"] = stats.best;
  } catch (const std::logic_error& err) {
    out["bullets_hold"] = false;
    out["error"] = err.what();
  }
  return out;
}

}  // namespace rmatch::cmd
