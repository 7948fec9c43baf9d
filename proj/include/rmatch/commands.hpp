#pragma once

#include "rmatch/io.hpp"
#include "rmatch/robust.hpp"
#include "rmatch/systems.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

namespace rmatch::cmd {

struct Options {
  std::optional<std::string> instance_path;
  std::optional<std::string> gen;
  std::uint64_t seed = 0;
  int k = -1;  // -1 = command default
  std::string delta = "0.5";
  int K = 1;
  int samples = 0;  // 0 = command default
  std::optional<std::string> mu;
  bool exact = false;  // accepted for compatibility; arithmetic is exact
  double tol = 1e-9;
};

struct Loaded {
  Instance instance;
  std::shared_ptr<const IndependenceSystem> sys;
  Weighting weights;

  const WeightedGraph* graph() const {
    return std::holds_alternative<WeightedGraph>(instance)
               ? &std::get<WeightedGraph>(instance)
               : nullptr;
  }
};

// Builds an instance from --gen (e.g. "tight", "tightfamily:4", "copies:2",
// "notgood", "random:n=8,p=0.5,dist=uniform,W=20,seed=7").
Instance generate(const std::string& spec);

// Resolves --instance/--gen into a system plus weighting.
Loaded load(const Options& opt);

Json robustness_to_json(const RobustnessReport& rep);

Json run_gen(const Options& opt);
Json run_solve(const Loaded& inst, const Options& opt);
Json run_profile(const Loaded& inst);
Json run_robust(const Loaded& inst);
Json run_randomized(const Loaded& inst);
Json run_game(const Loaded& inst, const Options& opt);
Json run_certify(const Loaded& inst);
Json run_priority(const Loaded& inst, const Options& opt);
Json run_merge(const Loaded& inst, const Options& opt);

struct CheckOutcome {
  Json report;
  bool violation_found = false;
};
CheckOutcome run_check(const Loaded& inst, const Options& opt);

}  // namespace rmatch::cmd
