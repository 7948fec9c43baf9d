#include "rmatch/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using rmatch::cmd::Options;

void add_common_flags(CLI::App* app, Options* opt) {
  app->add_option("--instance", opt->instance_path, "instance file (JSON)");
  app->add_option("--gen", opt->gen,
                  "generator spec, e.g. fig1, tightfamily:4, copies:2, lemma28, "
                  "random:n=8,p=0.5,dist=uniform,W=20,seed=7");
  app->add_option("--seed", opt->seed, "random seed");
  app->add_option("--k", opt->k, "cardinality bound");
  app->add_option("--delta", opt->delta, "merge accuracy parameter");
  app->add_option("--K", opt->K, "asymptotic cardinality threshold");
  app->add_option("--samples", opt->samples, "sample count");
  app->add_option("--mu", opt->mu, "merge coefficient or mu distribution file");
  app->add_flag("--exact", opt->exact,
                "force the exact LP path (always on; kept for compatibility)");
  app->add_option("--tol", opt->tol, "verification tolerance");
}

void emit(const rmatch::Json& report) { std::cout << report.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"robust matchings and independence systems toolkit"};
  app.require_subcommand(1);

  Options opt;
  const char* names[] = {"gen",     "solve",   "profile", "robust",
                         "randomized", "game", "certify", "check",
                         "priority",   "merge"};
  for (const char* name : names)
    add_common_flags(app.add_subcommand(name), &opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    using namespace rmatch::cmd;
    if (command == "gen") {
      emit(run_gen(opt));
      return 0;
    }
    const Loaded inst = load(opt);
    if (command == "solve") {
      emit(run_solve(inst, opt));
    } else if (command == "profile") {
      emit(run_profile(inst));
    } else if (command == "robust") {
      emit(run_robust(inst));
    } else if (command == "randomized") {
      emit(run_randomized(inst));
    } else if (command == "game") {
      emit(run_game(inst, opt));
    } else if (command == "certify") {
      emit(run_certify(inst));
    } else if (command == "priority") {
      emit(run_priority(inst, opt));
    } else if (command == "merge") {
      const rmatch::Json report = run_merge(inst, opt);
      emit(report);
      return report.value("bullets_hold", true) ? 0 : 1;
    } else if (command == "check") {
      const CheckOutcome outcome = run_check(inst, opt);
      emit(outcome.report);
      return outcome.violation_found ? 1 : 0;
    }
    return 0;
  } catch (const std::invalid_argument& err) {
    std::cerr << "input error: " << err.what() << "\n";
    return 2;
  } catch (const rmatch::ResourceLimitError& err) {
    std::cerr << "resource error: " << err.what() << "\n";
    return 2;
  } catch (const rmatch::Json::exception& err) {
    std::cerr << "input error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
}
