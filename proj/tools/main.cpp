#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace fuzzbet::cli;

  CLI::App app{"Set and membership-function metrics, betweenness, and self-checks"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may appear after the subcommand

  GlobalOpts g;
  app.add_option("-w,--workspace", g.workspace, "Workspace JSON/CSV file or directory");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Random seed for check")->capture_default_str();
  app.add_option("--tol", g.tol, "Numeric tolerance for check")->capture_default_str();

  DistOpts dist;
  auto* dist_cmd = app.add_subcommand("dist", "Distance between two named objects");
  dist_cmd->add_option("--metric", dist.metric,
                       "jaccard, dsigma, dr:<r>, dr:inf, D, DH, or kernel")
      ->required();
  dist_cmd->add_option("lhs", dist.lhs, "First object")->required();
  dist_cmd->add_option("rhs", dist.rhs, "Second object")->required();
  dist_cmd->add_option("--eta", dist.eta, "Level measure: lebesgue or discrete:a:w,a:w,...")
      ->capture_default_str();
  dist_cmd->add_option("--measure", dist.measure, "Override the weight measure by name");
  dist_cmd->add_option("--kernel", dist.kernel, "Kernel matrix name (metric kernel)");

  BetweenOpts bet;
  auto* bet_cmd = app.add_subcommand("between", "Test whether a candidate lies between two objects");
  bet_cmd->add_option("--mode", bet.mode, "crisp, pointwise, alpha, hyper, or h-alpha")->required();
  bet_cmd->add_option("lhs", bet.a, "First endpoint")->required();
  bet_cmd->add_option("rhs", bet.b, "Second endpoint")->required();
  bet_cmd->add_option("candidate", bet.c, "Candidate between the endpoints")->required();
  bet_cmd->add_option("--eta", bet.eta, "Level measure for --gap")->capture_default_str();
  bet_cmd->add_option("--measure", bet.measure, "Override the weight measure by name");
  bet_cmd->add_flag("--witness", bet.witness, "Report a decomposition witness when one exists");
  bet_cmd->add_flag("--gap", bet.gap, "Report the triangle gap of the candidate");

  CutOpts cut;
  auto* cut_cmd = app.add_subcommand("cut", "Strong level cut of a membership function");
  cut_cmd->add_option("name", cut.name, "Membership function name")->required();
  cut_cmd->add_option("--alpha", cut.alpha, "Level in [0,1)");
  cut_cmd->add_option("--alpha1", cut.alpha1, "First level component");
  cut_cmd->add_option("--alpha2", cut.alpha2, "Second level component");

  ShowOpts show;
  auto* show_cmd = app.add_subcommand("show", "List workspace contents or one object");
  show_cmd->add_option("name", show.name, "Object name (omit to list everything)");

  CheckCmdOpts check;
  auto* check_cmd = app.add_subcommand("check", "Run the property self-check suites");
  check_cmd->add_option("--suite", check.suite, "crisp, fuzzy, hyper, hfuzzy, or all")
      ->capture_default_str();
  check_cmd->add_option("--exhaustive", check.exhaustive, "Max universe size for exhaustive scans")
      ->capture_default_str();
  check_cmd->add_option("--grid", check.grid, "Membership grid levels per point")
      ->capture_default_str();
  check_cmd->add_option("--trials", check.trials, "Override randomized trial counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 4;
  }

  if (dist_cmd->parsed()) return run_dist(g, dist);
  if (bet_cmd->parsed()) return run_between(g, bet);
  if (cut_cmd->parsed()) return run_cut(g, cut);
  if (show_cmd->parsed()) return run_show(g, show);
  if (check_cmd->parsed()) return run_check(g, check);
  return 4;
}
