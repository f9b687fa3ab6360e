// horizon: conservative reliability bounds and confidence horizons for
// mishap-free fleet operation.
//
// Exit codes: 0 success, 1 validation-oracle failure, 2 argument/input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "horizon/commands.hpp"
#include "horizon/errors.hpp"
#include "horizon/schedule_io.hpp"

namespace {

using horizon::KnowledgeConstraint;
using horizon::PfdBounded;
using horizon::PfdZero;

struct ConstraintFlags {
  std::optional<double> pp;
  std::optional<double> pl;
  std::optional<double> ql;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--pp", pp, "prior probability that the pfd is exactly 0");
    cmd.add_option("--pl", pl, "prior probability that the pfd is at most --ql");
    cmd.add_option("--ql", ql, "pfd bound paired with --pl");
  }

  KnowledgeConstraint resolve() const {
    if (pp && !pl && !ql) return PfdZero{*pp};
    if (!pp && pl && ql) return PfdBounded{*pl, *ql};
    throw horizon::ValidationError(
        "give either --pp, or both --pl and --ql");
  }
};

// Commands write to a buffer first so a late failure cannot leave a partial
// output file behind.
int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file '" << out_path << "'\n";
    return 2;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Conservative reliability bounds and confidence horizons from "
      "mishap-free operation"};
  app.require_subcommand(1);

  std::string out_path;
  std::string precision = "human";
  app.add_option("--out", out_path, "write output to a file instead of stdout");
  app.add_option("--precision", precision,
                 "real number precision: human (6 digits) or full (17)")
      ->check(CLI::IsMember({"human", "full"}));

  // bound
  auto* bound_cmd = app.add_subcommand(
      "bound", "worst-case posterior reliability for given past/future operation");
  ConstraintFlags bound_constraint;
  bound_constraint.add_to(*bound_cmd);
  double bound_tpast = 0.0;
  double bound_tfut = 0.0;
  bound_cmd->add_option("--tpast", bound_tpast, "past mishap-free demands")
      ->required();
  bound_cmd->add_option("--tfut", bound_tfut, "future demands to cover")
      ->required();

  // figure1
  auto* fig_cmd = app.add_subcommand(
      "figure1", "CSV of worst-case mishap probability over horizon ratios");
  std::vector<double> fig_pp = {0.92, 0.82, 0.72, 0.5, 0.1};
  double fig_rho_start = 0.0, fig_rho_stop = 10.0, fig_rho_step = 0.1;
  fig_cmd->add_option("--pp", fig_pp,
                      "fault-freeness probabilities (comma separated)")
      ->delimiter(',');
  fig_cmd->add_option("--rho-start", fig_rho_start, "first horizon ratio");
  fig_cmd->add_option("--rho-stop", fig_rho_stop, "last horizon ratio");
  fig_cmd->add_option("--rho-step", fig_rho_step, "ratio grid step");

  // table1
  auto* table_cmd = app.add_subcommand(
      "table1", "CSV of extension coefficients for reference fault-freeness values");
  double table_confidence = 0.95;
  table_cmd->add_option("--confidence", table_confidence,
                        "required posterior confidence");

  // scenario
  auto* scen_cmd = app.add_subcommand(
      "scenario", "CSV horizon trace for a deployment schedule");
  std::string scen_schedule_path;
  std::string scen_schedule_json;
  std::optional<double> scen_k;
  ConstraintFlags scen_constraint;
  double scen_confidence = 0.95;
  double scen_t_start = 0.0, scen_t_stop = 0.0, scen_t_step = 0.0;
  bool scen_unaware = false;
  scen_cmd->add_option("--schedule", scen_schedule_path, "schedule JSON file");
  scen_cmd->add_option("--schedule-json", scen_schedule_json,
                       "inline schedule JSON document");
  scen_cmd->add_option("--k", scen_k, "fixed extension coefficient");
  scen_constraint.add_to(*scen_cmd);
  scen_cmd->add_option("--confidence", scen_confidence,
                       "confidence used with --pp/--pl/--ql");
  scen_cmd->add_option("--t-start", scen_t_start, "first trace time")->required();
  scen_cmd->add_option("--t-stop", scen_t_stop, "last trace time")->required();
  scen_cmd->add_option("--t-step", scen_t_step, "trace time step")->required();
  scen_cmd->add_flag("--unaware", scen_unaware,
                     "ignore production-rate changes not yet in effect");

  // validate
  auto* val_cmd = app.add_subcommand(
      "validate", "cross-check the analytic bound against grid and Monte Carlo oracles");
  ConstraintFlags val_constraint;
  val_constraint.add_to(*val_cmd);
  double val_tpast = 0.0, val_tfut = 0.0;
  int val_grid = 10000;
  std::uint64_t val_samples = 1000000;
  std::uint64_t val_seed = 1;
  val_cmd->add_option("--tpast", val_tpast, "past mishap-free demands")->required();
  val_cmd->add_option("--tfut", val_tfut, "future demands to cover")->required();
  val_cmd->add_option("--grid-size", val_grid, "atom grid resolution");
  val_cmd->add_option("--mc-samples", val_samples, "Monte Carlo sample count");
  val_cmd->add_option("--seed", val_seed, "Monte Carlo seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  horizon::cli::OutputOptions out_opts;
  out_opts.sig_digits = precision == "full" ? 17 : 6;

  try {
    std::ostringstream buffer;
    bool oracle_pass = true;

    if (bound_cmd->parsed()) {
      horizon::cli::cmd_bound(
          {bound_constraint.resolve(), bound_tpast, bound_tfut, out_opts}, buffer);
    } else if (fig_cmd->parsed()) {
      horizon::cli::cmd_figure1(
          {fig_pp, fig_rho_start, fig_rho_stop, fig_rho_step, out_opts}, buffer);
    } else if (table_cmd->parsed()) {
      horizon::cli::cmd_table1({table_confidence, out_opts}, buffer);
    } else if (scen_cmd->parsed()) {
      if (scen_schedule_path.empty() == scen_schedule_json.empty())
        throw horizon::ValidationError(
            "give exactly one of --schedule or --schedule-json");
      horizon::cli::ScenarioArgs args;
      args.schedule = scen_schedule_path.empty()
                          ? horizon::parse_schedule(scen_schedule_json, "<inline>")
                          : horizon::load_schedule(scen_schedule_path);
      args.k = scen_k;
      if (scen_constraint.pp || scen_constraint.pl || scen_constraint.ql)
        args.constraint = scen_constraint.resolve();
      args.confidence = scen_confidence;
      args.t_start = scen_t_start;
      args.t_stop = scen_t_stop;
      args.t_step = scen_t_step;
      args.anticipation = scen_unaware ? horizon::Anticipation::kUnaware
                                       : horizon::Anticipation::kAware;
      args.out = out_opts;
      horizon::cli::cmd_scenario(args, buffer);
    } else if (val_cmd->parsed()) {
      oracle_pass = horizon::cli::cmd_validate(
          {val_constraint.resolve(), val_tpast, val_tfut, val_grid, val_samples,
           val_seed, out_opts},
          buffer);
    }

    const int emit_rc = emit(buffer.str(), out_path);
    if (emit_rc != 0) return emit_rc;
    return oracle_pass ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
