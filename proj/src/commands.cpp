#include "horizon/commands.hpp"

#include <cmath>
#include <limits>

#include "horizon/errors.hpp"
#include "horizon/format.hpp"
#include "horizon/inference.hpp"
#include "horizon/oracles.hpp"

namespace horizon::cli {

namespace {

WorstCaseResult worst_case(const KnowledgeConstraint& constraint, double t_past,
                           double t_fut) {
  if (const auto* z = std::get_if<PfdZero>(&constraint))
    return worst_case_posterior_pfd_zero(z->p, t_past, t_fut);
  const auto& b = std::get<PfdBounded>(constraint);
  return worst_case_posterior_bounded(b.p, b.q_bound, t_past, t_fut);
}

std::vector<double> make_grid(double start, double stop, double step,
                              const char* what) {
  if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step) ||
      step <= 0.0 || start >= stop)
    throw ValidationError(std::string(what) +
                          " grid needs start < stop and step > 0");
  std::vector<double> grid;
  const auto count = static_cast<std::size_t>((stop - start) / step + 1e-9);
  grid.reserve(count + 1);
  for (std::size_t i = 0; i <= count; ++i) grid.push_back(start + static_cast<double>(i) * step);
  return grid;
}

}  // namespace

void cmd_bound(const BoundArgs& args, std::ostream& os) {
  const WorstCaseResult res = worst_case(args.constraint, args.t_past, args.t_fut);
  const int d = args.out.sig_digits;
  os << "worst_case_bound   " << format_real(res.bound, d) << "\n"
     << "minimizer_pfd      " << format_real(res.minimizer_q, d) << "\n"
     << "mishap_probability " << format_real(1.0 - res.bound, d) << "\n";
}

void cmd_figure1(const Figure1Args& args, std::ostream& os) {
  if (args.p_zero_values.empty())
    throw ValidationError("figure1 needs at least one fault-freeness probability");
  const std::vector<double> ratios =
      make_grid(args.rho_start, args.rho_stop, args.rho_step, "ratio");
  const int d = args.out.sig_digits;
  os << "pp,ratio,mishap_prob\n";
  for (const double pp : args.p_zero_values) {
    for (const double rho : ratios) {
      const WorstCaseResult res = worst_case_posterior_pfd_zero(pp, 1.0, rho);
      os << format_real(pp, d) << ',' << format_real(rho, d) << ','
         << format_real(1.0 - res.bound, d) << "\n";
    }
  }
}

void cmd_table1(const Table1Args& args, std::ostream& os) {
  static constexpr double kReferencePp[] = {0.92, 0.82, 0.72, 0.5, 0.1};
  const int d = args.out.sig_digits;
  os << "pp,k,k_linear\n";
  for (const double pp : kReferencePp) {
    const double k = extension_coefficient(PfdZero{pp}, args.confidence, 1.0);
    const double kl = is_unbounded(k) ? unbounded() : k_linear(k);
    os << format_real(pp, d) << ',' << format_real(k, d) << ','
       << format_real(kl, d) << "\n";
  }
}

void cmd_scenario(const ScenarioArgs& args, std::ostream& os) {
  if (args.k.has_value() == args.constraint.has_value())
    throw ValidationError(
        "scenario needs exactly one of a fixed coefficient or a knowledge "
        "constraint with confidence");
  const std::vector<double> grid =
      make_grid(args.t_start, args.t_stop, args.t_step, "time");
  if (!grid.empty() && grid.front() <= 0.0)
    throw ValidationError("time grid must start after t = 0");

  const int d = args.out.sig_digits;
  os << "t,fleet,T_past,t_hor,ratio\n";

  auto emit = [&](const ScenarioRow& row) {
    os << format_real(row.t, d) << ',' << format_real(row.fleet, d) << ','
       << format_real(row.ops_past, d) << ','
       << format_real(row.time_horizon, d) << ',' << format_real(row.ratio, d)
       << "\n";
  };

  if (args.k) {
    const ScenarioTrace trace =
        scenario_trace(args.schedule, *args.k, grid, args.anticipation);
    for (const ScenarioRow& row : trace.rows) emit(row);
    return;
  }

  // Per-row coefficient: with bounded-pfd knowledge the coefficient depends
  // on the operation already accumulated.
  const OperationProfile profile(args.schedule);
  for (const double t : grid) {
    ScenarioRow row;
    row.t = t;
    row.fleet = profile.fleet(t);
    row.ops_past = profile.operation(t);
    try {
      const double k =
          extension_coefficient(*args.constraint, args.confidence, row.ops_past);
      const HorizonResult res = horizon_time(args.schedule, t, k, args.anticipation);
      row.time_horizon = res.time_horizon;
      row.ratio = res.time_horizon / t;
    } catch (const EvidenceError&) {
      row.time_horizon = std::numeric_limits<double>::quiet_NaN();
      row.ratio = row.time_horizon;
      row.valid = false;
    }
    emit(row);
  }
}

bool cmd_validate(const ValidateArgs& args, std::ostream& os) {
  const int d = args.out.sig_digits;
  const WorstCaseResult engine = worst_case(args.constraint, args.t_past, args.t_fut);
  const double grid_bound =
      atom_grid_worst_case(args.constraint, args.t_past, args.t_fut, args.grid_size);

  // Monte Carlo on the minimising prior itself: its posterior equals the
  // bound, so the estimate must not undercut it by more than noise.
  std::vector<PfdAtom> atoms;
  if (const auto* z = std::get_if<PfdZero>(&args.constraint))
    atoms = {{0.0, z->p}, {engine.minimizer_q, 1.0 - z->p}};
  else {
    const auto& b = std::get<PfdBounded>(args.constraint);
    atoms = {{b.q_bound, b.p}, {engine.minimizer_q, 1.0 - b.p}};
  }
  const SimulationConfig config{args.mc_samples, args.seed, args.t_past,
                                args.t_fut, PfdPrior(atoms)};
  const MonteCarloEstimate mc = monte_carlo_conditional_survival(config);

  const double dominance_gap = grid_bound - engine.bound;
  const bool dominance_ok = dominance_gap >= -1e-12;
  const double conservatism_margin =
      mc.estimate + 3.0 * mc.std_error - engine.bound;
  const bool conservatism_ok = conservatism_margin >= 0.0;

  os << "engine_bound      " << format_real(engine.bound, d) << "\n";
  os << "grid_oracle_bound " << format_real(grid_bound, d) << "  (grid "
     << args.grid_size << ")\n";
  os << "mc_estimate       " << format_real(mc.estimate, d) << " +/- "
     << format_real(mc.std_error, d) << "  (n=" << args.mc_samples
     << ", seed=" << args.seed << ")\n";
  os << "oracle_dominance  " << (dominance_ok ? "PASS" : "FAIL") << "  (gap "
     << format_real(dominance_gap, d) << ")\n";
  os << "mc_conservatism   " << (conservatism_ok ? "PASS" : "FAIL")
     << "  (margin " << format_real(conservatism_margin, d) << ")\n";
  const bool ok = dominance_ok && conservatism_ok;
  os << "overall           " << (ok ? "PASS" : "FAIL") << "\n";
  return ok;
}

}  // namespace horizon::cli
