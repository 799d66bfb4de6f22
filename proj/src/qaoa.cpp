#include "cvqaoa/qaoa.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cvqaoa/error.hpp"
#include "cvqaoa/observables.hpp"
#include "cvqaoa/sampling.hpp"

namespace cvqaoa {

Schedule::Schedule(std::vector<double> eta, std::vector<double> gamma, MixerKind mixer)
  : eta_(std::move(eta)), gamma_(std::move(gamma)), mixer_(mixer) {
  if (eta_.size() != gamma_.size())
    throw InvalidArgument("schedule has " + std::to_string(eta_.size()) + " eta but " +
                          std::to_string(gamma_.size()) + " gamma entries");
  for (std::size_t j = 0; j < eta_.size(); ++j)
    if (!std::isfinite(eta_[j]) || !std::isfinite(gamma_[j]))
      throw InvalidArgument("schedule entry " + std::to_string(j + 1) + " is not finite");
  if (mixer_ == MixerKind::Projector) throw InvalidArgument("the projector mixer is only available in Grover mode");
}

Schedule uniform_schedule(std::size_t steps, double T, MixerKind mixer) {
  if (steps < 1) throw InvalidArgument("uniform schedule needs P >= 1");
  return Schedule(std::vector<double>(steps, T), std::vector<double>(steps, T), mixer);
}

Schedule decayed_schedule(std::size_t steps, double eta0, double gamma0, double decay, MixerKind mixer) {
  if (steps < 1) throw InvalidArgument("decayed schedule needs P >= 1");
  if (!(decay >= 0.0)) throw InvalidArgument("decay must be >= 0");
  std::vector<double> eta(steps), gamma(steps);
  for (std::size_t j = 0; j < steps; ++j) {
    const double f = 1.0 + decay * static_cast<double>(j);
    eta[j] = eta0 / f;
    gamma[j] = gamma0 / f;
  }
  return Schedule(std::move(eta), std::move(gamma), mixer);
}

namespace {

StepSnapshot snapshot(std::size_t step, const Wavefunction& psi, std::span<const double> table, double band,
                      double phase_step) {
  StepSnapshot s;
  s.step = step;
  s.norm = std::sqrt(psi.norm_squared());
  s.mean_position = mean_position(psi);
  s.mean_cost = mean_cost(psi, table);
  s.boundary_mass = boundary_mass(psi, band);
  s.max_phase_step = phase_step;
  return s;
}

void check_leakage(const StepSnapshot& s, const GuardPolicy& guard) {
  if (s.boundary_mass > guard.leakage_threshold) {
    std::ostringstream os;
    os << "boundary mass " << s.boundary_mass << " exceeds threshold " << guard.leakage_threshold;
    throw NumericalGuardError(GuardKind::Leakage, os.str(), s.step);
  }
}

} // namespace

RunRecord run(const Wavefunction& psi0, const CostSpec& cost, const Schedule& schedule, const RunOptions& options) {
  const auto& grid = psi0.grid();
  if (grid.dimension() != cost.dimension())
    throw InvalidArgument("cost dimension " + std::to_string(cost.dimension()) + " does not match state dimension " +
                          std::to_string(grid.dimension()));
  const auto& guard = options.guard;
  double max_eta = 0.0;
  for (double e : schedule.eta()) max_eta = std::max(max_eta, std::abs(e));
  check_phase_range(cost, grid, max_eta);
  const auto table = tabulate(cost, grid);

  RunRecord rec;
  rec.schedule = schedule;
  Wavefunction psi = psi0;
  rec.snapshots.push_back(snapshot(0, psi, table, guard.band_fraction, 0.0));
  check_leakage(rec.snapshots.back(), guard);
  if (options.keep_states) rec.states.push_back(psi);

  for (std::size_t j = 0; j < schedule.steps(); ++j) {
    const std::size_t step = j + 1;
    ResolutionMonitor monitor{guard.occupancy};
    ResolutionMonitor* mon = guard.aliasing == AliasingPolicy::Ignore ? nullptr : &monitor;
    apply_cost_phase(psi, table, schedule.eta()[j], mon);
    apply_mixer(psi, schedule.mixer(), schedule.gamma()[j], mon);

    if (monitor.aliased()) {
      std::ostringstream os;
      os << "phase changes by " << monitor.max_phase_step << " rad between neighbouring occupied grid points";
      if (guard.aliasing == AliasingPolicy::Error) throw NumericalGuardError(GuardKind::Aliasing, os.str(), step);
      rec.warnings.push_back("step " + std::to_string(step) + ": aliasing: " + os.str());
    }
    rec.snapshots.push_back(snapshot(step, psi, table, guard.band_fraction, monitor.max_phase_step));
    check_leakage(rec.snapshots.back(), guard);
    if (options.keep_states) rec.states.push_back(psi);
  }
  rec.final_state = std::move(psi);
  return rec;
}

std::vector<ScanRow> scan_T(const Wavefunction& psi0, const CostSpec& cost, std::size_t steps,
                            const std::vector<double>& T_values, std::size_t samples_per_T, std::uint64_t seed,
                            MixerKind mixer, const RunOptions& options) {
  if (T_values.empty()) throw InvalidArgument("scan needs at least one T value");
  std::vector<ScanRow> rows;
  rows.reserve(T_values.size());
  for (double T : T_values) {
    const auto rec = run(psi0, cost, uniform_schedule(steps, T, mixer), options);
    ScanRow row;
    row.T = T;
    row.mean_cost = rec.snapshots.back().mean_cost;
    row.best_sample_cost = statistics(sample(rec.final_state, cost, samples_per_T, seed), 0.0).best_cost;
    rows.push_back(row);
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ScanRow& a, const ScanRow& b) { return a.mean_cost < b.mean_cost; });
  return rows;
}

std::vector<ScheduleEvaluation> optimize_schedule(const Wavefunction& psi0, const CostSpec& cost,
                                                  const ScheduleProposer& proposer, std::size_t max_evaluations,
                                                  const RunOptions& options) {
  std::vector<ScheduleEvaluation> history;
  while (history.size() < max_evaluations) {
    auto next = proposer(history);
    if (!next) break;
    const auto rec = run(psi0, cost, *next, options);
    history.push_back({std::move(*next), rec.snapshots.back().mean_cost});
  }
  return history;
}

std::vector<double> heisenberg_residual(const Wavefunction& psi0, const CostSpec& cost, double eta, double gamma,
                                        MixerKind mixer) {
  const auto x0 = mean_position(psi0);
  const auto p0 = mean_momentum(psi0);
  const auto g0 = mean_gradient(psi0, cost);
  Wavefunction psi = psi0;
  apply_cost_phase(psi, cost, eta);
  apply_mixer(psi, mixer, gamma);
  const auto x1 = mean_position(psi);
  std::vector<double> r(x0.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = x1[i] - (x0[i] + gamma * p0[i] - eta * gamma * g0[i]);
  return r;
}

} // namespace cvqaoa
