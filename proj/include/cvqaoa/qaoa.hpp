#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cvqaoa/potentials.hpp"
#include "cvqaoa/propagators.hpp"
#include "cvqaoa/wavefunction.hpp"

namespace cvqaoa {

/// Per-step angles: eta_j for the cost phase, gamma_j for the mixer.
class Schedule {
public:
  Schedule() = default;
  Schedule(std::vector<double> eta, std::vector<double> gamma, MixerKind mixer = MixerKind::Kinetic);

  std::size_t steps() const { return eta_.size(); }
  const std::vector<double>& eta() const { return eta_; }
  const std::vector<double>& gamma() const { return gamma_; }
  MixerKind mixer() const { return mixer_; }

private:
  std::vector<double> eta_;
  std::vector<double> gamma_;
  MixerKind mixer_ = MixerKind::Kinetic;
};

/// eta_j = gamma_j = T for j = 1..P. Negative T is allowed (ascent direction).
Schedule uniform_schedule(std::size_t steps, double T, MixerKind mixer = MixerKind::Kinetic);
/// eta_j = eta0/(1 + decay (j-1)), gamma_j = gamma0/(1 + decay (j-1)).
Schedule decayed_schedule(std::size_t steps, double eta0, double gamma0, double decay,
                          MixerKind mixer = MixerKind::Kinetic);

enum class AliasingPolicy { Ignore, Warn, Error };

struct GuardPolicy {
  double leakage_threshold = 1e-6;
  double band_fraction = 0.05;
  AliasingPolicy aliasing = AliasingPolicy::Warn;
  double occupancy = 1e-10;  ///< cell probability below which a point is not checked for aliasing
};

struct RunOptions {
  GuardPolicy guard;
  bool keep_states = false;  ///< store the full state after every step
};

struct StepSnapshot {
  std::size_t step = 0;
  double norm = 0.0;
  std::vector<double> mean_position;
  double mean_cost = 0.0;
  double boundary_mass = 0.0;
  double max_phase_step = 0.0;  ///< largest neighbour phase change of the gates in this step
};

struct RunRecord {
  Schedule schedule;
  std::vector<StepSnapshot> snapshots;  ///< P + 1 entries, the first for the input
  Wavefunction final_state;
  std::vector<Wavefunction> states;     ///< P + 1 entries when keep_states is set
  std::vector<std::string> warnings;
};

/// Applies prod_j exp(-i gamma_j H_M) exp(-i eta_j H_C) to psi0, cost phase first
/// within each step. Throws NumericalGuardError carrying the step index when a
/// guard trips.
RunRecord run(const Wavefunction& psi0, const CostSpec& cost, const Schedule& schedule, const RunOptions& options = {});

struct ScanRow {
  double T = 0.0;
  double mean_cost = 0.0;
  double best_sample_cost = 0.0;
};

/// Runs uniform_schedule(P, T) for each T, sampling each final state with the
/// same seed. Rows are sorted by mean cost ascending (stable).
std::vector<ScanRow> scan_T(const Wavefunction& psi0, const CostSpec& cost, std::size_t steps,
                            const std::vector<double>& T_values, std::size_t samples_per_T, std::uint64_t seed,
                            MixerKind mixer = MixerKind::Kinetic, const RunOptions& options = {});

/// Outer-loop hook: a proposer sees all evaluations so far and returns the
/// next schedule, or nullopt to stop. The engine only evaluates.
struct ScheduleEvaluation {
  Schedule schedule;
  double mean_cost = 0.0;
};
using ScheduleProposer = std::function<std::optional<Schedule>(const std::vector<ScheduleEvaluation>&)>;

std::vector<ScheduleEvaluation> optimize_schedule(const Wavefunction& psi0, const CostSpec& cost,
                                                  const ScheduleProposer& proposer, std::size_t max_evaluations,
                                                  const RunOptions& options = {});

/// <x>_after - (<x>_0 + gamma <p>_0 - eta gamma <grad f>_0) for one step.
std::vector<double> heisenberg_residual(const Wavefunction& psi0, const CostSpec& cost, double eta, double gamma,
                                        MixerKind mixer = MixerKind::Kinetic);

} // namespace cvqaoa
