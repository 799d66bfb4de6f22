#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cvqaoa/config.hpp"
#include "cvqaoa/grover.hpp"
#include "cvqaoa/qaoa.hpp"
#include "cvqaoa/sampling.hpp"

namespace cvqaoa {

/// Command-line overrides applied on top of a config file.
struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::filesystem::path> out_dir;
};

ExperimentConfig apply_overrides(ExperimentConfig config, const Overrides& overrides);

struct RunOutcome {
  RunRecord record;
  Marginal heatmap;  ///< final-state marginal over axes {0, 1} (or {0} in 1D)
  SampleSet samples;
  SampleStatistics stats;
};

/// Builds the initial state, evolves it and samples; touches no files.
RunOutcome run_experiment(const ExperimentConfig& config);

/// Writes steps.csv, heatmap.txt, samples.csv into the output directory and
/// prints the summary. Artifacts are only written once the whole experiment succeeded.
void cmd_run(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

/// Scans T (from `T_values`, or the config's [scan] T when empty); writes scan.csv.
std::vector<ScanRow> cmd_scan(const ExperimentConfig& config, std::vector<double> T_values, std::ostream& out);

/// Grover-mode run from the [grover] section; writes grover.csv.
GroverTrace cmd_grover(const ExperimentConfig& config, std::ostream& out);

/// Parameters of the PUBO sampling run. The vacuum starts on the barrier top;
/// shallow wells (omega = 0.4) let the plateau differences, not the well
/// barriers, decide which orthant the density settles in.
struct PuboRunSettings {
  double half_extent = 6.0;
  std::size_t points = 32;
  double squeezing = 0.0;
  std::size_t steps = 30;
  double T = 0.1;
  PuboEncoding encoding{2.0, 0.4, 1.5};
};

DecodedSamples solve_pubo(std::size_t dimension, const std::vector<BinaryTerm>& terms, std::size_t samples,
                          std::uint64_t seed, const PuboRunSettings& settings = {});

} // namespace cvqaoa
