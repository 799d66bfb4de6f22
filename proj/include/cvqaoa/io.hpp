#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cvqaoa/grover.hpp"
#include "cvqaoa/qaoa.hpp"
#include "cvqaoa/sampling.hpp"
#include "cvqaoa/wavefunction.hpp"

namespace cvqaoa {

/// Shortest round-trip text form: 17 significant digits.
std::string format_double(double v);

/// Writes each provenance line prefixed by "# ".
void write_comments(std::ostream& out, const std::vector<std::string>& lines);

/// step,norm,mean_cost,mean_x1..mean_xN,boundary_mass
void write_run_csv(std::ostream& out, const RunRecord& record, const std::vector<std::string>& provenance = {});

/// Row-major density matrix of a one- or two-axis marginal, preceded by a
/// "# heatmap ..." axis metadata line. One-axis marginals are written as a single row.
void write_heatmap(std::ostream& out, const Marginal& m, const GridSpec& grid,
                   const std::vector<std::string>& provenance = {});

/// x1..xN,cost, one row per sample; seed and grid metadata as comments.
void write_samples_csv(std::ostream& out, const SampleSet& samples, const GridSpec& grid,
                       const std::vector<std::string>& provenance = {});

/// iteration,success_probability,predicted_probability
void write_grover_csv(std::ostream& out, const GroverTrace& trace, const std::vector<std::string>& provenance = {});

/// T,mean_cost,best_sample_cost
void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows, const std::vector<std::string>& provenance = {});

} // namespace cvqaoa
