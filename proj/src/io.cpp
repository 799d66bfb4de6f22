#include "cvqaoa/io.hpp"

#include <cstdio>
#include <ostream>

#include "cvqaoa/error.hpp"

namespace cvqaoa {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_comments(std::ostream& out, const std::vector<std::string>& lines) {
  for (const auto& l : lines) out << "# " << l << '\n';
}

namespace {

std::string grid_metadata(const GridSpec& grid) {
  std::string s = "grid";
  for (std::size_t i = 0; i < grid.dimension(); ++i)
    s += " axis" + std::to_string(i) + "=(L=" + format_double(grid.axis(i).half_extent) +
         ",M=" + std::to_string(grid.axis(i).points) + ")";
  return s;
}

} // namespace

void write_run_csv(std::ostream& out, const RunRecord& record, const std::vector<std::string>& provenance) {
  write_comments(out, provenance);
  out << "# mixer = " << to_string(record.schedule.mixer()) << '\n';
  const std::size_t n = record.snapshots.empty() ? 0 : record.snapshots.front().mean_position.size();
  out << "step,norm,mean_cost";
  for (std::size_t i = 0; i < n; ++i) out << ",mean_x" << i + 1;
  out << ",boundary_mass\n";
  for (const auto& s : record.snapshots) {
    out << s.step << ',' << format_double(s.norm) << ',' << format_double(s.mean_cost);
    for (double x : s.mean_position) out << ',' << format_double(x);
    out << ',' << format_double(s.boundary_mass) << '\n';
  }
}

void write_heatmap(std::ostream& out, const Marginal& m, const GridSpec& grid,
                   const std::vector<std::string>& provenance) {
  if (m.axes.empty() || m.axes.size() > 2) throw InvalidArgument("heatmaps need a one- or two-axis marginal");
  write_comments(out, provenance);
  const std::size_t rows = m.axes.size() == 2 ? m.shape[0] : 1;
  const std::size_t cols = m.shape.back();
  out << "# heatmap rows=" << rows << " cols=" << cols;
  for (std::size_t k = 0; k < m.axes.size(); ++k) {
    const auto& a = grid.axis(m.axes[k]);
    out << " axis" << m.axes[k] << "_min=" << format_double(a.position(0)) << " axis" << m.axes[k]
        << "_dx=" << format_double(a.spacing());
  }
  out << '\n';
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) out << (c ? " " : "") << format_double(m.values[r * cols + c]);
    out << '\n';
  }
}

void write_samples_csv(std::ostream& out, const SampleSet& samples, const GridSpec& grid,
                       const std::vector<std::string>& provenance) {
  write_comments(out, provenance);
  out << "# seed=" << samples.seed << " generator=" << samples.generator << " jitter=" << (samples.jitter ? 1 : 0)
      << '\n';
  out << "# " << grid_metadata(grid) << '\n';
  for (std::size_t i = 0; i < grid.dimension(); ++i) out << 'x' << i + 1 << ',';
  out << "cost\n";
  for (std::size_t s = 0; s < samples.points.size(); ++s) {
    for (double x : samples.points[s]) out << format_double(x) << ',';
    out << format_double(samples.costs[s]) << '\n';
  }
}

void write_grover_csv(std::ostream& out, const GroverTrace& trace, const std::vector<std::string>& provenance) {
  write_comments(out, provenance);
  out << "# initial_overlap=" << format_double(trace.initial_overlap) << '\n';
  out << "iteration,success_probability,predicted_probability\n";
  for (std::size_t k = 0; k < trace.success.size(); ++k)
    out << k << ',' << format_double(trace.success[k]) << ',' << format_double(trace.predicted[k]) << '\n';
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows, const std::vector<std::string>& provenance) {
  write_comments(out, provenance);
  out << "T,mean_cost,best_sample_cost\n";
  for (const auto& r : rows)
    out << format_double(r.T) << ',' << format_double(r.mean_cost) << ',' << format_double(r.best_sample_cost)
        << '\n';
}

} // namespace cvqaoa
