#include "cvqaoa/experiments.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "cvqaoa/error.hpp"
#include "cvqaoa/io.hpp"

namespace cvqaoa {
namespace {

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write '" + path.string() + "'");
  f << contents;
  if (!f) throw ConfigError("failed writing '" + path.string() + "'");
}

void require_optimisation_problem(const ExperimentConfig& config) {
  if (config.kind == ProblemKind::Grover) throw ConfigError("grover problems are run with the 'grover' command");
}

std::string format_point(const std::vector<double>& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + format_double(x[i]);
  return s + ")";
}

} // namespace

ExperimentConfig apply_overrides(ExperimentConfig config, const Overrides& overrides) {
  if (overrides.seed) {
    config.seed = *overrides.seed;
    config.provenance.push_back("override.seed = " + std::to_string(*overrides.seed));
  }
  if (overrides.out_dir) {
    config.output_dir = *overrides.out_dir;
    config.provenance.push_back("override.out = " + overrides.out_dir->string());
  }
  return config;
}

RunOutcome run_experiment(const ExperimentConfig& config) {
  require_optimisation_problem(config);
  const auto grid = config.make_grid();
  const auto psi0 = gaussian_state(grid, config.initial);
  RunOptions options;
  options.guard = config.guard;
  RunOutcome o;
  o.record = run(psi0, config.cost, config.make_schedule(), options);
  std::vector<std::size_t> axes{0};
  if (grid.dimension() >= 2) axes.push_back(1);
  o.heatmap = marginal(o.record.final_state, axes);
  o.samples = sample(o.record.final_state, config.cost, config.samples, config.seed, config.jitter);
  o.stats = statistics(o.samples, config.threshold);
  return o;
}

void cmd_run(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  const auto outcome = run_experiment(config);
  const auto grid = config.make_grid();

  std::ostringstream steps, heat, samples;
  write_run_csv(steps, outcome.record, config.provenance);
  write_heatmap(heat, outcome.heatmap, grid, config.provenance);
  write_samples_csv(samples, outcome.samples, grid, config.provenance);
  std::filesystem::create_directories(config.output_dir);
  write_file(config.output_dir / "steps.csv", steps.str());
  write_file(config.output_dir / "heatmap.txt", heat.str());
  write_file(config.output_dir / "samples.csv", samples.str());

  for (const auto& w : outcome.record.warnings) err << "warning: " << w << '\n';
  const auto& last = outcome.record.snapshots.back();
  out << "problem            " << to_string(config.kind) << " (N=" << grid.dimension() << ")\n";
  out << "steps              " << outcome.record.schedule.steps() << " (" << to_string(config.mixer) << " mixer)\n";
  out << "final mean cost    " << format_double(last.mean_cost) << '\n';
  out << "final norm         " << format_double(last.norm) << '\n';
  out << "boundary mass      " << format_double(last.boundary_mass) << '\n';
  out << "samples            " << outcome.samples.points.size() << " (seed " << config.seed << ")\n";
  out << "best cost          " << format_double(outcome.stats.best_cost) << '\n';
  out << "best point         " << format_point(outcome.stats.best_point) << '\n';
  out << "mean sample cost   " << format_double(outcome.stats.mean_cost) << '\n';
  out << "count below " << format_double(config.threshold) << "  " << outcome.stats.count_below_threshold << '\n';
  if (config.kind == ProblemKind::PuboFile) {
    const auto decoded = decode_samples(outcome.samples, config.binary_terms);
    out << "most frequent bits ";
    for (auto b : decoded.most_frequent) out << int(b);
    out << " (" << decoded.frequencies.at(decoded.most_frequent) << " samples)\n";
    out << "best bits          ";
    for (auto b : decoded.best) out << int(b);
    out << " (cost " << format_double(decoded.best_cost) << ")\n";
  }
  out << "artifacts          " << config.output_dir.string() << '\n';
}

std::vector<ScanRow> cmd_scan(const ExperimentConfig& config, std::vector<double> T_values, std::ostream& out) {
  require_optimisation_problem(config);
  if (T_values.empty()) T_values = config.scan_T;
  if (T_values.empty()) throw ConfigError("scan needs a non-empty T list (--T or [scan] T)");
  if (config.steps == 0) throw ConfigError("scan needs steps >= 1");
  const auto grid = config.make_grid();
  const auto psi0 = gaussian_state(grid, config.initial);
  RunOptions options;
  options.guard = config.guard;
  const auto rows = scan_T(psi0, config.cost, config.steps, T_values, config.samples, config.seed, config.mixer, options);

  std::ostringstream csv;
  write_scan_csv(csv, rows, config.provenance);
  std::filesystem::create_directories(config.output_dir);
  write_file(config.output_dir / "scan.csv", csv.str());

  out << "T                        mean_cost                best_sample_cost\n";
  for (const auto& r : rows) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%-24s %-24s %s\n", format_double(r.T).c_str(), format_double(r.mean_cost).c_str(),
                  format_double(r.best_sample_cost).c_str());
    out << buf;
  }
  return rows;
}

GroverTrace cmd_grover(const ExperimentConfig& config, std::ostream& out) {
  if (config.kind != ProblemKind::Grover) throw ConfigError("the grover command needs [problem] kind = grover");
  const auto grid = config.make_grid();
  GroverSpec spec{config.grover_target, config.grover_width, config.grover_momentum, config.grover_iterations};
  const auto trace = grover_run(spec, grid);

  std::ostringstream csv;
  write_grover_csv(csv, trace, config.provenance);
  std::filesystem::create_directories(config.output_dir);
  write_file(config.output_dir / "grover.csv", csv.str());

  std::size_t best = 0;
  for (std::size_t k = 0; k < trace.success.size(); ++k)
    if (trace.success[k] > trace.success[best]) best = k;
  out << "initial overlap    " << format_double(trace.initial_overlap) << '\n';
  out << "first maximum      k=" << first_maximum_iteration(trace.initial_overlap) << " (two-level model)\n";
  out << "peak success       " << format_double(trace.success[best]) << " at k=" << best << '\n';
  out << "orthogonal leak    " << format_double(trace.max_orthogonal_leak) << '\n';
  out << "iteration success               predicted\n";
  for (std::size_t k = 0; k < trace.success.size(); ++k) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%-9zu %-21.15f %.15f\n", k, trace.success[k], trace.predicted[k]);
    out << buf;
  }
  return trace;
}

DecodedSamples solve_pubo(std::size_t dimension, const std::vector<BinaryTerm>& terms, std::size_t samples,
                          std::uint64_t seed, const PuboRunSettings& settings) {
  const auto cost = pubo_encode(dimension, terms, settings.encoding);
  const auto grid = make_grid(std::vector<std::pair<double, std::size_t>>(dimension, {settings.half_extent, settings.points}));
  GaussianParams params;
  params.squeezing.assign(dimension, settings.squeezing);
  const auto psi0 = gaussian_state(grid, params);
  const auto rec = run(psi0, cost, uniform_schedule(settings.steps, settings.T));
  return decode_samples(sample(rec.final_state, cost, samples, seed), terms);
}

} // namespace cvqaoa
