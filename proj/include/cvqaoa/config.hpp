#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cvqaoa/grid.hpp"
#include "cvqaoa/grover.hpp"
#include "cvqaoa/potentials.hpp"
#include "cvqaoa/qaoa.hpp"
#include "cvqaoa/wavefunction.hpp"

namespace cvqaoa {

enum class ProblemKind { StyblinskiTang, PolynomialFile, PuboFile, Grover };

const char* to_string(ProblemKind kind);

/// A parsed experiment file: flat `key = value` lines under `[section]` headers.
struct ExperimentConfig {
  ProblemKind kind = ProblemKind::StyblinskiTang;
  std::size_t dimension = 2;
  std::filesystem::path problem_file;  ///< resolved against the config's directory

  std::vector<std::pair<double, std::size_t>> grid;  ///< (half_extent, points) per axis
  GaussianParams initial;

  std::size_t steps = 1;
  std::optional<double> T;
  std::vector<double> eta;
  std::vector<double> gamma;
  double decay = 0.0;
  MixerKind mixer = MixerKind::Kinetic;

  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  bool jitter = false;
  double threshold = 0.0;

  GuardPolicy guard;
  std::vector<double> scan_T;
  PuboEncoding pubo;

  std::vector<double> grover_target;
  double grover_width = 0.1;
  std::vector<double> grover_momentum;
  std::size_t grover_iterations = 10;

  std::filesystem::path output_dir = "out";

  /// Normalised "section.key = value" lines, embedded in every artifact.
  std::vector<std::string> provenance;

  /// Cost of the problem (loaded from the problem file when there is one).
  /// Empty for Grover experiments.
  CostSpec cost;
  /// Binary terms of a pubo-file problem.
  std::vector<BinaryTerm> binary_terms;

  GridSpec make_grid() const;
  Schedule make_schedule() const;
};

ExperimentConfig parse_config(std::istream& in, const std::filesystem::path& base_dir = ".");
ExperimentConfig load_config(const std::filesystem::path& path);

/// Polynomial problem file: `coeff e1 ... eN` lines, optionally grouped into
/// `equality c=.. lambda=..` / `inequality d=.. beta=..` blocks closed by `end`.
CostSpec parse_problem(std::istream& in, std::size_t dimension);
CostSpec load_problem(const std::filesystem::path& path, std::size_t dimension);
/// Writes polynomial and penalty terms in the problem-file format.
void write_problem(std::ostream& out, const CostSpec& cost);

/// PUBO file: `alpha b1 ... bN` lines.
std::vector<BinaryTerm> parse_pubo(std::istream& in, std::size_t dimension);
std::vector<BinaryTerm> load_pubo(const std::filesystem::path& path, std::size_t dimension);

} // namespace cvqaoa
