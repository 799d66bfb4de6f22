#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "cvqaoa/potentials.hpp"
#include "cvqaoa/wavefunction.hpp"

namespace cvqaoa {

/// Uniform double in the open interval (0, 1) from 53 random bits.
double uniform_open(std::mt19937_64& rng);

/// Position-basis measurement outcomes with their costs.
struct SampleSet {
  std::vector<std::vector<double>> points;
  std::vector<double> costs;
  std::uint64_t seed = 0;
  bool jitter = false;
  std::string generator = "mt19937_64";
};

/// Draws lattice indices from an (unnormalised) probability mass function by
/// inverse-CDF lookup, one uniform draw per sample.
std::vector<std::size_t> sample_indices(std::span<const double> pmf, std::size_t n, std::mt19937_64& rng);

/// Samples n positions from |psi|^2 and evaluates `cost` at each. With jitter,
/// each point is offset uniformly within its cell (strictly inside +-dx/2).
SampleSet sample(const Wavefunction& psi, const CostSpec& cost, std::size_t n, std::uint64_t seed,
                 bool jitter = false);

struct SampleStatistics {
  double best_cost = 0.0;
  std::vector<double> best_point;
  std::size_t count_below_threshold = 0;
  double mean_cost = 0.0;
};

/// Ties on best cost go to the first occurrence; the threshold comparison is strict.
SampleStatistics statistics(const SampleSet& samples, double threshold);

struct DecodedSamples {
  std::map<std::vector<std::uint8_t>, std::size_t> frequencies;
  std::vector<std::uint8_t> most_frequent;  ///< ties broken by lexicographic order
  std::vector<std::uint8_t> best;           ///< lowest exact binary cost among observed bitstrings
  double best_cost = 0.0;
};

DecodedSamples decode_samples(const SampleSet& samples, const std::vector<BinaryTerm>& terms);

} // namespace cvqaoa
