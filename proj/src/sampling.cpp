#include "cvqaoa/sampling.hpp"

#include <algorithm>
#include <limits>

#include "cvqaoa/error.hpp"

namespace cvqaoa {

double uniform_open(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

std::vector<std::size_t> sample_indices(std::span<const double> pmf, std::size_t n, std::mt19937_64& rng) {
  if (pmf.empty()) throw InvalidArgument("cannot sample from an empty distribution");
  std::vector<double> cdf(pmf.size());
  double running = 0.0;
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    if (pmf[i] < 0.0) throw InvalidArgument("negative probability mass");
    running += pmf[i];
    cdf[i] = running;
  }
  if (!(running > 0.0)) throw InvalidArgument("probability mass sums to zero");

  std::vector<std::size_t> out(n);
  for (auto& idx : out) {
    const double u = uniform_open(rng) * running;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    // zero-mass trailing cells cannot be selected
    if (it == cdf.end()) it = std::lower_bound(cdf.begin(), cdf.end(), running);
    idx = static_cast<std::size_t>(it - cdf.begin());
  }
  return out;
}

SampleSet sample(const Wavefunction& psi, const CostSpec& cost, std::size_t n, std::uint64_t seed, bool jitter) {
  if (n == 0) throw InvalidArgument("sample count must be at least 1");
  const auto& grid = psi.grid();
  if (grid.dimension() != cost.dimension()) throw InvalidArgument("cost dimension does not match the state");
  std::mt19937_64 rng(seed);
  const auto pmf = psi.cell_probabilities();
  const auto indices = sample_indices(pmf, n, rng);

  SampleSet s;
  s.seed = seed;
  s.jitter = jitter;
  s.points.reserve(n);
  s.costs.reserve(n);
  for (auto flat : indices) {
    auto x = grid.coordinates(flat);
    if (jitter)
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += (uniform_open(rng) - 0.5) * grid.axis(i).spacing();
    s.costs.push_back(evaluate(cost, x));
    s.points.push_back(std::move(x));
  }
  return s;
}

SampleStatistics statistics(const SampleSet& samples, double threshold) {
  if (samples.costs.empty()) throw InvalidArgument("statistics of an empty sample set");
  SampleStatistics st;
  st.best_cost = std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (std::size_t i = 0; i < samples.costs.size(); ++i) {
    const double c = samples.costs[i];
    if (c < st.best_cost) {
      st.best_cost = c;
      st.best_point = samples.points[i];
    }
    if (c < threshold) ++st.count_below_threshold;
    sum += c;
  }
  st.mean_cost = sum / static_cast<double>(samples.costs.size());
  return st;
}

DecodedSamples decode_samples(const SampleSet& samples, const std::vector<BinaryTerm>& terms) {
  if (samples.points.empty()) throw InvalidArgument("cannot decode an empty sample set");
  DecodedSamples d;
  for (const auto& p : samples.points) ++d.frequencies[decode_bits(p)];
  std::size_t top = 0;
  d.best_cost = std::numeric_limits<double>::infinity();
  for (const auto& [bits, count] : d.frequencies) {
    if (count > top) {
      top = count;
      d.most_frequent = bits;
    }
    const double c = binary_cost(terms, bits);
    if (c < d.best_cost) {
      d.best_cost = c;
      d.best = bits;
    }
  }
  return d;
}

} // namespace cvqaoa
