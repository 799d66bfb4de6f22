#pragma once

#include <cstddef>
#include <vector>

#include "cvqaoa/grid.hpp"
#include "cvqaoa/wavefunction.hpp"

namespace cvqaoa {

struct GroverSpec {
  std::vector<double> target;            ///< x_f
  double width = 0.1;                    ///< epsilon
  std::vector<double> initial_momentum;  ///< x_0, centre of the momentum-sharp start state (lattice units)
  std::size_t iterations = 0;
};

/// Normalised Gaussian with position standard deviation `width` at `center`.
/// Throws NumericalGuardError(Leakage) without a 4*width margin.
Wavefunction indicator_state(const GridSpec& grid, const std::vector<double>& center, double width);

/// F^{-1} applied to indicator_state(grid, center, width): sharp in momentum.
Wavefunction momentum_indicator_state(const GridSpec& grid, const std::vector<double>& center, double width);

struct GroverTrace {
  double initial_overlap = 0.0;      ///< a = |<target|psi_0>|
  std::vector<double> success;       ///< |<target|psi_k>|^2, k = 0..P
  std::vector<double> predicted;     ///< two_level_prediction(a, k)
  std::vector<double> norm;          ///< ||psi_k||
  double max_orthogonal_leak = 0.0;  ///< largest weight outside span{psi_0, target}
};

/// Each iteration: phase pi on the target indicator, then phase pi on the
/// momentum-sharp start state.
GroverTrace grover_run(const GroverSpec& spec, const GridSpec& grid);

/// sin^2((2k+1) arcsin a), for 0 < a <= 1.
double two_level_prediction(double a, std::size_t k);
/// Iteration count of the first maximum, round(pi/(4 arcsin a) - 1/2).
std::size_t first_maximum_iteration(double a);

} // namespace cvqaoa
