#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cvqaoa/potentials.hpp"
#include "cvqaoa/wavefunction.hpp"

namespace cvqaoa {

struct Observables {
  double norm = 0.0;
  std::vector<double> mean_position;
  std::vector<double> mean_momentum;  ///< from the momentum representation
  std::vector<double> position_variance;
  std::optional<double> mean_cost;
};

Observables observables(const Wavefunction& psi);
Observables observables(const Wavefunction& psi, const CostSpec& cost);
Observables observables(const Wavefunction& psi, std::span<const double> cost_table);

/// sum f(x) |psi(x)|^2 dV
double mean_cost(const Wavefunction& psi, std::span<const double> cost_table);
std::vector<double> mean_position(const Wavefunction& psi);
std::vector<double> mean_momentum(const Wavefunction& psi);
/// <grad f(x)> over |psi|^2.
std::vector<double> mean_gradient(const Wavefunction& psi, const CostSpec& cost);

} // namespace cvqaoa
