#include "cvqaoa/observables.hpp"

#include <cmath>

#include "cvqaoa/error.hpp"
#include "cvqaoa/spectral.hpp"

namespace cvqaoa {

std::vector<double> mean_position(const Wavefunction& psi) {
  const auto& grid = psi.grid();
  std::vector<double> mean(grid.dimension(), 0.0), x(grid.dimension());
  const auto amps = psi.raw();
  for (std::size_t flat = 0; flat < amps.size(); ++flat) {
    grid.coordinates(flat, x);
    const double p = std::norm(amps[flat]);
    for (std::size_t i = 0; i < x.size(); ++i) mean[i] += p * x[i];
  }
  for (auto& m : mean) m *= grid.cell_volume();
  return mean;
}

std::vector<double> mean_momentum(const Wavefunction& psi) {
  const auto& grid = psi.grid();
  const auto b = momentum_amplitudes(psi);
  std::vector<double> mean(grid.dimension(), 0.0);
  std::vector<std::size_t> idx(grid.dimension());
  for (std::size_t flat = 0; flat < b.size(); ++flat) {
    grid.unflatten(flat, idx);
    const double p = std::norm(b[flat]);
    for (std::size_t i = 0; i < idx.size(); ++i) mean[i] += p * grid.axis(i).momentum(idx[i]);
  }
  for (auto& m : mean) m *= grid.cell_volume();
  return mean;
}

double mean_cost(const Wavefunction& psi, std::span<const double> cost_table) {
  if (cost_table.size() != psi.size()) throw InvalidArgument("cost table does not match the state's grid");
  const auto amps = psi.raw();
  double s = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) s += cost_table[i] * std::norm(amps[i]);
  s *= psi.grid().cell_volume();
  if (!std::isfinite(s)) throw NumericalGuardError(GuardKind::Overflow, "mean cost is not finite");
  return s;
}

std::vector<double> mean_gradient(const Wavefunction& psi, const CostSpec& cost) {
  const auto& grid = psi.grid();
  std::vector<double> mean(grid.dimension(), 0.0), x(grid.dimension());
  const auto amps = psi.raw();
  for (std::size_t flat = 0; flat < amps.size(); ++flat) {
    const double p = std::norm(amps[flat]);
    if (p == 0.0) continue;
    grid.coordinates(flat, x);
    const auto g = gradient(cost, x);
    for (std::size_t i = 0; i < g.size(); ++i) mean[i] += p * g[i];
  }
  for (auto& m : mean) m *= grid.cell_volume();
  return mean;
}

Observables observables(const Wavefunction& psi) {
  Observables o;
  o.norm = std::sqrt(psi.norm_squared());
  o.mean_position = mean_position(psi);
  o.mean_momentum = mean_momentum(psi);
  const auto& grid = psi.grid();
  o.position_variance.assign(grid.dimension(), 0.0);
  std::vector<double> x(grid.dimension());
  const auto amps = psi.raw();
  for (std::size_t flat = 0; flat < amps.size(); ++flat) {
    grid.coordinates(flat, x);
    const double p = std::norm(amps[flat]);
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double d = x[i] - o.mean_position[i];
      o.position_variance[i] += p * d * d;
    }
  }
  for (auto& v : o.position_variance) v *= grid.cell_volume();
  return o;
}

Observables observables(const Wavefunction& psi, std::span<const double> cost_table) {
  auto o = observables(psi);
  o.mean_cost = mean_cost(psi, cost_table);
  return o;
}

Observables observables(const Wavefunction& psi, const CostSpec& cost) {
  return observables(psi, tabulate(cost, psi.grid()));
}

} // namespace cvqaoa
