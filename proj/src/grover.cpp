#include "cvqaoa/grover.hpp"

#include <cmath>
#include <numbers>

#include "cvqaoa/error.hpp"
#include "cvqaoa/propagators.hpp"

namespace cvqaoa {

Wavefunction indicator_state(const GridSpec& grid, const std::vector<double>& center, double width) {
  if (!(width > 0.0)) throw InvalidArgument("indicator width must be positive");
  if (center.size() != grid.dimension()) throw InvalidArgument("indicator centre has the wrong dimension");
  // position variance e^{2r}/2 = width^2
  const double r = 0.5 * std::log(2.0 * width * width);
  GaussianParams params;
  params.center_position = center;
  params.squeezing.assign(grid.dimension(), r);
  return gaussian_state(grid, params);
}

Wavefunction momentum_indicator_state(const GridSpec& grid, const std::vector<double>& center, double width) {
  auto psi = indicator_state(grid, center, width);
  fourier_transform_in_place(psi, true);
  return psi;
}

double two_level_prediction(double a, std::size_t k) {
  if (!(a > 0.0 && a <= 1.0)) throw InvalidArgument("overlap must lie in (0, 1]");
  const double s = std::sin((2.0 * static_cast<double>(k) + 1.0) * std::asin(a));
  return s * s;
}

std::size_t first_maximum_iteration(double a) {
  if (!(a > 0.0 && a <= 1.0)) throw InvalidArgument("overlap must lie in (0, 1]");
  const double k = std::round(std::numbers::pi / (4.0 * std::asin(a)) - 0.5);
  return k < 0.0 ? 0 : static_cast<std::size_t>(k);
}

GroverTrace grover_run(const GroverSpec& spec, const GridSpec& grid) {
  const auto target = indicator_state(grid, spec.target, spec.width);
  const auto start = momentum_indicator_state(grid, spec.initial_momentum, spec.width);

  GroverTrace trace;
  const Complex overlap0 = inner_product(target, start);
  trace.initial_overlap = std::abs(overlap0);
  if (trace.initial_overlap < 1e-12)
    throw Error("target indicator has numerically zero overlap with the start state");

  // orthonormal basis of span{start, target}
  Wavefunction second = target;
  {
    auto amps = second.raw();
    const auto base = start.raw();
    const Complex c = overlap0 * std::polar(1.0, start.global_phase() - second.global_phase());
    for (std::size_t i = 0; i < amps.size(); ++i) amps[i] -= c * base[i];
    second.normalize();
  }

  Wavefunction psi = start;
  auto record = [&](std::size_t k) {
    const double s = std::norm(inner_product(target, psi));
    trace.success.push_back(s);
    trace.predicted.push_back(two_level_prediction(std::min(1.0, trace.initial_overlap), k));
    const double n2 = psi.norm_squared();
    trace.norm.push_back(std::sqrt(n2));
    const double inside = std::norm(inner_product(start, psi)) + std::norm(inner_product(second, psi));
    trace.max_orthogonal_leak = std::max(trace.max_orthogonal_leak, std::max(0.0, n2 - inside));
  };
  record(0);
  for (std::size_t k = 1; k <= spec.iterations; ++k) {
    apply_projector_phase(psi, target, std::numbers::pi);
    apply_projector_phase(psi, start, std::numbers::pi);
    record(k);
  }
  return trace;
}

} // namespace cvqaoa
