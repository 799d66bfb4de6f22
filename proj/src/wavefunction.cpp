#include "cvqaoa/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cvqaoa/error.hpp"

namespace cvqaoa {

Wavefunction::Wavefunction(GridSpec grid) : grid_(std::move(grid)), amplitudes_(grid_.size()) {}

Wavefunction::Wavefunction(GridSpec grid, std::vector<Complex> amplitudes, double global_phase)
  : grid_(std::move(grid)), amplitudes_(std::move(amplitudes)), global_phase_(global_phase) {
  if (amplitudes_.size() != grid_.size())
    throw InvalidArgument("amplitude count " + std::to_string(amplitudes_.size()) +
                          " does not match grid size " + std::to_string(grid_.size()));
}

void Wavefunction::fold_global_phase() {
  if (global_phase_ == 0.0) return;
  const Complex factor = std::polar(1.0, global_phase_);
  for (auto& a : amplitudes_) a *= factor;
  global_phase_ = 0.0;
}

Complex Wavefunction::amplitude(std::size_t flat) const {
  return amplitudes_.at(flat) * std::polar(1.0, global_phase_);
}

double Wavefunction::norm_squared() const {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return sum * grid_.cell_volume();
}

void Wavefunction::normalize() {
  const double n2 = norm_squared();
  if (!(n2 > 0.0) || !std::isfinite(n2)) throw InvalidArgument("cannot normalise a state with norm " + std::to_string(n2));
  const double scale = 1.0 / std::sqrt(n2);
  for (auto& a : amplitudes_) a *= scale;
}

std::vector<double> Wavefunction::cell_probabilities() const {
  std::vector<double> p(amplitudes_.size());
  const double dv = grid_.cell_volume();
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(amplitudes_[i]) * dv;
  return p;
}

Complex inner_product(const Wavefunction& a, const Wavefunction& b) {
  if (!(a.grid() == b.grid())) throw InvalidArgument("inner product of states on different grids");
  Complex sum = 0.0;
  const auto ra = a.raw();
  const auto rb = b.raw();
  for (std::size_t i = 0; i < ra.size(); ++i) sum += std::conj(ra[i]) * rb[i];
  return sum * a.grid().cell_volume() * std::polar(1.0, b.global_phase() - a.global_phase());
}

double fidelity(const Wavefunction& a, const Wavefunction& b) { return std::abs(inner_product(a, b)); }

double squeezed_position_variance(double r) { return std::exp(2.0 * r) / 2.0; }

namespace {

double component(const std::vector<double>& v, std::size_t i, const char* name) {
  if (v.empty()) return 0.0;
  if (i >= v.size()) throw InvalidArgument(std::string("Gaussian ") + name + " has fewer components than the grid");
  return v[i];
}

} // namespace

Wavefunction gaussian_state(const GridSpec& grid, const GaussianParams& params) {
  const std::size_t n = grid.dimension();
  for (const auto* v : {&params.center_position, &params.center_momentum, &params.squeezing})
    if (!v->empty() && v->size() != n)
      throw InvalidArgument("Gaussian parameters must have " + std::to_string(n) + " components");

  std::vector<double> x0(n), p0(n), var(n);
  for (std::size_t i = 0; i < n; ++i) {
    x0[i] = component(params.center_position, i, "center");
    p0[i] = component(params.center_momentum, i, "momentum");
    var[i] = squeezed_position_variance(component(params.squeezing, i, "squeezing"));
    const double reach = std::abs(x0[i]) + 4.0 * std::sqrt(var[i]);
    if (reach > grid.axis(i).half_extent)
      throw NumericalGuardError(GuardKind::Leakage,
                                "Gaussian on axis " + std::to_string(i) + " reaches " + std::to_string(reach) +
                                    " (center + 4 sigma_x) beyond half extent " +
                                    std::to_string(grid.axis(i).half_extent));
  }

  Wavefunction psi(grid);
  auto amps = psi.raw();
  std::vector<double> x(n);
  for (std::size_t flat = 0; flat < grid.size(); ++flat) {
    grid.coordinates(flat, x);
    double exponent = 0.0;
    double phase = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = x[i] - x0[i];
      exponent -= d * d / (4.0 * var[i]);
      phase += p0[i] * x[i];
    }
    amps[flat] = std::polar(std::exp(exponent), phase);
  }
  psi.normalize();
  return psi;
}

double boundary_mass(const Wavefunction& psi, double band_fraction) {
  if (!(band_fraction > 0.0 && band_fraction < 0.5))
    throw InvalidArgument("band fraction must lie in (0, 0.5), got " + std::to_string(band_fraction));
  const auto& grid = psi.grid();
  const std::size_t n = grid.dimension();
  std::vector<std::size_t> band(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto points = grid.axis(i).points;
    band[i] = std::clamp<std::size_t>(static_cast<std::size_t>(std::lround(band_fraction * static_cast<double>(points))),
                                      1, points / 2);
  }
  std::vector<std::size_t> idx(n);
  double mass = 0.0;
  const auto amps = psi.raw();
  for (std::size_t flat = 0; flat < grid.size(); ++flat) {
    grid.unflatten(flat, idx);
    for (std::size_t i = 0; i < n; ++i) {
      if (idx[i] < band[i] || idx[i] >= grid.axis(i).points - band[i]) {
        mass += std::norm(amps[flat]);
        break;
      }
    }
  }
  return std::min(1.0, mass * grid.cell_volume());
}

double Marginal::cell_volume() const {
  double v = 1.0;
  for (double d : spacing) v *= d;
  return v;
}

double Marginal::total() const {
  double s = 0.0;
  for (double v : values) s += v;
  return s * cell_volume();
}

namespace {

// Integrates a row-major density of `shape` over the axes not flagged in `keep`.
std::vector<double> reduce(const std::vector<std::size_t>& shape, const std::vector<double>& spacing,
                           const std::vector<double>& values, const std::vector<bool>& keep) {
  const std::size_t n = shape.size();
  std::vector<std::size_t> out_stride(n, 0);
  std::size_t out_size = 1;
  for (std::size_t i = n; i-- > 0;) {
    if (keep[i]) {
      out_stride[i] = out_size;
      out_size *= shape[i];
    }
  }
  double dropped_volume = 1.0;
  for (std::size_t i = 0; i < n; ++i)
    if (!keep[i]) dropped_volume *= spacing[i];

  std::vector<double> out(out_size, 0.0);
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t flat = 0; flat < values.size(); ++flat) {
    std::size_t o = 0;
    for (std::size_t i = 0; i < n; ++i) o += idx[i] * out_stride[i];
    out[o] += values[flat];
    for (std::size_t i = n; i-- > 0;) {
      if (++idx[i] < shape[i]) break;
      idx[i] = 0;
    }
  }
  for (auto& v : out) v *= dropped_volume;
  return out;
}

std::vector<std::size_t> normalise_subset(std::vector<std::size_t> subset, std::size_t limit) {
  if (subset.empty()) throw InvalidArgument("marginal needs at least one axis");
  std::sort(subset.begin(), subset.end());
  if (std::adjacent_find(subset.begin(), subset.end()) != subset.end())
    throw InvalidArgument("marginal axes must be distinct");
  if (subset.back() >= limit) throw InvalidArgument("marginal axis " + std::to_string(subset.back()) + " out of range");
  return subset;
}

} // namespace

Marginal marginal(const Wavefunction& psi, std::vector<std::size_t> axis_subset) {
  const auto& grid = psi.grid();
  axis_subset = normalise_subset(std::move(axis_subset), grid.dimension());
  std::vector<std::size_t> shape;
  std::vector<double> spacing;
  for (const auto& a : grid.axes()) {
    shape.push_back(a.points);
    spacing.push_back(a.spacing());
  }
  std::vector<double> density(psi.size());
  const auto amps = psi.raw();
  for (std::size_t i = 0; i < density.size(); ++i) density[i] = std::norm(amps[i]);
  std::vector<bool> keep(grid.dimension(), false);
  for (auto a : axis_subset) keep[a] = true;

  Marginal m;
  m.axes = axis_subset;
  for (auto a : axis_subset) {
    m.shape.push_back(shape[a]);
    m.spacing.push_back(spacing[a]);
  }
  m.values = reduce(shape, spacing, density, keep);
  return m;
}

Marginal marginal(const Marginal& m, std::vector<std::size_t> axis_subset) {
  if (axis_subset.empty()) throw InvalidArgument("marginal needs at least one axis");
  std::sort(axis_subset.begin(), axis_subset.end());
  std::vector<bool> keep(m.axes.size(), false);
  for (auto a : axis_subset) {
    auto it = std::find(m.axes.begin(), m.axes.end(), a);
    if (it == m.axes.end()) throw InvalidArgument("axis " + std::to_string(a) + " is not part of this marginal");
    keep[static_cast<std::size_t>(it - m.axes.begin())] = true;
  }
  Marginal out;
  for (std::size_t i = 0; i < m.axes.size(); ++i) {
    if (keep[i]) {
      out.axes.push_back(m.axes[i]);
      out.shape.push_back(m.shape[i]);
      out.spacing.push_back(m.spacing[i]);
    }
  }
  out.values = reduce(m.shape, m.spacing, m.values, keep);
  return out;
}

} // namespace cvqaoa
