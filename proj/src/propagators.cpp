#include "cvqaoa/propagators.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cvqaoa/error.hpp"
#include "cvqaoa/spectral.hpp"

namespace cvqaoa {
namespace {

constexpr double pi = std::numbers::pi;

// Multiplies data by prod_i exp(-i scale * table[i][m_i]).
void apply_separable_phase(const GridSpec& grid, std::span<Complex> data,
                           const std::vector<std::vector<double>>& table, double scale) {
  const std::size_t n = grid.dimension();
  std::vector<std::vector<Complex>> factors(n);
  for (std::size_t i = 0; i < n; ++i) {
    factors[i].resize(table[i].size());
    for (std::size_t m = 0; m < table[i].size(); ++m) factors[i][m] = std::polar(1.0, -scale * table[i][m]);
  }
  const std::size_t inner = grid.axis(n - 1).points;
  const auto& last = factors[n - 1];
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t base = 0; base < data.size(); base += inner) {
    Complex outer = 1.0;
    for (std::size_t i = 0; i + 1 < n; ++i) outer *= factors[i][idx[i]];
    for (std::size_t m = 0; m < inner; ++m) data[base + m] *= outer * last[m];
    for (std::size_t i = n - 1; i-- > 0;) {
      if (++idx[i] < grid.axis(i).points) break;
      idx[i] = 0;
    }
  }
}

// Largest |scale*(table[i][m+1]-table[i][m])| over axis-neighbours that are both occupied.
double max_separable_step(const GridSpec& grid, std::span<const Complex> data,
                          const std::vector<std::vector<double>>& table, double scale, double occupancy) {
  const double dv = grid.cell_volume();
  double worst = 0.0;
  std::vector<std::size_t> idx(grid.dimension());
  for (std::size_t flat = 0; flat < data.size(); ++flat) {
    if (std::norm(data[flat]) * dv < occupancy) continue;
    grid.unflatten(flat, idx);
    for (std::size_t i = 0; i < grid.dimension(); ++i) {
      if (idx[i] + 1 >= grid.axis(i).points) continue;
      if (std::norm(data[flat + grid.stride(i)]) * dv < occupancy) continue;
      worst = std::max(worst, std::abs(scale * (table[i][idx[i] + 1] - table[i][idx[i]])));
    }
  }
  return worst;
}

std::vector<std::vector<double>> half_square_positions(const GridSpec& grid) {
  std::vector<std::vector<double>> t(grid.dimension());
  for (std::size_t i = 0; i < grid.dimension(); ++i) {
    const auto& a = grid.axis(i);
    t[i].resize(a.points);
    for (std::size_t m = 0; m < a.points; ++m) t[i][m] = 0.5 * a.position(m) * a.position(m);
  }
  return t;
}

std::vector<std::vector<double>> half_square_momenta(const GridSpec& grid) {
  std::vector<std::vector<double>> t(grid.dimension());
  for (std::size_t i = 0; i < grid.dimension(); ++i) {
    const auto& a = grid.axis(i);
    t[i].resize(a.points);
    for (std::size_t j = 0; j < a.points; ++j) t[i][j] = 0.5 * a.momentum(j) * a.momentum(j);
  }
  return t;
}

void chirp(Wavefunction& psi, const std::vector<std::vector<double>>& table, double scale,
           ResolutionMonitor* monitor) {
  if (scale == 0.0) return;
  if (monitor) monitor->record(max_separable_step(psi.grid(), psi.raw(), table, scale, monitor->occupancy));
  apply_separable_phase(psi.grid(), psi.raw(), table, scale);
}

// exp(-i scale p^2/2) through the momentum representation.
void momentum_chirp(Wavefunction& psi, const std::vector<std::vector<double>>& table, double scale,
                    ResolutionMonitor* monitor) {
  if (scale == 0.0) return;
  lattice_fourier(psi.grid(), psi.raw(), false);
  if (monitor) monitor->record(max_separable_step(psi.grid(), psi.raw(), table, scale, monitor->occupancy));
  apply_separable_phase(psi.grid(), psi.raw(), table, scale);
  lattice_fourier(psi.grid(), psi.raw(), true);
}

} // namespace

const char* to_string(MixerKind kind) {
  switch (kind) {
    case MixerKind::Kinetic: return "kinetic";
    case MixerKind::Number: return "number";
    case MixerKind::Projector: return "projector";
  }
  return "unknown";
}

MixerKind parse_mixer(const std::string& name) {
  if (name == "kinetic") return MixerKind::Kinetic;
  if (name == "number") return MixerKind::Number;
  if (name == "projector") return MixerKind::Projector;
  throw InvalidArgument("unknown mixer '" + name + "' (expected kinetic or number)");
}

bool ResolutionMonitor::aliased() const { return max_phase_step > pi; }

void apply_cost_phase(Wavefunction& psi, std::span<const double> cost_table, double eta,
                      ResolutionMonitor* monitor) {
  if (cost_table.size() != psi.size()) throw InvalidArgument("cost table does not match the state's grid");
  if (eta == 0.0) return;
  auto amps = psi.raw();
  const auto& grid = psi.grid();
  if (monitor) {
    const double dv = grid.cell_volume();
    std::vector<std::size_t> idx(grid.dimension());
    for (std::size_t flat = 0; flat < amps.size(); ++flat) {
      if (std::norm(amps[flat]) * dv < monitor->occupancy) continue;
      grid.unflatten(flat, idx);
      for (std::size_t i = 0; i < grid.dimension(); ++i) {
        if (idx[i] + 1 >= grid.axis(i).points) continue;
        const auto next = flat + grid.stride(i);
        if (std::norm(amps[next]) * dv < monitor->occupancy) continue;
        monitor->record(std::abs(eta * (cost_table[next] - cost_table[flat])));
      }
    }
  }
  for (std::size_t i = 0; i < amps.size(); ++i) amps[i] *= std::polar(1.0, -eta * cost_table[i]);
}

void apply_cost_phase(Wavefunction& psi, const CostSpec& cost, double eta, ResolutionMonitor* monitor) {
  check_phase_range(cost, psi.grid(), eta);
  const auto table = tabulate(cost, psi.grid());
  apply_cost_phase(psi, table, eta, monitor);
}

void apply_kinetic_mixer(Wavefunction& psi, double gamma, ResolutionMonitor* monitor) {
  if (gamma == 0.0) return;
  momentum_chirp(psi, half_square_momenta(psi.grid()), gamma, monitor);
}

void apply_number_mixer(Wavefunction& psi, double gamma, ResolutionMonitor* monitor) {
  if (gamma == 0.0) return;
  std::size_t pieces = 1;
  if (std::abs(gamma) >= pi / 2.0) pieces = static_cast<std::size_t>(std::ceil(std::abs(gamma) / (pi / 4.0)));
  const double sub = gamma / static_cast<double>(pieces);
  const auto xx = half_square_positions(psi.grid());
  const auto kk = half_square_momenta(psi.grid());
  const double t = std::tan(sub / 2.0);
  const double s = std::sin(sub);
  for (std::size_t p = 0; p < pieces; ++p) {
    chirp(psi, xx, t, monitor);
    momentum_chirp(psi, kk, s, monitor);
    chirp(psi, xx, t, monitor);
  }
  psi.add_global_phase(gamma * static_cast<double>(psi.grid().dimension()) / 2.0);
}

void apply_mixer(Wavefunction& psi, MixerKind kind, double gamma, ResolutionMonitor* monitor) {
  switch (kind) {
    case MixerKind::Kinetic: apply_kinetic_mixer(psi, gamma, monitor); return;
    case MixerKind::Number: apply_number_mixer(psi, gamma, monitor); return;
    case MixerKind::Projector:
      throw InvalidArgument("the projector mixer needs a reference state; use apply_projector_phase");
  }
}

void fourier_transform_in_place(Wavefunction& psi, bool inverse) { lattice_fourier(psi.grid(), psi.raw(), inverse); }

Wavefunction fourier_transform(const Wavefunction& psi, bool inverse) {
  Wavefunction out = psi;
  fourier_transform_in_place(out, inverse);
  return out;
}

void apply_projector_phase(Wavefunction& psi, const Wavefunction& phi, double theta) {
  if (theta == 0.0) return;
  const Complex overlap = inner_product(phi, psi);
  const Complex coeff =
      (std::polar(1.0, -theta) - 1.0) * overlap * std::polar(1.0, phi.global_phase() - psi.global_phase());
  auto amps = psi.raw();
  const auto ref = phi.raw();
  for (std::size_t i = 0; i < amps.size(); ++i) amps[i] += coeff * ref[i];
}

} // namespace cvqaoa

namespace cvqaoa {

FourierAngleFit fit_fourier_angle(const Wavefunction& psi, double lo, double hi, double tolerance) {
  const auto target = fourier_transform(psi);
  auto score = [&](double angle) {
    Wavefunction rotated = psi;
    apply_number_mixer(rotated, angle);
    return fidelity(target, rotated);
  };
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - ratio * (b - a), d = a + ratio * (b - a);
  double fc = score(c), fd = score(d);
  while (b - a > tolerance) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - ratio * (b - a);
      fc = score(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + ratio * (b - a);
      fd = score(d);
    }
  }
  const double angle = 0.5 * (a + b);
  return {angle, score(angle)};
}

} // namespace cvqaoa
