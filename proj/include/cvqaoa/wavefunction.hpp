#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "cvqaoa/grid.hpp"

namespace cvqaoa {

using Complex = std::complex<double>;

/// Complex amplitudes psi(x) over a GridSpec, in the position representation.
///
/// A global phase is kept as a separate scalar so that gates contributing only
/// a global phase (the -1/2 of the number operator) stay exact and cheap;
/// `amplitude()` and the inner products fold it in.
class Wavefunction {
public:
  Wavefunction() = default;
  explicit Wavefunction(GridSpec grid);
  Wavefunction(GridSpec grid, std::vector<Complex> amplitudes, double global_phase = 0.0);

  const GridSpec& grid() const { return grid_; }
  std::size_t size() const { return amplitudes_.size(); }

  /// Stored amplitudes, without the global phase factor.
  std::span<Complex> raw() { return amplitudes_; }
  std::span<const Complex> raw() const { return amplitudes_; }

  double global_phase() const { return global_phase_; }
  void add_global_phase(double theta) { global_phase_ += theta; }
  /// Multiplies the global phase into the stored amplitudes and resets it.
  void fold_global_phase();

  Complex amplitude(std::size_t flat) const;
  /// Sum |psi|^2 times the cell volume.
  double norm_squared() const;
  void normalize();
  /// Per-cell probabilities |psi(x)|^2 * cell_volume.
  std::vector<double> cell_probabilities() const;

private:
  GridSpec grid_;
  std::vector<Complex> amplitudes_;
  double global_phase_ = 0.0;
};

/// <a|b> on the grid (cell-volume weighted). Grids must match.
Complex inner_product(const Wavefunction& a, const Wavefunction& b);
/// |<a|b>| for unit-norm states.
double fidelity(const Wavefunction& a, const Wavefunction& b);

/// Gaussian state parameters per axis. Empty vectors mean zero.
/// Position variance e^{2r}/2, momentum variance e^{-2r}/2 (hbar = 1, vacuum 1/2);
/// r > 0 squeezes momentum.
struct GaussianParams {
  std::vector<double> center_position;
  std::vector<double> center_momentum;
  std::vector<double> squeezing;
};

double squeezed_position_variance(double r);

/// psi(x) ~ exp(-sum (x-x0)^2/(4 sigma_x^2) + i p0.x), normalised on the grid.
/// Throws NumericalGuardError(Leakage) if |x0| + 4 sigma_x exceeds an axis half extent.
Wavefunction gaussian_state(const GridSpec& grid, const GaussianParams& params);

/// Probability in the outer `band_fraction` of any axis (each band holds
/// round(band_fraction * M) points, at least one). Requires 0 < band_fraction < 0.5.
double boundary_mass(const Wavefunction& psi, double band_fraction = 0.05);

/// Probability density over a subset of axes, integrated over the rest.
struct Marginal {
  std::vector<std::size_t> axes;   ///< kept axes of the source grid, ascending
  std::vector<std::size_t> shape;  ///< points per kept axis
  std::vector<double> spacing;     ///< dx per kept axis
  std::vector<double> values;      ///< row-major density

  double cell_volume() const;
  /// Sum of values times cell volume (1 for a normalised source).
  double total() const;
};

Marginal marginal(const Wavefunction& psi, std::vector<std::size_t> axis_subset);
/// Marginalises an existing marginal further. `axis_subset` indexes the source
/// grid's axes and must be a subset of `m.axes`.
Marginal marginal(const Marginal& m, std::vector<std::size_t> axis_subset);

} // namespace cvqaoa
