#pragma once

#include <span>
#include <vector>

#include "cvqaoa/grid.hpp"
#include "cvqaoa/wavefunction.hpp"

namespace cvqaoa {

/// Centred unitary lattice Fourier transform over all axes, in place:
///   b_j = M^{-1/2} sum_m a_m exp(-i k_j x_m)   (per axis, tensor product)
/// with both lattices centred (x_m = dx (m - M/2), k_j = dk (j - M/2)).
/// `b` is the momentum wavefunction scaled by sqrt(dk/dx), so probabilities
/// are |b_j|^2 times the position cell volume.
void lattice_fourier(const GridSpec& grid, std::span<Complex> data, bool inverse);

/// Momentum-representation amplitudes of psi (global phase not applied).
std::vector<Complex> momentum_amplitudes(const Wavefunction& psi);

/// Squared momentum magnitude |k|^2 at each flat lattice index.
std::vector<double> momentum_squared(const GridSpec& grid);

} // namespace cvqaoa
