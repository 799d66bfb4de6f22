#pragma once

#include <span>

#include "cvqaoa/potentials.hpp"
#include "cvqaoa/wavefunction.hpp"

namespace cvqaoa {

enum class MixerKind {
  Kinetic,   ///< exp(-i gamma p^2/2)
  Number,    ///< exp(-i gamma n), n = (x^2 + p^2 - 1)/2 per mode
  Projector  ///< rank-one phase, used by the Grover variant only
};

const char* to_string(MixerKind kind);
MixerKind parse_mixer(const std::string& name);

/// Tracks the largest phase change between neighbouring lattice points where
/// both carry at least `occupancy` probability. Steps above pi mean the gate
/// is not resolved by the grid (aliasing).
struct ResolutionMonitor {
  double occupancy = 1e-10;
  double max_phase_step = 0.0;
  void record(double step) {
    if (step > max_phase_step) max_phase_step = step;
  }
  bool aliased() const;
};

/// psi(x) <- exp(-i eta f(x)) psi(x), with f given on the grid.
void apply_cost_phase(Wavefunction& psi, std::span<const double> cost_table, double eta,
                      ResolutionMonitor* monitor = nullptr);
/// Tabulates `cost` on psi's grid first; rejects meaningless phases.
void apply_cost_phase(Wavefunction& psi, const CostSpec& cost, double eta, ResolutionMonitor* monitor = nullptr);

/// exp(-i gamma p^2/2) applied in the momentum representation.
void apply_kinetic_mixer(Wavefunction& psi, double gamma, ResolutionMonitor* monitor = nullptr);

/// exp(-i gamma n) as a phase-space rotation, using the shear factorisation
///   exp(-i t x^2/2) exp(-i s p^2/2) exp(-i t x^2/2),  t = tan(g/2), s = sin(g)
/// and the global phase exp(+i gamma N/2). Angles with |gamma| >= pi/2 are split
/// into equal sub-rotations of at most pi/4, so any angle is accepted.
void apply_number_mixer(Wavefunction& psi, double gamma, ResolutionMonitor* monitor = nullptr);

void apply_mixer(Wavefunction& psi, MixerKind kind, double gamma, ResolutionMonitor* monitor = nullptr);

/// Tensor product of centred unitary lattice Fourier transforms.
void fourier_transform_in_place(Wavefunction& psi, bool inverse = false);
Wavefunction fourier_transform(const Wavefunction& psi, bool inverse = false);

/// exp(-i theta |phi><phi|) psi = psi + (e^{-i theta} - 1) <phi|psi> phi. phi must be unit norm.
void apply_projector_phase(Wavefunction& psi, const Wavefunction& phi, double theta);

} // namespace cvqaoa

namespace cvqaoa {

struct FourierAngleFit {
  double angle = 0.0;
  double fidelity = 0.0;
};

/// Number-mixer angle in [lo, hi] whose rotation best reproduces the lattice
/// Fourier transform of `psi` (golden-section search on the fidelity).
FourierAngleFit fit_fourier_angle(const Wavefunction& psi, double lo, double hi, double tolerance = 1e-9);

} // namespace cvqaoa
