#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace cvqaoa {

/// One axis of the position lattice: points x_m = -L + m*dx, dx = 2L/M.
struct AxisSpec {
  double half_extent = 0.0;
  std::size_t points = 0;

  double spacing() const { return 2.0 * half_extent / static_cast<double>(points); }
  double position(std::size_t m) const { return -half_extent + static_cast<double>(m) * spacing(); }
  /// Momentum lattice spacing 2*pi/(M*dx).
  double momentum_spacing() const;
  /// Momentum of lattice index j, k = dk * (j - M/2); covers [-pi/dx, pi/dx).
  double momentum(std::size_t j) const;
};

/// Uniform N-dimensional position lattice. Amplitude arrays are row-major with
/// axis 0 slowest.
class GridSpec {
public:
  GridSpec() = default;
  explicit GridSpec(std::vector<AxisSpec> axes);

  std::size_t dimension() const { return axes_.size(); }
  const AxisSpec& axis(std::size_t i) const { return axes_.at(i); }
  const std::vector<AxisSpec>& axes() const { return axes_; }
  std::size_t size() const { return size_; }
  /// Product of the per-axis spacings.
  double cell_volume() const { return cell_volume_; }

  std::size_t stride(std::size_t axis) const { return strides_.at(axis); }
  /// Multi-index of a flat index.
  void unflatten(std::size_t flat, std::span<std::size_t> index) const;
  /// Position coordinates of a flat index.
  void coordinates(std::size_t flat, std::span<double> x) const;
  std::vector<double> coordinates(std::size_t flat) const;
  /// Nearest lattice index along an axis (clamped to the lattice).
  std::size_t nearest_index(std::size_t axis, double x) const;

  bool operator==(const GridSpec& other) const;

private:
  std::vector<AxisSpec> axes_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 0;
  double cell_volume_ = 0.0;
};

/// Validates and builds a grid from (half_extent, points) pairs. Points must be
/// a power of two >= 8 and extents positive.
GridSpec make_grid(const std::vector<std::pair<double, std::size_t>>& axes);

/// Grid whose momentum lattice coincides with the position lattice
/// (dx = sqrt(2*pi/M)), on which the lattice Fourier transform is the
/// continuum one.
GridSpec make_self_dual_grid(std::size_t dimension, std::size_t points);

} // namespace cvqaoa
