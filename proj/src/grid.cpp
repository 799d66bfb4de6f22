#include "cvqaoa/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cvqaoa/error.hpp"

namespace cvqaoa {

double AxisSpec::momentum_spacing() const {
  return 2.0 * std::numbers::pi / (static_cast<double>(points) * spacing());
}

double AxisSpec::momentum(std::size_t j) const {
  return momentum_spacing() * (static_cast<double>(j) - static_cast<double>(points / 2));
}

GridSpec::GridSpec(std::vector<AxisSpec> axes) : axes_(std::move(axes)) {
  if (axes_.empty()) throw InvalidArgument("grid needs at least one axis");
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    const auto& a = axes_[i];
    if (!(a.half_extent > 0.0) || !std::isfinite(a.half_extent))
      throw InvalidArgument("axis " + std::to_string(i) + ": half extent must be positive");
    if (a.points < 8 || (a.points & (a.points - 1)) != 0)
      throw InvalidArgument("axis " + std::to_string(i) + ": points must be a power of two >= 8, got " +
                            std::to_string(a.points));
  }
  strides_.assign(axes_.size(), 1);
  for (std::size_t i = axes_.size() - 1; i > 0; --i) strides_[i - 1] = strides_[i] * axes_[i].points;
  size_ = strides_[0] * axes_[0].points;
  cell_volume_ = 1.0;
  for (const auto& a : axes_) cell_volume_ *= a.spacing();
}

void GridSpec::unflatten(std::size_t flat, std::span<std::size_t> index) const {
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    index[i] = flat / strides_[i];
    flat -= index[i] * strides_[i];
  }
}

void GridSpec::coordinates(std::size_t flat, std::span<double> x) const {
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    const std::size_t m = flat / strides_[i];
    flat -= m * strides_[i];
    x[i] = axes_[i].position(m);
  }
}

std::vector<double> GridSpec::coordinates(std::size_t flat) const {
  std::vector<double> x(axes_.size());
  coordinates(flat, x);
  return x;
}

std::size_t GridSpec::nearest_index(std::size_t axis, double x) const {
  const auto& a = axes_.at(axis);
  const double m = std::round((x + a.half_extent) / a.spacing());
  if (m <= 0.0) return 0;
  if (m >= static_cast<double>(a.points - 1)) return a.points - 1;
  return static_cast<std::size_t>(m);
}

bool GridSpec::operator==(const GridSpec& other) const {
  if (axes_.size() != other.axes_.size()) return false;
  for (std::size_t i = 0; i < axes_.size(); ++i)
    if (axes_[i].half_extent != other.axes_[i].half_extent || axes_[i].points != other.axes_[i].points)
      return false;
  return true;
}

GridSpec make_grid(const std::vector<std::pair<double, std::size_t>>& axes) {
  std::vector<AxisSpec> specs;
  specs.reserve(axes.size());
  for (const auto& [extent, points] : axes) specs.push_back({extent, points});
  return GridSpec(std::move(specs));
}

GridSpec make_self_dual_grid(std::size_t dimension, std::size_t points) {
  // dx = sqrt(2 pi / M)  =>  L = M dx / 2 = sqrt(pi M / 2)
  const double half_extent = std::sqrt(std::numbers::pi * static_cast<double>(points) / 2.0);
  return GridSpec(std::vector<AxisSpec>(dimension, AxisSpec{half_extent, points}));
}

} // namespace cvqaoa
