#include "cvqaoa/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "cvqaoa/error.hpp"

namespace cvqaoa {
namespace {

struct PlanDeleter {
  void operator()(fftw_plan_s* plan) const { fftw_destroy_plan(plan); }
};
using Plan = std::unique_ptr<fftw_plan_s, PlanDeleter>;

struct CachedTransform {
  Plan forward;
  Plan backward;
  std::vector<double> checkerboard;  // (-1)^{sum of indices}
};

// FFTW planning is not thread-safe; execution on distinct arrays is.
std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

const CachedTransform& transform_for(const GridSpec& grid) {
  static std::map<std::vector<std::size_t>, CachedTransform> cache;
  std::vector<std::size_t> dims;
  for (const auto& a : grid.axes()) dims.push_back(a.points);

  std::lock_guard lock(plan_mutex());
  auto it = cache.find(dims);
  if (it != cache.end()) return it->second;

  std::vector<int> n(dims.begin(), dims.end());
  const auto total = grid.size();
  auto* scratch = fftw_alloc_complex(total);
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  CachedTransform t;
  t.forward.reset(fftw_plan_dft(static_cast<int>(n.size()), n.data(), scratch, scratch, FFTW_FORWARD, flags));
  t.backward.reset(fftw_plan_dft(static_cast<int>(n.size()), n.data(), scratch, scratch, FFTW_BACKWARD, flags));
  fftw_free(scratch);
  if (!t.forward || !t.backward) throw Error("FFTW failed to create a plan");

  t.checkerboard.resize(total);
  std::vector<std::size_t> idx(dims.size());
  for (std::size_t flat = 0; flat < total; ++flat) {
    grid.unflatten(flat, idx);
    std::size_t parity = 0;
    for (auto m : idx) parity += m;
    t.checkerboard[flat] = (parity % 2 == 0) ? 1.0 : -1.0;
  }
  return cache.emplace(std::move(dims), std::move(t)).first->second;
}

} // namespace

void lattice_fourier(const GridSpec& grid, std::span<Complex> data, bool inverse) {
  if (data.size() != grid.size()) throw InvalidArgument("transform buffer does not match the grid");
  const auto& t = transform_for(grid);
  // With M/2 even, exp(-i k_j x_m) = (-1)^{j+m} exp(-2 pi i j m / M).
  for (std::size_t i = 0; i < data.size(); ++i) data[i] *= t.checkerboard[i];
  auto* buffer = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(inverse ? t.backward.get() : t.forward.get(), buffer, buffer);
  const double scale = 1.0 / std::sqrt(static_cast<double>(data.size()));
  for (std::size_t i = 0; i < data.size(); ++i) data[i] *= t.checkerboard[i] * scale;
}

std::vector<Complex> momentum_amplitudes(const Wavefunction& psi) {
  std::vector<Complex> b(psi.raw().begin(), psi.raw().end());
  lattice_fourier(psi.grid(), b, false);
  return b;
}

std::vector<double> momentum_squared(const GridSpec& grid) {
  std::vector<double> k2(grid.size(), 0.0);
  std::vector<std::size_t> idx(grid.dimension());
  for (std::size_t flat = 0; flat < grid.size(); ++flat) {
    grid.unflatten(flat, idx);
    double s = 0.0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const double k = grid.axis(i).momentum(idx[i]);
      s += k * k;
    }
    k2[flat] = s;
  }
  return k2;
}

} // namespace cvqaoa
