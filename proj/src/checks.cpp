#include "cvqaoa/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "cvqaoa/error.hpp"
#include "cvqaoa/experiments.hpp"
#include "cvqaoa/grover.hpp"
#include "cvqaoa/observables.hpp"
#include "cvqaoa/potentials.hpp"
#include "cvqaoa/propagators.hpp"
#include "cvqaoa/qaoa.hpp"
#include "cvqaoa/sampling.hpp"
#include "cvqaoa/spectral.hpp"

namespace cvqaoa {
namespace {

constexpr double pi = std::numbers::pi;

CheckLine below(std::string label, double value, double limit) {
  return {std::move(label), value, limit, std::isfinite(value) && value < limit};
}

CheckLine at_least(std::string label, double value, double limit) {
  return {std::move(label), value, limit, std::isfinite(value) && value >= limit};
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

CheckReport heisenberg() {
  CheckReport r{"heisenberg", {}};
  const auto grid = make_grid({{16.0, 512}});
  GaussianParams g;
  g.center_position = {1.0};
  g.center_momentum = {0.5};
  const auto psi = gaussian_state(grid, g);
  const CostSpec quadratic(1, {Monomial{0.5, {2}}, Monomial{0.3, {1}}});
  const auto st = styblinski_tang(1);
  r.lines.push_back(below("quadratic, kinetic, eta=gamma=0.1", max_abs(heisenberg_residual(psi, quadratic, 0.1, 0.1)), 1e-6));
  r.lines.push_back(below("quartic (Styblinski-Tang), kinetic, eta=gamma=0.01", max_abs(heisenberg_residual(psi, st, 0.01, 0.01)), 1e-6));
  g.squeezing = {-0.5};
  const auto narrow = gaussian_state(grid, g);
  r.lines.push_back(below("quartic, squeezed input, eta=gamma=0.05", max_abs(heisenberg_residual(narrow, st, 0.05, 0.05)), 1e-6));
  return r;
}

Wavefunction random_state(const GridSpec& grid, std::mt19937_64& rng) {
  // random superposition of a few Gaussians, well inside the grid
  Wavefunction psi(grid);
  std::vector<double> x(grid.dimension());
  std::vector<double> c(grid.dimension()), p(grid.dimension());
  for (int blob = 0; blob < 3; ++blob) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] = (uniform_open(rng) - 0.5) * grid.axis(i).half_extent * 0.5;
      p[i] = (uniform_open(rng) - 0.5) * 4.0;
    }
    const Complex w = std::polar(uniform_open(rng) + 0.2, 2 * pi * uniform_open(rng));
    auto amps = psi.raw();
    for (std::size_t f = 0; f < grid.size(); ++f) {
      grid.coordinates(f, x);
      double e = 0.0, ph = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        e -= (x[i] - c[i]) * (x[i] - c[i]) / 2.0;
        ph += p[i] * x[i];
      }
      amps[f] += w * std::polar(std::exp(e), ph);
    }
  }
  psi.normalize();
  return psi;
}

CheckReport parseval() {
  CheckReport r{"parseval", {}};
  std::mt19937_64 rng(7);
  const auto grid = make_grid({{10.0, 128}, {10.0, 64}});
  const auto st = styblinski_tang(2);
  const auto table = tabulate(st, grid);
  double parseval_err = 0.0, gate_err = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    auto psi = random_state(grid, rng);
    auto b = momentum_amplitudes(psi);
    double nb = 0.0;
    for (const auto& v : b) nb += std::norm(v);
    parseval_err = std::max(parseval_err, std::abs(nb * grid.cell_volume() - psi.norm_squared()));
    for (int k = 0; k < 10; ++k) {
      const double angle = (uniform_open(rng) - 0.5) * 0.2;
      const double before = psi.norm_squared();
      switch (k % 4) {
        case 0: apply_cost_phase(psi, table, angle); break;
        case 1: apply_kinetic_mixer(psi, angle); break;
        case 2: apply_number_mixer(psi, angle * 10.0); break;
        case 3: fourier_transform_in_place(psi, (k / 4) % 2 == 1); break;
      }
      gate_err = std::max(gate_err, std::abs(psi.norm_squared() - before));
    }
  }
  r.lines.push_back(below("Parseval |norm_p - norm_x|", parseval_err, 1e-10));
  r.lines.push_back(below("gate norm change (100 applications)", gate_err, 1e-10));
  return r;
}

CheckReport grover_model() {
  CheckReport r{"grover-model", {}};
  const auto grid = make_self_dual_grid(1, 4096);
  GroverSpec spec{{2.0}, 0.075, {0.0}, 12};
  const auto trace = grover_run(spec, grid);
  const auto k_opt = first_maximum_iteration(trace.initial_overlap);
  double worst = 0.0, peak = 0.0, norm_err = 0.0;
  for (std::size_t k = 0; k <= std::min(k_opt, spec.iterations); ++k)
    worst = std::max(worst, std::abs(trace.success[k] - trace.predicted[k]));
  for (std::size_t k = 0; k < trace.success.size(); ++k) {
    peak = std::max(peak, trace.success[k]);
    norm_err = std::max(norm_err, std::abs(trace.norm[k] - 1.0));
  }
  r.lines.push_back(at_least("initial overlap a >= 0.05", trace.initial_overlap, 0.05));
  r.lines.push_back(below("initial overlap a <= 0.2", trace.initial_overlap, 0.2 + 1e-15));
  r.lines.push_back(below("max |trace - two-level model| up to first maximum", worst, 0.05));
  r.lines.push_back(at_least("peak success probability", peak, 0.9));
  r.lines.push_back(below("norm drift", norm_err, 1e-10));
  r.lines.push_back(below("weight outside span{start, target}", trace.max_orthogonal_leak, 1e-8));
  return r;
}

CheckReport pubo_oracle() {
  CheckReport r{"pubo-oracle", {}};
  // two-variable QUBOs with coefficients in {-1, 0, 1} on Z1, Z2, Z1Z2
  const std::vector<std::vector<std::uint8_t>> supports{{1, 0}, {0, 1}, {1, 1}};
  std::size_t ok = 0, total = 0;
  for (int code = 0; code < 27; ++code) {
    std::vector<BinaryTerm> terms;
    int c = code;
    for (const auto& s : supports) {
      const int alpha = c % 3 - 1;
      c /= 3;
      if (alpha != 0) terms.push_back({static_cast<double>(alpha), s});
    }
    double best = 1e300;
    for (std::uint8_t b0 = 0; b0 < 2; ++b0)
      for (std::uint8_t b1 = 0; b1 < 2; ++b1) {
        const std::uint8_t bits[2] = {b0, b1};
        best = std::min(best, binary_cost(terms, bits));
      }
    const auto decoded = solve_pubo(2, terms, 500, 11);
    ++total;
    if (std::abs(binary_cost(terms, decoded.most_frequent) - best) < 1e-12) ++ok;
  }
  r.lines.push_back(at_least("fraction of 2-variable instances solved", static_cast<double>(ok) / total, 0.9));
  return r;
}

CheckReport gradient_fd() {
  CheckReport r{"gradient-fd", {}};
  std::mt19937_64 rng(3);
  const std::size_t n = 3;
  const Polynomial g(n, {Monomial{1.0, {1, 0, 0}}, Monomial{0.5, {0, 2, 1}}});
  const Polynomial h(n, {Monomial{1.0, {2, 0, 0}}, Monomial{-1.0, {0, 0, 1}}});
  const std::vector<Term> terms{Monomial{0.7, {2, 1, 3}}, EqualityPenalty{g, 1.0, 10.0}, InequalityPenalty{h, 0.5, 5.0},
                                PuboPlateau{-1.0, {1, 0, 1}, 2.0}, DoubleWell{1.0, 1.5}};
  double worst = 0.0;
  for (const auto& term : terms) {
    const CostSpec cost(n, {term});
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<double> x(n);
      for (auto& v : x) v = (uniform_open(rng) - 0.5) * 4.0;
      const auto grad = gradient(cost, x);
      for (std::size_t i = 0; i < n; ++i) {
        const double step = 1e-5;
        auto xp = x, xm = x;
        xp[i] += step;
        xm[i] -= step;
        const double fd = (evaluate(cost, xp) - evaluate(cost, xm)) / (2 * step);
        const double err = std::abs(fd - grad[i]);
        const double scale = std::max(std::abs(grad[i]), 1e-3);
        worst = std::max(worst, err / scale);
      }
    }
  }
  r.lines.push_back(below("max relative |analytic - central difference|", worst, 1e-5));
  return r;
}

CheckReport iqp() {
  CheckReport r{"iqp", {}};
  const auto grid = make_self_dual_grid(1, 512);
  GaussianParams g;
  g.squeezing = {0.5};
  auto psi = gaussian_state(grid, g);
  const CostSpec cubic(1, {Monomial{0.1, {3}}, Monomial{0.2, {2}}});
  apply_cost_phase(psi, cubic, 1.0);
  const auto fit = fit_fourier_angle(psi, pi / 4, 3 * pi / 4);
  r.lines.push_back(below("|fitted angle - pi/2|", std::abs(fit.angle - pi / 2), 1e-4));
  r.lines.push_back(below("1 - fidelity(number mixer, F o cost phase)", 1.0 - fit.fidelity, 1e-6));
  return r;
}

} // namespace

bool CheckReport::passed() const {
  return !lines.empty() && std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; });
}

const std::vector<std::string>& check_suites() {
  static const std::vector<std::string> names{"heisenberg", "parseval", "grover-model", "pubo-oracle", "gradient-fd", "iqp"};
  return names;
}

CheckReport run_check(const std::string& suite) {
  if (suite == "heisenberg") return heisenberg();
  if (suite == "parseval") return parseval();
  if (suite == "grover-model") return grover_model();
  if (suite == "pubo-oracle") return pubo_oracle();
  if (suite == "gradient-fd") return gradient_fd();
  if (suite == "iqp") return iqp();
  throw InvalidArgument("unknown check suite '" + suite + "'");
}

} // namespace cvqaoa
