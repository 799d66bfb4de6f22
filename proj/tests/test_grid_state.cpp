#include <cmath>
#include <numbers>

#include "doctest.h"
#include "cvqaoa/error.hpp"
#include "cvqaoa/grid.hpp"
#include "cvqaoa/observables.hpp"
#include "cvqaoa/potentials.hpp"
#include "cvqaoa/wavefunction.hpp"

using namespace cvqaoa;
using doctest::Approx;

namespace {

double sum_sq(const Wavefunction& psi) {
  double s = 0.0;
  for (const auto& a : psi.raw()) s += std::norm(a);
  return s * psi.grid().cell_volume();
}

} // namespace

TEST_CASE("grid spacing and momentum lattice") {
  const auto g = make_grid({{8.0, 256}, {8.0, 256}});
  CHECK(g.dimension() == 2);
  CHECK(g.axis(0).spacing() == 0.0625);
  CHECK(g.axis(1).spacing() == 0.0625);
  CHECK(g.size() == 65536);
  CHECK(g.cell_volume() == Approx(0.0625 * 0.0625));
  CHECK(g.axis(0).position(0) == -8.0);
  CHECK(g.axis(0).position(255) == Approx(8.0 - 0.0625));

  const auto small = make_grid({{1.0, 8}});
  const auto& ax = small.axis(0);
  CHECK(ax.spacing() == 0.25);
  CHECK(ax.momentum(0) == Approx(-4.0 * std::numbers::pi).epsilon(1e-12));
  CHECK(ax.momentum(0) == Approx(-12.566).epsilon(1e-4));
  CHECK(ax.momentum(7) < 12.566);
  CHECK(ax.momentum(4) == 0.0);
  CHECK(ax.momentum_spacing() == Approx(2 * std::numbers::pi / (8 * 0.25)));
}

TEST_CASE("grid rejects bad axes") {
  CHECK_THROWS_AS(make_grid({{8.0, 100}}), InvalidArgument);
  CHECK_THROWS_AS(make_grid({{8.0, 4}}), InvalidArgument);
  CHECK_THROWS_AS(make_grid({{-1.0, 64}}), InvalidArgument);
  CHECK_THROWS_AS(make_grid({}), InvalidArgument);
}

TEST_CASE("flat index bookkeeping is row-major") {
  const auto g = make_grid({{2.0, 8}, {3.0, 16}});
  CHECK(g.stride(1) == 1);
  CHECK(g.stride(0) == 16);
  std::size_t idx[2];
  g.unflatten(3 * 16 + 5, idx);
  CHECK(idx[0] == 3);
  CHECK(idx[1] == 5);
  const auto x = g.coordinates(3 * 16 + 5);
  CHECK(x[0] == Approx(g.axis(0).position(3)));
  CHECK(x[1] == Approx(g.axis(1).position(5)));
  CHECK(g.nearest_index(0, 0.26) == 5);
  CHECK(g.nearest_index(0, 100.0) == 7);
}

TEST_CASE("self-dual grid has equal position and momentum spacing") {
  const auto g = make_self_dual_grid(1, 512);
  CHECK(g.axis(0).spacing() == Approx(g.axis(0).momentum_spacing()).epsilon(1e-14));
}

TEST_CASE("vacuum has variance one half") {
  const auto g = make_grid({{8.0, 256}});
  const auto psi = gaussian_state(g, {});
  CHECK(sum_sq(psi) == Approx(1.0).epsilon(1e-12));
  const auto o = observables(psi);
  CHECK(o.position_variance[0] == Approx(0.5).epsilon(1e-6));
  CHECK(o.mean_position[0] == Approx(0.0).epsilon(1e-12));
}

TEST_CASE("squeezing convention: r = 1 widens position variance to e^2/2") {
  CHECK(squeezed_position_variance(1.0) == Approx(3.69453).epsilon(1e-5));
  CHECK(10.0 * std::log10(squeezed_position_variance(1.0) / 0.5) == Approx(8.6859).epsilon(1e-4));
  const auto g = make_grid({{16.0, 512}});
  GaussianParams p;
  p.squeezing = {1.0};
  const auto o = observables(gaussian_state(g, p));
  CHECK(o.position_variance[0] == Approx(std::exp(2.0) / 2).epsilon(1e-6));
}

TEST_CASE("displaced Gaussian moments") {
  const auto g = make_grid({{8.0, 128}, {8.0, 128}});
  GaussianParams p;
  p.center_position = {1.0, 0.0};
  p.center_momentum = {0.0, 2.0};
  const auto o = observables(gaussian_state(g, p));
  CHECK(o.norm == Approx(1.0).epsilon(1e-9));
  CHECK(o.mean_position[0] == Approx(1.0).epsilon(1e-6));
  CHECK(std::abs(o.mean_position[1]) < 1e-6);
  CHECK(std::abs(o.mean_momentum[0]) < 1e-6);
  CHECK(o.mean_momentum[1] == Approx(2.0).epsilon(1e-6));
}

TEST_CASE("gaussian_state refuses a state that does not fit") {
  const auto g = make_grid({{4.0, 64}});
  GaussianParams p;
  p.center_position = {3.5};
  CHECK_THROWS_AS(gaussian_state(g, p), NumericalGuardError);
}

TEST_CASE("mean cost of x^2 in the vacuum") {
  const auto g = make_grid({{8.0, 256}});
  const auto psi = gaussian_state(g, {});
  const CostSpec f(1, {Monomial{1.0, {2}}});
  CHECK(*observables(psi, f).mean_cost == Approx(0.5).epsilon(1e-6));
}

TEST_CASE("marginals") {
  const auto g1 = make_grid({{6.0, 64}});
  GaussianParams p1;
  p1.center_position = {0.7};
  p1.center_momentum = {-0.3};
  const auto phi = gaussian_state(g1, p1);

  const auto g2 = make_grid({{6.0, 64}, {6.0, 64}});
  std::vector<Complex> prod(64 * 64);
  for (std::size_t i = 0; i < 64; ++i)
    for (std::size_t j = 0; j < 64; ++j) prod[i * 64 + j] = phi.raw()[i] * phi.raw()[j];
  const Wavefunction psi(g2, prod);

  SUBCASE("product state marginal is the factor density") {
    const auto m = marginal(psi, {1});
    REQUIRE(m.values.size() == 64);
    for (std::size_t j = 0; j < 64; ++j) CHECK(m.values[j] == Approx(std::norm(phi.raw()[j])).epsilon(1e-9));
    CHECK(m.total() == Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("keeping every axis returns |psi|^2") {
    const auto m = marginal(psi, {0, 1});
    for (std::size_t i = 0; i < prod.size(); ++i) CHECK(m.values[i] == Approx(std::norm(prod[i])).epsilon(1e-12));
  }
  SUBCASE("sequential marginalisation equals joint") {
    const auto g3 = make_grid({{6.0, 16}, {6.0, 32}, {6.0, 8}});
    GaussianParams p;
    p.center_position = {0.5, -1.0, 0.2};
    p.squeezing = {0.3, -0.2, 0.0};
    const auto s = gaussian_state(g3, p);
    const auto joint = marginal(s, {0});
    const auto seq = marginal(marginal(s, {0, 1}), {0});
    REQUIRE(joint.values.size() == seq.values.size());
    for (std::size_t i = 0; i < joint.values.size(); ++i) CHECK(std::abs(joint.values[i] - seq.values[i]) < 1e-12);
  }
  SUBCASE("Gaussian marginal keeps its width") {
    const auto g = make_grid({{12.0, 256}, {12.0, 64}});
    GaussianParams p;
    p.squeezing = {0.4, -0.3};
    const auto m = marginal(gaussian_state(g, p), {0});
    double var = 0.0, tot = 0.0;
    for (std::size_t i = 0; i < 256; ++i) {
      const double x = g.axis(0).position(i);
      var += m.values[i] * x * x;
      tot += m.values[i];
    }
    CHECK(var / tot == Approx(squeezed_position_variance(0.4)).epsilon(1e-6));
  }
}

TEST_CASE("boundary mass") {
  const auto g = make_grid({{8.0, 256}});
  CHECK(boundary_mass(gaussian_state(g, {})) < 1e-12);

  std::vector<Complex> flat(256, Complex(1.0, 0.0));
  Wavefunction uniform(g, flat);
  uniform.normalize();
  CHECK(boundary_mass(uniform) == Approx(26.0 / 256.0).epsilon(1e-12));
  CHECK(boundary_mass(uniform) == Approx(0.10).epsilon(0.02));
  CHECK_THROWS_AS(boundary_mass(uniform, 0.6), InvalidArgument);
  CHECK_THROWS_AS(boundary_mass(uniform, 0.0), InvalidArgument);
}

TEST_CASE("inner products and fidelity") {
  const auto g = make_grid({{8.0, 128}});
  const auto a = gaussian_state(g, {});
  GaussianParams p;
  p.center_position = {0.5};
  const auto b = gaussian_state(g, p);
  CHECK(fidelity(a, a) == Approx(1.0).epsilon(1e-14));
  // vacua displaced by d: |<a|b>| = exp(-d^2/4)
  CHECK(fidelity(a, b) == Approx(std::exp(-0.0625)).epsilon(1e-9));
  Wavefunction c = a;
  c.add_global_phase(1.3);
  CHECK(std::abs(inner_product(a, c) - std::polar(1.0, 1.3)) < 1e-12);
  c.fold_global_phase();
  CHECK(c.global_phase() == 0.0);
  CHECK(std::abs(inner_product(a, c) - std::polar(1.0, 1.3)) < 1e-12);
}
