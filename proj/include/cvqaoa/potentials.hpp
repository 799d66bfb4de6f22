#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cvqaoa/grid.hpp"

namespace cvqaoa {

/// coefficient * prod_i x_i^{exponents[i]}
struct Monomial {
  double coefficient = 0.0;
  std::vector<unsigned> exponents;
};

class Polynomial {
public:
  Polynomial() = default;
  Polynomial(std::size_t dimension, std::vector<Monomial> terms);

  std::size_t dimension() const { return dimension_; }
  const std::vector<Monomial>& terms() const { return terms_; }

  double evaluate(std::span<const double> x) const;
  /// Adds the gradient into `out`, scaled by `scale`.
  void accumulate_gradient(std::span<const double> x, double scale, std::span<double> out) const;

private:
  std::size_t dimension_ = 0;
  std::vector<Monomial> terms_;
};

/// lambda * (g(x) - c)^2
struct EqualityPenalty {
  Polynomial g;
  double c = 0.0;
  double lambda = 10.0;
};

/// swish(beta * (d - h(x))); pushes towards h(x) >= d.
struct InequalityPenalty {
  Polynomial h;
  double d = 0.0;
  double beta = 5.0;
};

/// alpha * prod_{j : support_j} tanh(beta x_j)
struct PuboPlateau {
  double alpha = 0.0;
  std::vector<std::uint8_t> support;
  double beta = 2.0;
};

/// sum_j (omega^2/2) (x_j^2 - lambda^2)^2
struct DoubleWell {
  double omega = 1.0;
  double lambda = 1.5;
};

using Term = std::variant<Monomial, EqualityPenalty, InequalityPenalty, PuboPlateau, DoubleWell>;

std::string term_kind(const Term& term);
double term_value(const Term& term, std::span<const double> x);
/// Adds the exact analytic gradient of `term` into `out`.
void accumulate_term_gradient(const Term& term, std::span<const double> x, std::span<double> out);

/// Composite cost f(x) = sum of terms. Immutable once built.
class CostSpec {
public:
  CostSpec() = default;
  CostSpec(std::size_t dimension, std::vector<Term> terms);

  std::size_t dimension() const { return dimension_; }
  const std::vector<Term>& terms() const { return terms_; }

  /// A new spec with additional terms.
  CostSpec with(std::vector<Term> extra) const;

private:
  std::size_t dimension_ = 0;
  std::vector<Term> terms_;
};

/// Throws NumericalGuardError(Overflow) naming the term if any value is non-finite.
double evaluate(const CostSpec& cost, std::span<const double> x);
std::vector<double> gradient(const CostSpec& cost, std::span<const double> x);

/// f at every grid point (row-major). Rejects non-finite values.
std::vector<double> tabulate(const CostSpec& cost, const GridSpec& grid);
/// Largest |f| over the grid corners; used to reject meaningless phases.
double corner_magnitude(const CostSpec& cost, const GridSpec& grid);
/// Phase magnitudes above this many radians are rejected as meaningless.
inline constexpr double max_phase_radians = 1e12;
/// Throws NumericalGuardError(Overflow) if eta*f exceeds max_phase_radians on the grid corners.
void check_phase_range(const CostSpec& cost, const GridSpec& grid, double eta);

double sigmoid(double u);
/// swish(u) = u * sigmoid(u), a smooth rectifier.
double swish(double u);
double swish_derivative(double u);

/// f(x) = 1/2 sum_i (x_i^4 - 16 x_i^2 + 5 x_i)
CostSpec styblinski_tang(std::size_t dimension);
/// Location of the one-dimensional global minimum of the Styblinski-Tang function.
double styblinski_tang_minimizer();

Term equality_penalty(Polynomial g, double c, double lambda = 10.0);
Term inequality_penalty(Polynomial h, double d, double beta = 5.0);

/// alpha_b * Z^b over Z in {-1, +1}^N.
struct BinaryTerm {
  double alpha = 0.0;
  std::vector<std::uint8_t> support;
};

struct PuboEncoding {
  double beta = 2.0;
  double omega = 1.0;
  double lambda = 1.5;
};

/// f(tanh(beta x)) + W_{omega,lambda}(x): one plateau per binary term plus a double well.
CostSpec pubo_encode(std::size_t dimension, const std::vector<BinaryTerm>& terms, const PuboEncoding& encoding = {});

/// bit_j = 1 iff x_j < 0 (left well is |1>); x_j == 0 decodes to 0.
std::vector<std::uint8_t> decode_bits(std::span<const double> x);
/// Exact binary cost with Z_j = 1 - 2 bit_j.
double binary_cost(const std::vector<BinaryTerm>& terms, std::span<const std::uint8_t> bits);

} // namespace cvqaoa
