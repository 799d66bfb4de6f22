#include "cvqaoa/potentials.hpp"

#include <cmath>
#include <sstream>

#include "cvqaoa/error.hpp"

namespace cvqaoa {
namespace {

double ipow(double x, unsigned e) {
  double r = 1.0;
  while (e) {
    if (e & 1u) r *= x;
    x *= x;
    e >>= 1u;
  }
  return r;
}

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

double monomial_value(const Monomial& m, std::span<const double> x) {
  double v = m.coefficient;
  for (std::size_t i = 0; i < m.exponents.size(); ++i)
    if (m.exponents[i]) v *= ipow(x[i], m.exponents[i]);
  return v;
}

void monomial_gradient(const Monomial& m, std::span<const double> x, double scale, std::span<double> out) {
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    const unsigned ei = m.exponents[i];
    if (ei == 0) continue;
    double v = scale * m.coefficient * static_cast<double>(ei) * ipow(x[i], ei - 1);
    for (std::size_t j = 0; j < m.exponents.size(); ++j)
      if (j != i && m.exponents[j]) v *= ipow(x[j], m.exponents[j]);
    out[i] += v;
  }
}

void check_dimension(std::span<const double> x, std::size_t n) {
  if (x.size() != n)
    throw InvalidArgument("point has dimension " + std::to_string(x.size()) + ", expected " + std::to_string(n));
}

void check_support(const std::vector<std::uint8_t>& support, std::size_t n) {
  if (support.size() != n)
    throw InvalidArgument("binary support has length " + std::to_string(support.size()) + ", expected " +
                          std::to_string(n));
}

std::string describe_point(std::span<const double> x) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
  os << ')';
  return os.str();
}

} // namespace

Polynomial::Polynomial(std::size_t dimension, std::vector<Monomial> terms)
  : dimension_(dimension), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.exponents.size() != dimension_)
      throw InvalidArgument("monomial has " + std::to_string(t.exponents.size()) + " exponents, expected " +
                            std::to_string(dimension_));
}

double Polynomial::evaluate(std::span<const double> x) const {
  double v = 0.0;
  for (const auto& t : terms_) v += monomial_value(t, x);
  return v;
}

void Polynomial::accumulate_gradient(std::span<const double> x, double scale, std::span<double> out) const {
  for (const auto& t : terms_) monomial_gradient(t, x, scale, out);
}

double sigmoid(double u) {
  if (u >= 0.0) return 1.0 / (1.0 + std::exp(-u));
  const double e = std::exp(u);
  return e / (1.0 + e);
}

double swish(double u) { return u * sigmoid(u); }

double swish_derivative(double u) {
  const double s = sigmoid(u);
  return s + u * s * (1.0 - s);
}

std::string term_kind(const Term& term) {
  return std::visit(Overloaded{[](const Monomial&) { return std::string("polynomial"); },
                               [](const EqualityPenalty&) { return std::string("equality-penalty"); },
                               [](const InequalityPenalty&) { return std::string("inequality-penalty"); },
                               [](const PuboPlateau&) { return std::string("pubo-plateau"); },
                               [](const DoubleWell&) { return std::string("double-well"); }},
                    term);
}

double term_value(const Term& term, std::span<const double> x) {
  return std::visit(
      Overloaded{[&](const Monomial& m) { return monomial_value(m, x); },
                 [&](const EqualityPenalty& p) {
                   const double r = p.g.evaluate(x) - p.c;
                   return p.lambda * r * r;
                 },
                 [&](const InequalityPenalty& p) { return swish(p.beta * (p.d - p.h.evaluate(x))); },
                 [&](const PuboPlateau& p) {
                   double v = p.alpha;
                   for (std::size_t j = 0; j < p.support.size(); ++j)
                     if (p.support[j]) v *= std::tanh(p.beta * x[j]);
                   return v;
                 },
                 [&](const DoubleWell& w) {
                   double v = 0.0;
                   const double l2 = w.lambda * w.lambda;
                   for (double xj : x) {
                     const double d = xj * xj - l2;
                     v += d * d;
                   }
                   return 0.5 * w.omega * w.omega * v;
                 }},
      term);
}

void accumulate_term_gradient(const Term& term, std::span<const double> x, std::span<double> out) {
  std::visit(Overloaded{[&](const Monomial& m) { monomial_gradient(m, x, 1.0, out); },
                        [&](const EqualityPenalty& p) {
                          p.g.accumulate_gradient(x, 2.0 * p.lambda * (p.g.evaluate(x) - p.c), out);
                        },
                        [&](const InequalityPenalty& p) {
                          const double u = p.beta * (p.d - p.h.evaluate(x));
                          p.h.accumulate_gradient(x, -p.beta * swish_derivative(u), out);
                        },
                        [&](const PuboPlateau& p) {
                          const std::size_t n = p.support.size();
                          std::vector<double> t(n, 1.0);
                          for (std::size_t j = 0; j < n; ++j)
                            if (p.support[j]) t[j] = std::tanh(p.beta * x[j]);
                          for (std::size_t i = 0; i < n; ++i) {
                            if (!p.support[i]) continue;
                            double v = p.alpha * p.beta * (1.0 - t[i] * t[i]);
                            for (std::size_t j = 0; j < n; ++j)
                              if (j != i && p.support[j]) v *= t[j];
                            out[i] += v;
                          }
                        },
                        [&](const DoubleWell& w) {
                          const double l2 = w.lambda * w.lambda;
                          for (std::size_t j = 0; j < x.size(); ++j)
                            out[j] += 2.0 * w.omega * w.omega * x[j] * (x[j] * x[j] - l2);
                        }},
             term);
}

CostSpec::CostSpec(std::size_t dimension, std::vector<Term> terms) : dimension_(dimension), terms_(std::move(terms)) {
  if (dimension_ == 0) throw InvalidArgument("cost dimension must be positive");
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto where = "term " + std::to_string(i) + " (" + term_kind(terms_[i]) + "): ";
    std::visit(Overloaded{[&](const Monomial& m) {
                            if (m.exponents.size() != dimension_)
                              throw InvalidArgument(where + "exponent vector length mismatch");
                          },
                          [&](const EqualityPenalty& p) {
                            if (p.g.dimension() != dimension_) throw InvalidArgument(where + "dimension mismatch");
                            if (!(p.lambda >= 0.0)) throw InvalidArgument(where + "lambda must be >= 0");
                          },
                          [&](const InequalityPenalty& p) {
                            if (p.h.dimension() != dimension_) throw InvalidArgument(where + "dimension mismatch");
                            if (!(p.beta > 0.0)) throw InvalidArgument(where + "beta must be > 0");
                          },
                          [&](const PuboPlateau& p) {
                            check_support(p.support, dimension_);
                            if (!(p.beta > 0.0)) throw InvalidArgument(where + "beta must be > 0");
                          },
                          [&](const DoubleWell& w) {
                            if (!(w.omega > 0.0) || !(w.lambda > 0.0))
                              throw InvalidArgument(where + "omega and lambda must be > 0");
                          }},
               terms_[i]);
  }
}

CostSpec CostSpec::with(std::vector<Term> extra) const {
  auto all = terms_;
  for (auto& t : extra) all.push_back(std::move(t));
  return CostSpec(dimension_, std::move(all));
}

double evaluate(const CostSpec& cost, std::span<const double> x) {
  check_dimension(x, cost.dimension());
  double f = 0.0;
  for (std::size_t i = 0; i < cost.terms().size(); ++i) {
    const double v = term_value(cost.terms()[i], x);
    if (!std::isfinite(v))
      throw NumericalGuardError(GuardKind::Overflow, "term " + std::to_string(i) + " (" +
                                                         term_kind(cost.terms()[i]) + ") is not finite at " +
                                                         describe_point(x));
    f += v;
  }
  return f;
}

std::vector<double> gradient(const CostSpec& cost, std::span<const double> x) {
  check_dimension(x, cost.dimension());
  std::vector<double> g(x.size(), 0.0);
  for (std::size_t i = 0; i < cost.terms().size(); ++i) {
    accumulate_term_gradient(cost.terms()[i], x, g);
    for (double v : g)
      if (!std::isfinite(v))
        throw NumericalGuardError(GuardKind::Overflow, "gradient of term " + std::to_string(i) + " (" +
                                                           term_kind(cost.terms()[i]) + ") is not finite at " +
                                                           describe_point(x));
  }
  return g;
}

std::vector<double> tabulate(const CostSpec& cost, const GridSpec& grid) {
  if (grid.dimension() != cost.dimension())
    throw InvalidArgument("cost dimension " + std::to_string(cost.dimension()) + " does not match grid dimension " +
                          std::to_string(grid.dimension()));
  std::vector<double> table(grid.size());
  std::vector<double> x(grid.dimension());
  for (std::size_t flat = 0; flat < table.size(); ++flat) {
    grid.coordinates(flat, x);
    double f = 0.0;
    for (const auto& t : cost.terms()) f += term_value(t, x);
    if (!std::isfinite(f)) {
      evaluate(cost, x);  // throws naming the offending term
      throw NumericalGuardError(GuardKind::Overflow, "cost overflows at " + describe_point(x));
    }
    table[flat] = f;
  }
  return table;
}

double corner_magnitude(const CostSpec& cost, const GridSpec& grid) {
  const std::size_t n = grid.dimension();
  if (n != cost.dimension()) throw InvalidArgument("cost dimension does not match grid dimension");
  double worst = 0.0;
  std::vector<double> x(n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& a = grid.axis(i);
      x[i] = (mask >> i) & 1u ? a.position(a.points - 1) : a.position(0);
    }
    worst = std::max(worst, std::abs(evaluate(cost, x)));
  }
  return worst;
}

void check_phase_range(const CostSpec& cost, const GridSpec& grid, double eta) {
  const double phase = std::abs(eta) * corner_magnitude(cost, grid);
  if (phase > max_phase_radians)
    throw NumericalGuardError(GuardKind::Overflow,
                              "cost phase reaches " + std::to_string(phase) + " rad at the grid corners");
}

CostSpec styblinski_tang(std::size_t dimension) {
  if (dimension == 0) throw InvalidArgument("Styblinski-Tang needs dimension >= 1");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < dimension; ++i) {
    for (auto [c, e] : {std::pair{0.5, 4u}, std::pair{-8.0, 2u}, std::pair{2.5, 1u}}) {
      std::vector<unsigned> exps(dimension, 0);
      exps[i] = e;
      terms.emplace_back(Monomial{c, std::move(exps)});
    }
  }
  return CostSpec(dimension, std::move(terms));
}

double styblinski_tang_minimizer() {
  // root of f'(x) = 2x^3 - 16x + 2.5 in the left basin
  double x = -3.0;
  for (int i = 0; i < 50; ++i) x -= (2.0 * x * x * x - 16.0 * x + 2.5) / (6.0 * x * x - 16.0);
  return x;
}

Term equality_penalty(Polynomial g, double c, double lambda) {
  if (!(lambda >= 0.0)) throw InvalidArgument("equality penalty needs lambda >= 0");
  return EqualityPenalty{std::move(g), c, lambda};
}

Term inequality_penalty(Polynomial h, double d, double beta) {
  if (!(beta > 0.0)) throw InvalidArgument("inequality penalty needs beta > 0");
  return InequalityPenalty{std::move(h), d, beta};
}

CostSpec pubo_encode(std::size_t dimension, const std::vector<BinaryTerm>& terms, const PuboEncoding& encoding) {
  if (!(encoding.beta > 0.0 && encoding.omega > 0.0 && encoding.lambda > 0.0))
    throw InvalidArgument("PUBO encoding needs beta, omega, lambda > 0");
  std::vector<Term> out;
  for (const auto& t : terms) {
    check_support(t.support, dimension);
    out.emplace_back(PuboPlateau{t.alpha, t.support, encoding.beta});
  }
  out.emplace_back(DoubleWell{encoding.omega, encoding.lambda});
  return CostSpec(dimension, std::move(out));
}

std::vector<std::uint8_t> decode_bits(std::span<const double> x) {
  std::vector<std::uint8_t> bits(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) bits[j] = x[j] < 0.0 ? 1 : 0;
  return bits;
}

double binary_cost(const std::vector<BinaryTerm>& terms, std::span<const std::uint8_t> bits) {
  double f = 0.0;
  for (const auto& t : terms) {
    check_support(t.support, bits.size());
    double v = t.alpha;
    for (std::size_t j = 0; j < bits.size(); ++j)
      if (t.support[j]) v *= bits[j] ? -1.0 : 1.0;
    f += v;
  }
  return f;
}

} // namespace cvqaoa
