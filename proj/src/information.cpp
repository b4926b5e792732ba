#include "multiphase/information.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "multiphase/channel.hpp"
#include "multiphase/errors.hpp"
#include "spectral.hpp"

namespace multiphase {

namespace {

// Above this dimension a two-phase density without a closed form is too
// costly to evaluate pointwise; the FFT grid is used instead.
constexpr std::size_t kDirectSumDimensionLimit = 1000;
// Cells per axis for the discrete route, which integrates over one grid cell.
constexpr std::size_t kDiscreteCells = 8;

double xlog2x(double g) { return g > 0.0 ? g * std::log2(g) : 0.0; }

// Runs a quadrature whose result is reported as offset + scale * value.
template <typename Quadrature>
QuadratureResult affine(double offset, double scale, Quadrature&& quadrature) {
  try {
    const QuadratureResult inner = quadrature();
    return {offset + scale * inner.value, scale * inner.abs_error_estimate, inner.evaluations};
  } catch (const BudgetExceeded& e) {
    QuadratureResult partial = e.partial();
    partial.value = offset + scale * partial.value;
    partial.abs_error_estimate *= scale;
    throw BudgetExceeded(e.what(), partial);
  }
}

void check_tolerance(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError("tolerance must be positive");
}

void check_phases(const ProbeState& probe) {
  if (probe.k() != 1 && probe.k() != 2) {
    throw UnsupportedError("mutual information is computed for k = 1 or 2 only, got k = " +
                           std::to_string(probe.k()));
  }
}

std::size_t resolve_budget(std::size_t budget, int k) {
  return budget == 0 ? default_budget(k) : budget;
}

std::size_t seed_cells(int n) { return 4 * (static_cast<std::size_t>(n) + 1); }

QuadratureResult adaptive_mi(const ProbeState& probe, double tol, std::size_t budget) {
  const ReducedDensity g(probe);
  if (probe.k() == 1) {
    return integrate_1d([&g](double x) { return xlog2x(g(x)); }, 0.0, 1.0, seed_cells(probe.n()),
                        tol, budget);
  }
  return integrate_2d([&g](double x, double y) { return xlog2x(g(x, y)); }, 0.0, 1.0, 0.0, 1.0,
                      seed_cells(probe.n()), tol, budget);
}

}  // namespace

std::size_t default_budget(int k) { return k <= 1 ? 10'000'000ULL : 1'000'000'000ULL; }

QuadratureResult mutual_information(const ProbeState& probe, double tol) {
  MiOptions options;
  options.tol = tol;
  return mutual_information(probe, options);
}

QuadratureResult mutual_information(const ProbeState& probe, const MiOptions& options) {
  check_tolerance(options.tol);
  check_phases(probe);
  const std::size_t budget = resolve_budget(options.budget, probe.k());
  MiMethod method = options.method;
  if (method == MiMethod::automatic) {
    const bool large = probe.k() == 2 && !probe.is_uniform() &&
                       probe.amplitudes().size() > kDirectSumDimensionLimit;
    method = large ? MiMethod::spectral : MiMethod::adaptive;
  }
  if (method == MiMethod::spectral) {
    return detail::spectral_mutual_information(probe, options.tol, budget);
  }
  return adaptive_mi(probe, options.tol, budget);
}

QuadratureResult mutual_information_discrete(const ProbeState& probe, double tol,
                                             std::size_t budget) {
  check_tolerance(tol);
  check_phases(probe);
  budget = resolve_budget(budget, probe.k());
  const int k = probe.k();
  const double levels = probe.n() + 1.0;
  const double cell = 1.0 / levels;
  const double scale = std::pow(levels, k);

  auto conditional = [&probe](std::span<const double> phi) {
    double acc = 0.0;
    for (const double p : discrete_distribution(probe, phi)) acc += xlog2x(p);
    return acc;
  };
  // The integral is scaled by (N+1)^k afterwards, so the tolerance shrinks too.
  const double inner_tol = tol / scale;
  return affine(k * std::log2(levels), scale, [&] {
    if (k == 1) {
      return integrate_1d(
          [&](double phi) {
            const double v[1] = {phi};
            return conditional(v);
          },
          0.0, cell, kDiscreteCells, inner_tol, budget);
    }
    return integrate_2d(
        [&](double a, double b) {
          const double v[2] = {a, b};
          return conditional(v);
        },
        0.0, cell, 0.0, cell, kDiscreteCells, inner_tol, budget);
  });
}

CostFunction::CostFunction(CostKind kind, std::function<double(double)> cost, std::string name)
    : kind_(kind), cost_(std::move(cost)), name_(std::move(name)) {}

CostFunction CostFunction::holevo_sine() {
  return CostFunction(
      CostKind::holevo_sine,
      [](double gamma) {
        const double s = std::sin(std::numbers::pi * gamma);
        return 4.0 * s * s;
      },
      "holevo-sine");
}

CostFunction CostFunction::surprise() { return CostFunction(CostKind::surprise, nullptr, "surprise"); }

CostFunction CostFunction::custom(std::function<double(double)> cost, std::string name) {
  if (!cost) throw DomainError("custom cost needs a callable");
  return CostFunction(CostKind::custom, std::move(cost), std::move(name));
}

double CostFunction::operator()(double gamma, double density_value) const {
  if (kind_ == CostKind::surprise) {
    return density_value > 0.0 ? -std::log2(density_value) : INFINITY;
  }
  return cost_(gamma);
}

std::string to_string(EstimatorMode mode) {
  return mode == EstimatorMode::continuous ? "continuous" : "discrete";
}

QuadratureResult bayes_cost(const ProbeState& probe, const CostFunction& cost, EstimatorMode mode,
                            double tol, std::size_t budget) {
  check_tolerance(tol);
  if (probe.k() != 1) throw UnsupportedError("bayes_cost is defined for k = 1 only");
  budget = resolve_budget(budget, 1);
  const ReducedDensity g(probe);

  if (mode == EstimatorMode::continuous) {
    return integrate_1d(
        [&](double gamma) {
          const double value = g(gamma);
          if (value <= 0.0) return 0.0;
          return value * cost(gamma, value);
        },
        0.0, 1.0, seed_cells(probe.n()), tol, budget);
  }

  if (cost.kind() == CostKind::surprise) {
    throw UnsupportedError(
        "the surprise cost depends on the density itself, so continuous and discrete "
        "estimators need not agree; use a cost that depends on the offset only");
  }
  const int n = probe.n();
  const double levels = n + 1.0;
  const double inner_tol = tol / levels;
  return affine(0.0, levels, [&] {
    return integrate_1d(
        [&](double phi) {
          double acc = 0.0;
          for (int m = 0; m <= n; ++m) {
            const double gamma = m / levels - phi;
            acc += g(gamma) / levels * cost(gamma, 0.0);
          }
          return acc;
        },
        0.0, 1.0 / levels, kDiscreteCells, inner_tol, budget);
  });
}

}  // namespace multiphase
