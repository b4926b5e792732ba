#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "multiphase/probes.hpp"
#include "multiphase/quadrature.hpp"

namespace multiphase {

enum class MiMethod {
  automatic,
  adaptive,  // seeded adaptive quadrature on the density
  spectral   // periodic trapezoid on FFT-sampled amplitudes, doubled until stable
};

struct MiOptions {
  double tol = 1e-8;
  std::size_t budget = 0;  // 0 selects default_budget(k)
  MiMethod method = MiMethod::automatic;
};

/// Default evaluation budget: 1e7 for one phase, 1e9 for two.
std::size_t default_budget(int k);

/// Mutual information in bits between the phases and the covariant estimate,
/// the integral of g log2 g over one period (k in {1, 2}). tol is an absolute
/// target. Throws BudgetExceeded with the partial result when it cannot be met.
QuadratureResult mutual_information(const ProbeState& probe, double tol);
QuadratureResult mutual_information(const ProbeState& probe, const MiOptions& options);

/// The same quantity through the discretized estimator m/(N+1):
/// k log2(N+1) + (N+1)^k times the integral of sum_m p log2 p over one grid cell.
QuadratureResult mutual_information_discrete(const ProbeState& probe, double tol,
                                             std::size_t budget = 0);

enum class CostKind { holevo_sine, surprise, custom };

class CostFunction {
 public:
  /// 4 sin^2(pi gamma), the turns form of the Holevo sine cost.
  static CostFunction holevo_sine();
  /// -log2 of the density at the estimate.
  static CostFunction surprise();
  /// Any cost depending on the offset alone.
  static CostFunction custom(std::function<double(double)> cost, std::string name = "custom");

  CostKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  double operator()(double gamma, double density_value) const;

 private:
  CostFunction(CostKind kind, std::function<double(double)> cost, std::string name);
  CostKind kind_;
  std::function<double(double)> cost_;
  std::string name_;
};

enum class EstimatorMode { continuous, discrete };

/// Bayesian average cost of a single-phase probe. Continuous mode integrates
/// g(gamma) c(gamma) over a period; discrete mode averages
/// sum_m p(m|phi) c(m/(N+1) - phi) over phi. The surprise cost is refused in
/// discrete mode since it depends on the density itself.
QuadratureResult bayes_cost(const ProbeState& probe, const CostFunction& cost, EstimatorMode mode,
                            double tol, std::size_t budget = 0);

std::string to_string(EstimatorMode mode);

}  // namespace multiphase
