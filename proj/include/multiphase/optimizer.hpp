#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "multiphase/probes.hpp"

namespace multiphase {

struct OptimizationRun {
  ProbeState best_probe;
  double best_mi;
  int starts;
  std::size_t iterations;  // objective evaluations over all starts
  bool converged;          // every start reached the minimum step
  std::uint64_t seed;
  double product_mi;       // objective at the equatorial product start
  double hb_mi;            // objective at the Holland-Burnett start
};

/// Multi-start compass search for the real non-negative probe maximizing the
/// mutual information. Starts are the equatorial product, the Holland-Burnett
/// state and starts - 2 random points drawn from `seed`. A move is accepted
/// only when it gains more than 2 tol, tol being the quadrature tolerance.
/// k in {1, 2}; dimension(k, N) <= 200.
OptimizationRun optimize_probe(int k, int n, double tol, int starts = 4, std::uint64_t seed = 0);

/// The probe maximizing the density at zero offset: the uniform superposition.
ProbeState local_optimal_probe(int k, int n);

struct CrossoverPoint {
  int n;
  double product_mi;
  double hb_mi;
};

struct CrossoverResult {
  /// Smallest N at which the Holland-Burnett probe beats the equatorial
  /// product by more than tol; empty when it never does up to N_max.
  std::optional<int> n_star;
  /// The ordering holds for every N from n_star to N_max.
  bool stable = false;
  std::vector<CrossoverPoint> sweep;  // N = 1 .. N_max
};

CrossoverResult crossover(int k, int n_max, double tol);

}  // namespace multiphase
