#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "multiphase/errors.hpp"

namespace multiphase {

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::size_t evaluations = 0;
};

/// Tolerance not reached within the evaluation budget. partial() holds the
/// best estimate available when the search stopped.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, QuadratureResult partial)
      : Error(what), partial_(partial) {}
  const QuadratureResult& partial() const noexcept { return partial_; }

 private:
  QuadratureResult partial_;
};

/// Compensated (Neumaier) running sum.
class CompensatedSum {
 public:
  void add(double x) noexcept;
  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

// Both integrators start from a uniform mesh and refine each cell on its own
// until its error estimate is below tol times its share of the domain, so
// the sum of estimates meets tol. Cells are visited and summed in a fixed
// order; results are reproducible bit for bit.

/// Gauss-Kronrod 7/15 on [a, b] from `initial_cells` equal cells.
QuadratureResult integrate_1d(const std::function<double(double)>& f, double a, double b,
                              std::size_t initial_cells, double tol, std::size_t budget);

/// Genz-Malik degree 7/5 cubature on [ax, bx] x [ay, by] from a
/// cells_per_axis x cells_per_axis mesh; refinement bisects the axis with
/// the larger fourth difference.
QuadratureResult integrate_2d(const std::function<double(double, double)>& f, double ax, double bx,
                              double ay, double by, std::size_t cells_per_axis, double tol,
                              std::size_t budget);

}  // namespace multiphase
