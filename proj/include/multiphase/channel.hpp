#pragma once

#include <span>
#include <vector>

#include "multiphase/probes.hpp"

namespace multiphase {

// All phases, estimates and offsets are in turns: gamma in [0, 1) is one full
// cycle, and the encoding kernel is exp(2 pi i n.gamma).

/// |sum_n c_n exp(2 pi i n.gamma)|^2 by nested Horner summation in catalog
/// order. gamma has k entries; it is reduced modulo 1 internally.
double density(const ProbeState& probe, std::span<const double> gamma);

/// Fejer kernel sin^2((N+1) pi g) / ((N+1) sin^2(pi g)), the density of the
/// single-phase Holland-Burnett probe.
double fejer_density(int n, double gamma);

/// Density of the two-phase Holland-Burnett probe at offsets (dphi, dtheta),
/// |sum_{n1+n2<=N} exp(2 pi i (n1 dphi + n2 dtheta))|^2 / C(N+2, 2), in
/// closed form away from the lines where sin(pi dphi), sin(pi dtheta) or
/// sin(pi (dphi - dtheta)) vanish, and by direct summation near them.
double double_hb_density(int n, double dphi, double dtheta);

/// p(m | phi) = density(probe, m/(N+1) - phi) / (N+1)^k for an estimator on
/// the (N+1)-point grid; every m_j must lie in [0, N].
double discrete_prob(const ProbeState& probe, std::span<const int> m, std::span<const double> phi);

/// Every p(m | phi), m in [0, N]^k, flattened with m_1 outermost.
std::vector<double> discrete_distribution(const ProbeState& probe, std::span<const double> phi);

/// Gaussian approximant of the equatorial-product discrete density at offset
/// delta = phi - m/(N+1), each component wrapped to [-1/2, 1/2). k in {1, 2}.
double gaussian_approx(int k, int n, std::span<const double> delta);

enum class DensityMode { direct_sum, closed_form_fejer, closed_form_double };

/// Evaluator of the conditional density g(gamma) of a probe under the
/// covariant phase measurement. The closed-form modes apply to uniform
/// (Holland-Burnett) probes with k = 1 and k = 2 respectively.
class ReducedDensity {
 public:
  explicit ReducedDensity(ProbeState probe);
  ReducedDensity(ProbeState probe, DensityMode mode);

  const ProbeState& probe() const noexcept { return probe_; }
  DensityMode mode() const noexcept { return mode_; }
  int k() const noexcept { return probe_.k(); }

  double operator()(std::span<const double> gamma) const;
  double operator()(double gamma) const;
  double operator()(double gamma1, double gamma2) const;

 private:
  ProbeState probe_;
  DensityMode mode_;
};

}  // namespace multiphase
