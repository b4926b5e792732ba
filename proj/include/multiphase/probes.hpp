#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace multiphase {

using Amplitude = std::complex<double>;

enum class ProbeFamily { equatorial_product, holland_burnett, custom };

std::string_view to_string(ProbeFamily family);

/// Pure probe state on the symmetric subspace for k phases and N resources.
///
/// Amplitudes follow BasisCatalog order. The constructor enforces the length
/// and unit norm (to 1e-12); use ProbeState::normalized for raw vectors.
class ProbeState {
 public:
  ProbeState(int k, int n, std::vector<Amplitude> amplitudes,
             ProbeFamily family = ProbeFamily::custom);

  static ProbeState normalized(int k, int n, std::vector<Amplitude> amplitudes);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return amplitudes_.size(); }
  ProbeFamily family() const noexcept { return family_; }
  std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }

  bool is_real_nonnegative(double tol = 1e-14) const noexcept;
  /// True when every amplitude is the same positive real number, which is
  /// the case the closed-form kernels apply to.
  bool is_uniform() const noexcept;

 private:
  int k_;
  int n_;
  std::vector<Amplitude> amplitudes_;
  ProbeFamily family_;
};

/// N copies of the equatorial single-site state (|0> + ... + |k>)/sqrt(k+1),
/// written on the symmetric basis: c_n = sqrt(multinomial(N; n) / (k+1)^N).
ProbeState equatorial_product(int k, int n);

/// Uniform superposition of the symmetric basis (Holland-Burnett state).
ProbeState holland_burnett(int k, int n);

struct EntanglementResult {
  double eg = 0.0;
  /// Closest symmetric product state as probabilities (p_0, p_1, ..., p_k).
  std::vector<double> argmax_probs;
  std::size_t evaluations = 0;
};

/// Geometric measure of entanglement 1 - max |<phi^N|psi>|^2 over symmetric
/// product states. Only real non-negative probes are accepted, for which the
/// optimal product state has vanishing relative phases; the search runs over
/// the probability simplex of the single-site state.
EntanglementResult geometric_entanglement(const ProbeState& probe, double tol = 1e-13);

struct AsymptoticValue {
  double value = 0.0;
  /// False when the large-N formula leaves [0, 1) and cannot describe a
  /// geometric measure.
  bool in_regime = true;
};

/// Large-N geometric measure of the Holland-Burnett state, k in {1, 2}.
AsymptoticValue eg_asymptotic(int k, int n);

}  // namespace multiphase
