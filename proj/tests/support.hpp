#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "multiphase/hilbert.hpp"
#include "multiphase/probes.hpp"

namespace testing_support {

// Random normalized probe; complex amplitudes unless real_nonnegative.
inline multiphase::ProbeState random_probe(std::mt19937_64& rng, int k, int n,
                                           bool real_nonnegative = false) {
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unit;
  std::vector<multiphase::Amplitude> amps(multiphase::dimension(k, n));
  for (auto& a : amps) {
    a = real_nonnegative ? multiphase::Amplitude(unit(rng), 0.0)
                         : multiphase::Amplitude(gauss(rng), gauss(rng));
  }
  return multiphase::ProbeState::normalized(k, n, std::move(amps));
}

// Independent density: explicit double loop over the catalog, no Horner.
inline double naive_density(const multiphase::ProbeState& probe, const std::vector<double>& gamma) {
  const double two_pi = 2.0 * 3.14159265358979323846;
  const multiphase::BasisCatalog basis(probe.k(), probe.n());
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    double phase = 0.0;
    for (int j = 0; j < probe.k(); ++j) phase += basis[i][static_cast<std::size_t>(j)] * gamma[static_cast<std::size_t>(j)];
    acc += probe.amplitudes()[i] * std::polar(1.0, two_pi * phase);
  }
  return std::norm(acc);
}

// Periodic trapezoid rule for the integral of g log2 g on an L^k grid,
// sampled with naive_density.
inline double trapezoid_mi(const multiphase::ProbeState& p, int length) {
  auto xlog2x = [](double g) { return g > 0.0 ? g * std::log2(g) : 0.0; };
  double s = 0.0;
  if (p.k() == 1) {
    for (int i = 0; i < length; ++i) s += xlog2x(naive_density(p, {double(i) / length}));
    return s / length;
  }
  for (int i = 0; i < length; ++i) {
    for (int j = 0; j < length; ++j) {
      s += xlog2x(naive_density(p, {double(i) / length, double(j) / length}));
    }
  }
  return s / (double(length) * length);
}

}  // namespace testing_support
