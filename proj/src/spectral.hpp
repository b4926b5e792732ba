#pragma once

#include <cstddef>

#include "multiphase/probes.hpp"
#include "multiphase/quadrature.hpp"

namespace multiphase::detail {

/// Periodic trapezoid rule for the integral of g log2 g on an L^k grid, with
/// g sampled exactly by FFT of the zero-padded amplitudes. L starts at the
/// next power of two above N and doubles until successive values agree to
/// tol. Each grid point counts as one evaluation. k in {1, 2}.
QuadratureResult spectral_mutual_information(const ProbeState& probe, double tol,
                                             std::size_t budget);

}  // namespace multiphase::detail
