#pragma once

#include <complex>
#include <span>

#include "multiphase/probes.hpp"

namespace multiphase::detail {

std::complex<double> unit_phase(double turns);

/// sum_n c_n prod_j z_j^{n_j} over the simplex basis in catalog order, by
/// nested Horner evaluation (one complex multiply-add per coefficient).
std::complex<double> trig_sum(int k, int n, std::span<const Amplitude> coefficients,
                              std::span<const std::complex<double>> z);

/// |sum_{n1+n2<=N} exp(2 pi i (n1 x + n2 y))|^2 by direct summation.
double uniform_double_sum(int n, double x, double y);

}  // namespace multiphase::detail
