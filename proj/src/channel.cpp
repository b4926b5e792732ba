#include "multiphase/channel.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "multiphase/errors.hpp"
#include "multiphase/hilbert.hpp"
#include "trig_sums.hpp"

namespace multiphase {

namespace {

constexpr double kPi = std::numbers::pi;

// Fallback thresholds on |sin(pi x)| for the closed-form kernels.
constexpr double kFejerSingular = 1e-8;
constexpr double kDoubleSingular = 1e-6;

double wrap_unit(double x) { return x - std::floor(x); }

double wrap_centered(double x) { return x - std::floor(x + 0.5); }

void check_phase_count(const ProbeState& probe, std::size_t given) {
  if (given != static_cast<std::size_t>(probe.k())) {
    throw DomainError("expected " + std::to_string(probe.k()) + " phase components, got " +
                      std::to_string(given));
  }
}

// sin((N+1) pi u) / sin(pi u), the real Dirichlet-type factor with limit N+1.
double dirichlet_ratio(int n, double u, double sin_u) {
  if (sin_u == 0.0) return n + 1.0;
  return std::sin((n + 1.0) * kPi * u) / sin_u;
}

}  // namespace

namespace detail {

std::complex<double> unit_phase(double turns) { return std::polar(1.0, 2.0 * kPi * wrap_unit(turns)); }

std::complex<double> trig_sum(int k, int n, std::span<const Amplitude> coefficients,
                              std::span<const std::complex<double>> z) {
  if (k == 1) {
    std::complex<double> acc = 0.0;
    for (std::size_t i = coefficients.size(); i-- > 0;) acc = acc * z[0] + coefficients[i];
    return acc;
  }
  if (k == 2) {
    // Row n1 holds n2 = 0..N-n1 and starts at n1 (N+1) - n1 (n1-1) / 2.
    std::complex<double> outer = 0.0;
    std::size_t end = coefficients.size();
    for (int n1 = n; n1 >= 0; --n1) {
      const std::size_t length = static_cast<std::size_t>(n - n1 + 1);
      const std::size_t begin = end - length;
      std::complex<double> inner = 0.0;
      for (std::size_t i = end; i-- > begin;) inner = inner * z[1] + coefficients[i];
      outer = outer * z[0] + inner;
      end = begin;
    }
    return outer;
  }
  // General k: peel the outermost coordinate. Block for n_1 = t has size
  // C(N - t + k - 1, k - 1).
  std::complex<double> outer = 0.0;
  std::size_t end = coefficients.size();
  for (int t = n; t >= 0; --t) {
    const std::size_t length = dimension(k - 1, n - t);
    const std::size_t begin = end - length;
    const auto inner = trig_sum(k - 1, n - t, coefficients.subspan(begin, length), z.subspan(1));
    outer = outer * z[0] + inner;
    end = begin;
  }
  return outer;
}

double uniform_double_sum(int n, double x, double y) {
  const std::complex<double> z1 = unit_phase(x);
  const std::complex<double> z2 = unit_phase(y);
  std::complex<double> outer = 0.0;
  for (int n1 = n; n1 >= 0; --n1) {
    std::complex<double> inner = 0.0;
    for (int n2 = n - n1; n2 >= 0; --n2) inner = inner * z2 + 1.0;
    outer = outer * z1 + inner;
  }
  return std::norm(outer);
}

}  // namespace detail

double density(const ProbeState& probe, std::span<const double> gamma) {
  check_phase_count(probe, gamma.size());
  std::complex<double> z[8];
  std::vector<std::complex<double>> z_heap;
  std::span<std::complex<double>> zs;
  if (gamma.size() <= 8) {
    zs = std::span<std::complex<double>>(z, gamma.size());
  } else {
    z_heap.resize(gamma.size());
    zs = z_heap;
  }
  for (std::size_t j = 0; j < gamma.size(); ++j) zs[j] = detail::unit_phase(gamma[j]);
  return std::norm(detail::trig_sum(probe.k(), probe.n(), probe.amplitudes(), zs));
}

double fejer_density(int n, double gamma) {
  if (n < 0) throw DomainError("fejer_density needs N >= 0");
  const double u = wrap_centered(gamma);
  const double s = std::sin(kPi * u);
  if (std::abs(s) < kFejerSingular) {
    const std::complex<double> z = detail::unit_phase(u);
    std::complex<double> acc = 0.0;
    for (int i = 0; i <= n; ++i) acc = acc * z + 1.0;
    return std::norm(acc) / (n + 1.0);
  }
  const double num = std::sin((n + 1.0) * kPi * u);
  return num * num / ((n + 1.0) * s * s);
}

double double_hb_density(int n, double dphi, double dtheta) {
  if (n < 0) throw DomainError("double_hb_density needs N >= 0");
  const double size = (n + 1.0) * (n + 2.0) / 2.0;
  const double x = wrap_centered(dphi);
  const double y = wrap_centered(dtheta);
  const double d = x - y;
  const double sx = std::sin(kPi * x);
  const double sy = std::sin(kPi * y);
  const double sd = std::sin(kPi * d);
  if (std::abs(sx) < kDoubleSingular || std::abs(sy) < kDoubleSingular ||
      std::abs(sd) < kDoubleSingular) {
    return detail::uniform_double_sum(n, x, y) / size;
  }
  // With P(u) = sin((N+1) pi u)/sin(pi u) the kernel sum equals
  //   [(P(x) - P(y))^2 + 4 P(x) P(y) sin^2((N+2) pi d / 2)] / (4 sin^2(pi d)),
  // which avoids the O(d^2) cancellation of the expanded numerator near x = y.
  const double px = dirichlet_ratio(n, x, sx);
  const double py = dirichlet_ratio(n, y, sy);
  const double half = std::sin((n + 2.0) * kPi * d / 2.0);
  const double diff = (px - py) / (2.0 * sd);
  const double cross = px * py * half * half / (sd * sd);
  return std::max(diff * diff + cross, 0.0) / size;
}

double discrete_prob(const ProbeState& probe, std::span<const int> m, std::span<const double> phi) {
  check_phase_count(probe, m.size());
  check_phase_count(probe, phi.size());
  const int n = probe.n();
  std::vector<double> gamma(m.size());
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[j] < 0 || m[j] > n) {
      throw DomainError("estimator index m=" + std::to_string(m[j]) + " outside [0, " +
                        std::to_string(n) + "]");
    }
    gamma[j] = m[j] / (n + 1.0) - phi[j];
  }
  return density(probe, gamma) / std::pow(n + 1.0, probe.k());
}

std::vector<double> discrete_distribution(const ProbeState& probe, std::span<const double> phi) {
  check_phase_count(probe, phi.size());
  const int n = probe.n();
  const int k = probe.k();
  const double scale = std::pow(n + 1.0, k);
  std::size_t count = 1;
  for (int j = 0; j < k; ++j) count *= static_cast<std::size_t>(n + 1);

  std::vector<double> out(count);
  std::vector<int> m(static_cast<std::size_t>(k), 0);
  std::vector<std::complex<double>> z(static_cast<std::size_t>(k));
  for (std::size_t idx = 0; idx < count; ++idx) {
    for (int j = 0; j < k; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      z[uj] = detail::unit_phase(m[uj] / (n + 1.0) - phi[uj]);
    }
    out[idx] = std::norm(detail::trig_sum(k, n, probe.amplitudes(), z)) / scale;
    for (int j = k - 1; j >= 0; --j) {
      if (++m[static_cast<std::size_t>(j)] <= n) break;
      m[static_cast<std::size_t>(j)] = 0;
    }
  }
  return out;
}

double gaussian_approx(int k, int n, std::span<const double> delta) {
  if (n < 1) throw DomainError("gaussian_approx needs N >= 1");
  if (delta.size() != static_cast<std::size_t>(k)) {
    throw DomainError("gaussian_approx expects " + std::to_string(k) + " offset components");
  }
  if (k == 1) {
    const double d = wrap_centered(delta[0]);
    return std::sqrt(2.0 * kPi * n) / (n + 1.0) * std::exp(-2.0 * n * kPi * kPi * d * d);
  }
  if (k == 2) {
    const double a = wrap_centered(delta[0]);
    const double b = wrap_centered(delta[1]);
    const double prefactor = 8.0 * std::sqrt(3.0) / 9.0 * kPi * n / ((n + 1.0) * (n + 1.0));
    return prefactor * std::exp(-16.0 / 9.0 * n * kPi * kPi * (a * a + b * b - a * b));
  }
  throw UnsupportedError("Gaussian approximant is only available for k = 1 or 2");
}

namespace {

DensityMode automatic_mode(const ProbeState& probe) {
  if (probe.is_uniform()) {
    if (probe.k() == 1) return DensityMode::closed_form_fejer;
    if (probe.k() == 2) return DensityMode::closed_form_double;
  }
  return DensityMode::direct_sum;
}

}  // namespace

ReducedDensity::ReducedDensity(ProbeState probe) : probe_(std::move(probe)), mode_(automatic_mode(probe_)) {}

ReducedDensity::ReducedDensity(ProbeState probe, DensityMode mode) : probe_(std::move(probe)), mode_(mode) {
  const bool uniform = probe_.is_uniform();
  if (mode_ == DensityMode::closed_form_fejer && !(uniform && probe_.k() == 1)) {
    throw UnsupportedError("Fejer closed form needs a uniform single-phase probe");
  }
  if (mode_ == DensityMode::closed_form_double && !(uniform && probe_.k() == 2)) {
    throw UnsupportedError("two-phase closed form needs a uniform two-phase probe");
  }
}

double ReducedDensity::operator()(std::span<const double> gamma) const {
  switch (mode_) {
    case DensityMode::closed_form_fejer:
      check_phase_count(probe_, gamma.size());
      return fejer_density(probe_.n(), gamma[0]);
    case DensityMode::closed_form_double:
      check_phase_count(probe_, gamma.size());
      return double_hb_density(probe_.n(), gamma[0], gamma[1]);
    case DensityMode::direct_sum:
      break;
  }
  return density(probe_, gamma);
}

double ReducedDensity::operator()(double gamma) const {
  const double g[1] = {gamma};
  return (*this)(std::span<const double>(g));
}

double ReducedDensity::operator()(double gamma1, double gamma2) const {
  const double g[2] = {gamma1, gamma2};
  return (*this)(std::span<const double>(g));
}

}  // namespace multiphase
