#include "spectral.hpp"

#include <fftw3.h>

#include <bit>
#include <cmath>
#include <complex>
#include <cstdio>
#include <memory>
#include <string>

#include "multiphase/errors.hpp"

namespace multiphase::detail {

namespace {

struct FftwFree {
  void operator()(fftw_complex* p) const noexcept { fftw_free(p); }
};
using Buffer = std::unique_ptr<fftw_complex[], FftwFree>;

Buffer allocate(std::size_t count) {
  auto* p = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * count));
  if (p == nullptr) throw CapacityError("FFT buffer allocation failed");
  return Buffer(p);
}

class Plan {
 public:
  // howmany in-place backward transforms of length `length`, contiguous rows.
  Plan(fftw_complex* data, int length, int howmany) {
    plan_ = fftw_plan_many_dft(1, &length, howmany, data, nullptr, 1, length, data, nullptr, 1,
                               length, FFTW_BACKWARD, FFTW_ESTIMATE);
    if (plan_ == nullptr) throw Error("FFTW planning failed");
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
  ~Plan() { fftw_destroy_plan(plan_); }
  void execute() const { fftw_execute(plan_); }

 private:
  fftw_plan plan_;
};

double entropy_term(const fftw_complex& a) {
  const double g = a[0] * a[0] + a[1] * a[1];
  return g > 0.0 ? g * std::log2(g) : 0.0;
}

double trapezoid_1d(const ProbeState& probe, std::size_t length) {
  Buffer buf = allocate(length);
  const auto amps = probe.amplitudes();
  for (std::size_t i = 0; i < length; ++i) {
    const Amplitude c = i < amps.size() ? amps[i] : Amplitude{};
    buf[i][0] = c.real();
    buf[i][1] = c.imag();
  }
  Plan plan(buf.get(), static_cast<int>(length), 1);
  plan.execute();
  CompensatedSum sum;
  for (std::size_t i = 0; i < length; ++i) sum.add(entropy_term(buf[i]));
  return sum.value() / static_cast<double>(length);
}

double trapezoid_2d(const ProbeState& probe, std::size_t length) {
  const auto n = static_cast<std::size_t>(probe.n());
  const auto amps = probe.amplitudes();

  // Transform along the second phase for each n1: rows[n1][y].
  Buffer rows = allocate((n + 1) * length);
  std::size_t offset = 0;
  for (std::size_t n1 = 0; n1 <= n; ++n1) {
    fftw_complex* row = rows.get() + n1 * length;
    const std::size_t count = n - n1 + 1;
    for (std::size_t j = 0; j < length; ++j) {
      const Amplitude c = j < count ? amps[offset + j] : Amplitude{};
      row[j][0] = c.real();
      row[j][1] = c.imag();
    }
    offset += count;
  }
  {
    Plan plan(rows.get(), static_cast<int>(length), static_cast<int>(n + 1));
    plan.execute();
  }

  // Then along the first phase, a block of columns at a time.
  constexpr std::size_t kBlock = 64;
  const std::size_t block = std::min(kBlock, length);
  Buffer cols = allocate(block * length);
  Plan plan(cols.get(), static_cast<int>(length), static_cast<int>(block));
  CompensatedSum sum;
  for (std::size_t y0 = 0; y0 < length; y0 += block) {
    for (std::size_t w = 0; w < block; ++w) {
      fftw_complex* col = cols.get() + w * length;
      for (std::size_t n1 = 0; n1 < length; ++n1) {
        if (n1 <= n) {
          col[n1][0] = rows[n1 * length + y0 + w][0];
          col[n1][1] = rows[n1 * length + y0 + w][1];
        } else {
          col[n1][0] = 0.0;
          col[n1][1] = 0.0;
        }
      }
    }
    plan.execute();
    for (std::size_t i = 0; i < block * length; ++i) sum.add(entropy_term(cols[i]));
  }
  return sum.value() / (static_cast<double>(length) * static_cast<double>(length));
}

}  // namespace

QuadratureResult spectral_mutual_information(const ProbeState& probe, double tol,
                                             std::size_t budget) {
  const int k = probe.k();
  if (k != 1 && k != 2) throw UnsupportedError("spectral route supports k = 1 or 2");
  auto length = std::bit_ceil(static_cast<std::size_t>(probe.n()) + 1);
  if (length < 8) length = 8;
  const auto cost = [k](std::size_t len) { return k == 1 ? len : len * len; };

  QuadratureResult result;
  if (cost(length) > budget) {
    throw BudgetExceeded("spectral grid exceeds the evaluation budget", {0.0, INFINITY, 0});
  }
  auto trapezoid = [&](std::size_t len) {
    result.evaluations += cost(len);
    return k == 1 ? trapezoid_1d(probe, len) : trapezoid_2d(probe, len);
  };
  double previous = trapezoid(length);
  double error = INFINITY;
  while (true) {
    length *= 2;
    if (result.evaluations + cost(length) > budget) {
      result.value = previous;
      result.abs_error_estimate = error;
      char message[128];
      std::snprintf(message, sizeof message,
                    "spectral grid did not reach tolerance %.3g (estimate %.3g) within %zu evaluations",
                    tol, error, budget);
      throw BudgetExceeded(message, result);
    }
    const double current = trapezoid(length);
    error = std::abs(current - previous);
    previous = current;
    if (error <= tol) break;
  }
  result.value = previous;
  result.abs_error_estimate = error;
  return result;
}

}  // namespace multiphase::detail
