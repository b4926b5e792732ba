#include "multiphase/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "multiphase/errors.hpp"

namespace multiphase {

namespace {

void check_arguments(int k, int n) {
  if (k < 1) throw DomainError("phase count k must be >= 1, got " + std::to_string(k));
  if (n < 0) throw DomainError("resource count N must be >= 0, got " + std::to_string(n));
}

}  // namespace

std::size_t dimension(int k, int n) {
  check_arguments(k, n);
  // C(N+k, k) built as prod_{i=1..k} (N+i)/i; every partial product is itself
  // a binomial coefficient, so after cancelling gcd(value, i) the remaining
  // divisor goes into N+i exactly.
  const int small = std::min(k, n);
  const int large = std::max(k, n);
  std::size_t value = 1;
  for (int i = 1; i <= small; ++i) {
    const auto d = static_cast<std::size_t>(i);
    const std::size_t g = std::gcd(value, d);
    const std::size_t factor = static_cast<std::size_t>(large + i) / (d / g);
    if (__builtin_mul_overflow(value / g, factor, &value)) {
      throw CapacityError("dimension C(N+k, N) overflows the index range for k=" +
                          std::to_string(k) + ", N=" + std::to_string(n));
    }
  }
  return value;
}

double log_dimension(int k, int n) {
  check_arguments(k, n);
  return std::lgamma(n + k + 1.0) - std::lgamma(n + 1.0) - std::lgamma(k + 1.0);
}

double log_multiplicity(int n, std::span<const int> occupation) {
  int rest = n;
  double value = std::lgamma(n + 1.0);
  for (int nj : occupation) {
    value -= std::lgamma(nj + 1.0);
    rest -= nj;
  }
  if (rest < 0) throw DomainError("occupation numbers exceed N=" + std::to_string(n));
  return value - std::lgamma(rest + 1.0);
}

BasisCatalog::BasisCatalog(int k, int n) : k_(k), n_(n), size_(dimension(k, n)) {
  if (size_ > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(k)) {
    throw CapacityError("basis catalog for k=" + std::to_string(k) + ", N=" + std::to_string(n) +
                        " does not fit in memory");
  }
  entries_.resize(size_ * static_cast<std::size_t>(k));

  std::vector<int> current(static_cast<std::size_t>(k), 0);
  int sum = 0;
  for (std::size_t i = 0; i < size_; ++i) {
    std::copy(current.begin(), current.end(), entries_.begin() + static_cast<std::ptrdiff_t>(i * k));
    // Odometer step: the innermost coordinate moves fastest.
    if (sum < n) {
      ++current.back();
      ++sum;
      continue;
    }
    int j = k - 1;
    while (j >= 0 && current[static_cast<std::size_t>(j)] == 0) --j;
    if (j <= 0) break;  // (N, 0, ..., 0) is the last vector
    sum -= current[static_cast<std::size_t>(j)] - 1;
    current[static_cast<std::size_t>(j)] = 0;
    ++current[static_cast<std::size_t>(j - 1)];
  }
}

int BasisCatalog::reference_occupation(std::size_t i) const noexcept {
  const auto row = (*this)[i];
  return n_ - std::accumulate(row.begin(), row.end(), 0);
}

BasisCatalog enumerate_basis(int k, int n) { return BasisCatalog(k, n); }

}  // namespace multiphase
