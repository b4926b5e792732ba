#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace multiphase {

/// Occupation numbers (n_1, ..., n_k) of one vector of the non-degenerate
/// symmetric basis. The reference occupation n_0 = N - sum(n_j) is implied.
using SimplexIndex = std::vector<int>;

/// Ordered enumeration of every SimplexIndex with sum <= N.
///
/// The order is lexicographic on (n_1, ..., n_k), i.e. the nested-sum order
/// with n_1 outermost and n_k innermost. Every amplitude vector in the library
/// is laid out in this order.
class BasisCatalog {
 public:
  BasisCatalog(int k, int n);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return size_; }

  /// Occupations (n_1, ..., n_k) of the i-th basis vector.
  std::span<const int> operator[](std::size_t i) const noexcept {
    return {entries_.data() + i * static_cast<std::size_t>(k_), static_cast<std::size_t>(k_)};
  }

  /// Implied reference occupation n_0 of the i-th basis vector.
  int reference_occupation(std::size_t i) const noexcept;

 private:
  int k_;
  int n_;
  std::size_t size_;
  std::vector<int> entries_;
};

BasisCatalog enumerate_basis(int k, int n);

/// C(N+k, N), the dimension of the symmetric subspace. Throws CapacityError
/// when the value does not fit std::size_t.
std::size_t dimension(int k, int n);

/// ln C(N+k, N) via log-gamma; never overflows.
double log_dimension(int k, int n);

/// ln[ N! / (n_0! n_1! ... n_k!) ] via log-gamma.
double log_multiplicity(int n, std::span<const int> occupation);

}  // namespace multiphase
