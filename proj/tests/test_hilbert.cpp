#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "multiphase/errors.hpp"
#include "multiphase/hilbert.hpp"

using namespace multiphase;
using boost::multiprecision::cpp_int;

namespace {

cpp_int factorial(int n) {
  cpp_int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

cpp_int exact_multinomial(int n, const std::vector<int>& occ) {
  int rest = n;
  cpp_int denom = 1;
  for (int v : occ) {
    denom *= factorial(v);
    rest -= v;
  }
  denom *= factorial(rest);
  return factorial(n) / denom;
}

// Pascal triangle rows up to 60.
std::vector<std::vector<std::size_t>> pascal(int rows) {
  std::vector<std::vector<std::size_t>> t(static_cast<std::size_t>(rows + 1));
  for (int r = 0; r <= rows; ++r) {
    auto& row = t[static_cast<std::size_t>(r)];
    row.assign(static_cast<std::size_t>(r + 1), 1);
    for (int c = 1; c < r; ++c) {
      row[static_cast<std::size_t>(c)] =
          t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] +
          t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)];
    }
  }
  return t;
}

// Every point of [0, N]^k with coordinate sum <= N, in lexicographic order.
std::vector<std::vector<int>> brute_force(int k, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(static_cast<std::size_t>(k), 0);
  while (true) {
    int s = 0;
    for (int x : v) s += x;
    if (s <= n) out.push_back(v);
    int j = k - 1;
    while (j >= 0 && v[static_cast<std::size_t>(j)] == n) v[static_cast<std::size_t>(j--)] = 0;
    if (j < 0) break;
    ++v[static_cast<std::size_t>(j)];
  }
  return out;
}

}  // namespace

TEST_SUITE("hilbert") {
  TEST_CASE("single-phase ladder") {
    const BasisCatalog c = enumerate_basis(1, 3);
    REQUIRE(c.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(c[i][0] == static_cast<int>(i));
      CHECK(c.reference_occupation(i) == 3 - static_cast<int>(i));
    }
  }

  TEST_CASE("named dimensions") {
    CHECK(dimension(2, 4) == 15);
    CHECK(enumerate_basis(2, 4).size() == 15);
    CHECK(dimension(5, 5) == 252);
    CHECK(dimension(3, 2) == 10);
    for (int n = 0; n <= 50; ++n) CHECK(dimension(1, n) == static_cast<std::size_t>(n + 1));
  }

  TEST_CASE("dimension matches Pascal triangle and is symmetric") {
    const auto t = pascal(60);
    for (int k = 1; k <= 30; ++k) {
      for (int n = 0; n + k <= 60; ++n) {
        CHECK(dimension(k, n) == t[static_cast<std::size_t>(n + k)][static_cast<std::size_t>(n)]);
        if (n >= 1) CHECK(dimension(k, n) == dimension(n, k));
      }
    }
  }

  TEST_CASE("catalog equals brute-force enumeration in order") {
    for (int k = 1; k <= 4; ++k) {
      for (int n = 0; n <= 6; ++n) {
        const BasisCatalog c = enumerate_basis(k, n);
        const auto expected = brute_force(k, n);
        REQUIRE(c.size() == expected.size());
        REQUIRE(c.size() == dimension(k, n));
        for (std::size_t i = 0; i < c.size(); ++i) {
          const std::vector<int> got(c[i].begin(), c[i].end());
          CHECK(got == expected[i]);
        }
      }
    }
    const BasisCatalog c = enumerate_basis(3, 2);
    std::set<std::vector<int>> distinct;
    for (std::size_t i = 0; i < c.size(); ++i) distinct.emplace(c[i].begin(), c[i].end());
    CHECK(distinct.size() == 10);
  }

  TEST_CASE("log multiplicity") {
    const int one[1] = {1};
    CHECK(log_multiplicity(2, one) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    const int two_one[2] = {2, 1};
    CHECK(log_multiplicity(4, two_one) == doctest::Approx(std::log(12.0)).epsilon(1e-14));
  }

  TEST_CASE("log multiplicity agrees with exact big integers") {
    const std::vector<std::pair<int, std::vector<int>>> cases = {
        {60, {20, 20}}, {40, {3, 17, 9}}, {100, {50}}, {80, {1, 0, 40}}, {20, {5, 5, 5}}};
    for (const auto& [n, occ] : cases) {
      const double exact = std::log(exact_multinomial(n, occ).convert_to<double>());
      CHECK(std::abs(log_multiplicity(n, occ) - exact) <= 1e-12 * exact);
    }
  }

  TEST_CASE("multinomials over the catalog sum to (k+1)^N") {
    for (int k = 1; k <= 3; ++k) {
      for (int n = 0; n <= 20; ++n) {
        const BasisCatalog c = enumerate_basis(k, n);
        cpp_int total = 0;
        for (std::size_t i = 0; i < c.size(); ++i) {
          total += exact_multinomial(n, std::vector<int>(c[i].begin(), c[i].end()));
        }
        cpp_int expected = 1;
        for (int i = 0; i < n; ++i) expected *= (k + 1);
        CHECK(total == expected);
      }
    }
  }

  TEST_CASE("log dimension") {
    CHECK(log_dimension(2, 4) == doctest::Approx(std::log(15.0)).epsilon(1e-14));
    CHECK(log_dimension(3, 0) == doctest::Approx(0.0));
    CHECK(std::isfinite(log_dimension(1000, 1000)));
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(dimension(0, 3), DomainError);
    CHECK_THROWS_AS(dimension(2, -1), DomainError);
    CHECK_THROWS_AS(dimension(40, 1000), CapacityError);
    CHECK_THROWS_AS(enumerate_basis(40, 1000), CapacityError);
    const int too_many[2] = {3, 3};
    CHECK_THROWS_AS(log_multiplicity(5, too_many), DomainError);
  }
}
