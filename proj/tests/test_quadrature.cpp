#include <cmath>
#include <numbers>

#include "doctest.h"
#include "multiphase/quadrature.hpp"

using namespace multiphase;

TEST_SUITE("quadrature") {
  TEST_CASE("one-dimensional rule is exact on polynomials") {
    const auto r = integrate_1d([](double x) { return std::pow(x, 13) - 3.0 * x * x; }, 0.0, 1.0, 1,
                                1e-14, 1000);
    CHECK(r.value == doctest::Approx(1.0 / 14.0 - 1.0).epsilon(1e-15));
    CHECK(r.evaluations == 15);
  }

  TEST_CASE("one-dimensional adaptive integrals") {
    const auto r = integrate_1d([](double x) { return std::sqrt(x); }, 0.0, 1.0, 4, 1e-12, 1000000);
    CHECK(std::abs(r.value - 2.0 / 3.0) <= 1e-12);
    CHECK(r.abs_error_estimate <= 1e-12);
    const auto s = integrate_1d([](double x) { return std::sin(40.0 * x); }, 0.0, std::numbers::pi,
                                16, 1e-12, 1000000);
    CHECK(std::abs(s.value) <= 1e-12);
  }

  TEST_CASE("two-dimensional rule is exact on polynomials") {
    // Degree five: both embedded rules are exact, so one cell suffices.
    const auto r = integrate_2d([](double x, double y) { return x * x * y * y * y + x * x * x * x * y; },
                                0.0, 1.0, 0.0, 2.0, 1, 1e-12, 1000);
    CHECK(r.value == doctest::Approx(4.0 / 3.0 + 2.0 / 5.0).epsilon(1e-14));
    CHECK(r.evaluations == 17);
    // Degree seven: the value is exact, though the error estimate is not zero.
    const auto s = integrate_2d([](double x, double y) { return x * x * x * y * y * y * y + x * y; },
                                0.0, 1.0, 0.0, 2.0, 1, 1e-3, 1000000);
    CHECK(s.value == doctest::Approx(0.25 * 32.0 / 5.0 + 0.5 * 2.0).epsilon(1e-14));
  }

  TEST_CASE("two-dimensional adaptive integral") {
    auto f = [](double x, double y) { return std::exp(-50.0 * ((x - 0.3) * (x - 0.3) + (y - 0.6) * (y - 0.6))); };
    const auto r = integrate_2d(f, -2.0, 2.0, -2.0, 2.0, 4, 1e-10, 100000000);
    CHECK(std::abs(r.value - std::numbers::pi / 50.0) <= 1e-10);
    CHECK(r.abs_error_estimate <= 1e-10);
  }

  TEST_CASE("budget exhaustion carries the partial result") {
    auto f = [](double x) { return std::sqrt(std::abs(x - 0.31)); };
    try {
      integrate_1d(f, 0.0, 1.0, 2, 1e-14, 200);
      FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
      CHECK(e.partial().evaluations <= 200);
      CHECK(e.partial().evaluations > 0);
      CHECK(e.partial().value == doctest::Approx(0.4972).epsilon(0.01));
    }
    CHECK_THROWS_AS(integrate_2d([](double, double) { return 1.0; }, 0, 1, 0, 1, 100, 1e-3, 1000),
                    BudgetExceeded);
  }

  TEST_CASE("results are bit-for-bit reproducible") {
    auto f = [](double x, double y) { return std::cos(17.0 * x * y) * std::exp(x); };
    const auto a = integrate_2d(f, 0, 1, 0, 1, 8, 1e-9, 10000000);
    const auto b = integrate_2d(f, 0, 1, 0, 1, 8, 1e-9, 10000000);
    CHECK(a.value == b.value);
    CHECK(a.abs_error_estimate == b.abs_error_estimate);
    CHECK(a.evaluations == b.evaluations);
  }

  TEST_CASE("compensated summation") {
    CompensatedSum s;
    s.add(1.0);
    for (int i = 0; i < 1000; ++i) s.add(1e-17);
    s.add(-1.0);
    CHECK(s.value() == doctest::Approx(1e-14).epsilon(1e-10));
  }
}
