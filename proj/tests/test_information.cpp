#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "multiphase/bounds.hpp"
#include "multiphase/channel.hpp"
#include "multiphase/errors.hpp"
#include "multiphase/information.hpp"
#include "support.hpp"

using namespace multiphase;

namespace {

double xlog2x(double g) { return g > 0.0 ? g * std::log2(g) : 0.0; }

using testing_support::trapezoid_mi;

ProbeState family(int k, int n, bool hb) { return hb ? holland_burnett(k, n) : equatorial_product(k, n); }

}  // namespace

TEST_SUITE("information") {
  TEST_CASE("analytic point") {
    const auto r = mutual_information(holland_burnett(1, 1), 1e-9);
    const double exact = 1.0 / std::numbers::ln2 - 1.0;
    CHECK(std::abs(r.value - exact) <= 1e-9);
    CHECK(r.abs_error_estimate <= 1e-9);
    // Dense trapezoid on the closed-form integrand 2 cos^2(pi x).
    const int points = 1 << 20;
    double s = 0.0;
    for (int i = 0; i < points; ++i) {
      const double c = std::cos(std::numbers::pi * i / points);
      s += xlog2x(2.0 * c * c);
    }
    CHECK(std::abs(r.value - s / points) <= 1e-9);
  }

  TEST_CASE("no resources, no information") {
    CHECK(mutual_information(holland_burnett(1, 0), 1e-8).value == 0.0);
    CHECK(mutual_information(holland_burnett(2, 0), 1e-8).value == 0.0);
    CHECK(mutual_information_discrete(equatorial_product(2, 0), 1e-8).value == doctest::Approx(0.0));
  }

  TEST_CASE("trapezoid oracle") {
    for (bool hb : {false, true}) {
      const ProbeState one = family(1, 6, hb);
      CHECK(std::abs(mutual_information(one, 1e-9).value - trapezoid_mi(one, 1 << 14)) <= 1e-7);
      const ProbeState two = family(2, 4, hb);
      CHECK(std::abs(mutual_information(two, 1e-8).value - trapezoid_mi(two, 512)) <= 1e-5);
    }
  }

  TEST_CASE("continuous and discrete routes agree") {
    const double tol = 1e-7;
    for (int k = 1; k <= 2; ++k) {
      for (int n = 0; n <= 8; ++n) {
        for (bool hb : {false, true}) {
          const ProbeState p = family(k, n, hb);
          const auto c = mutual_information(p, tol);
          const auto d = mutual_information_discrete(p, tol);
          CHECK(std::abs(c.value - d.value) <= 2.0 * tol);
        }
      }
    }
    const ProbeState p = equatorial_product(1, 4);
    CHECK(std::abs(mutual_information(p, 1e-9).value - mutual_information_discrete(p, 1e-9).value) <= 1e-6);
  }

  TEST_CASE("random probes agree across routes") {
    std::mt19937_64 rng(23);
    for (int k = 1; k <= 2; ++k) {
      for (int n : {2, 5}) {
        const ProbeState p = testing_support::random_probe(rng, k, n);
        CHECK(std::abs(mutual_information(p, 1e-7).value -
                       mutual_information_discrete(p, 1e-7).value) <= 2e-7);
      }
    }
  }

  TEST_CASE("information grows with resources and respects the Heisenberg bound") {
    const double tol = 1e-8;
    for (bool hb : {false, true}) {
      double previous = -1.0;
      for (int n = 0; n <= 30; ++n) {
        const double value = mutual_information(family(1, n, hb), tol).value;
        CHECK(value >= previous - tol);
        CHECK(value <= hb_k(1, n) + tol);
        previous = value;
      }
      previous = -1.0;
      for (int n = 0; n <= 12; ++n) {
        const double value = mutual_information(family(2, n, hb), 1e-7).value;
        CHECK(value >= previous - 1e-7);
        CHECK(value <= hb_k(2, n) + 1e-7);
        previous = value;
      }
    }
  }

  TEST_CASE("halving the tolerance stays within the error estimates") {
    for (bool hb : {false, true}) {
      for (int k = 1; k <= 2; ++k) {
        const ProbeState p = family(k, 10, hb);
        const auto coarse = mutual_information(p, 1e-5);
        const auto fine = mutual_information(p, 5e-6);
        CHECK(std::abs(coarse.value - fine.value) <= coarse.abs_error_estimate + fine.abs_error_estimate);
      }
    }
  }

  TEST_CASE("spectral route") {
    MiOptions spectral;
    spectral.tol = 1e-9;
    spectral.method = MiMethod::spectral;
    for (int k = 1; k <= 2; ++k) {
      const ProbeState p = equatorial_product(k, 20);
      CHECK(std::abs(mutual_information(p, spectral).value - mutual_information(p, 1e-9).value) <= 1e-8);
    }
    MiOptions tiny = spectral;
    tiny.budget = 100;
    CHECK_THROWS_AS(mutual_information(equatorial_product(2, 20), tiny), BudgetExceeded);
  }

  TEST_CASE("global phase does not matter") {
    std::mt19937_64 rng(29);
    const ProbeState p = testing_support::random_probe(rng, 2, 4);
    std::vector<Amplitude> rotated(p.amplitudes().begin(), p.amplitudes().end());
    for (auto& a : rotated) a *= std::polar(1.0, 0.7);
    const ProbeState q(2, 4, rotated);
    CHECK(mutual_information(q, 1e-8).value == doctest::Approx(mutual_information(p, 1e-8).value).epsilon(1e-10));
  }

  TEST_CASE("argument checks and budget") {
    CHECK_THROWS_AS(mutual_information(holland_burnett(3, 2), 1e-6), UnsupportedError);
    CHECK_THROWS_AS(mutual_information(holland_burnett(1, 2), 0.0), DomainError);
    MiOptions small;
    small.tol = 1e-13;
    small.budget = 3000;
    try {
      mutual_information(holland_burnett(1, 30), small);
      FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
      CHECK(e.partial().evaluations <= 3000);
      CHECK(e.partial().evaluations > 1860);
      CHECK(std::isfinite(e.partial().value));
    }
    CHECK(default_budget(1) == 10000000);
    CHECK(default_budget(2) == 1000000000);
  }

  TEST_CASE("Bayes cost") {
    const CostFunction holevo = CostFunction::holevo_sine();
    for (int n = 1; n <= 16; ++n) {
      const ProbeState p = holland_burnett(1, n);
      const auto c = bayes_cost(p, holevo, EstimatorMode::continuous, 1e-11);
      const auto d = bayes_cost(p, holevo, EstimatorMode::discrete, 1e-11);
      CHECK(std::abs(c.value - d.value) <= 1e-9);
      // Only the first Fourier coefficient of g survives: 2 - 2 (N/(N+1)).
      CHECK(c.value == doctest::Approx(2.0 / (n + 1.0)).epsilon(1e-10));
    }
    CHECK(bayes_cost(holland_burnett(1, 0), holevo, EstimatorMode::continuous, 1e-11).value ==
          doctest::Approx(2.0).epsilon(1e-10));
    CHECK(bayes_cost(equatorial_product(1, 1), holevo, EstimatorMode::discrete, 1e-11).value ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(holevo(0.3, 0.0) == doctest::Approx(holevo(-0.3, 0.0)));
    CHECK(holevo(0.3, 0.0) == doctest::Approx(holevo(1.3, 0.0)));

    const CostFunction surprise = CostFunction::surprise();
    CHECK_THROWS_AS(bayes_cost(holland_burnett(1, 3), surprise, EstimatorMode::discrete, 1e-8),
                    UnsupportedError);
    const ProbeState p = equatorial_product(1, 5);
    CHECK(bayes_cost(p, surprise, EstimatorMode::continuous, 1e-9).value ==
          doctest::Approx(-mutual_information(p, 1e-9).value).epsilon(1e-8));
    const CostFunction square = CostFunction::custom([](double g) {
      const double w = g - std::floor(g + 0.5);
      return w * w;
    });
    CHECK(bayes_cost(p, square, EstimatorMode::continuous, 1e-10).value ==
          doctest::Approx(bayes_cost(p, square, EstimatorMode::discrete, 1e-10).value).epsilon(1e-8));
    CHECK_THROWS_AS(bayes_cost(holland_burnett(2, 3), holevo, EstimatorMode::continuous, 1e-8),
                    UnsupportedError);
  }
}
