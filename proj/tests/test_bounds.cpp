#include <cmath>
#include <numbers>

#include "doctest.h"
#include "multiphase/bounds.hpp"
#include "multiphase/errors.hpp"
#include "multiphase/hilbert.hpp"

using namespace multiphase;

TEST_SUITE("bounds") {
  TEST_CASE("standard quantum limit and single-phase bound") {
    CHECK(sql(4) == doctest::Approx(1.0));
    CHECK(sql(1) == 0.0);
    CHECK(sql(1024) == doctest::Approx(5.0));
    CHECK_THROWS_AS(sql(0), DomainError);
    CHECK(hb(3) == doctest::Approx(2.0));
    CHECK(hb(0) == 0.0);
    for (int n = 0; n <= 100; ++n) CHECK(hb(n) == doctest::Approx(hb_k(1, n)).epsilon(1e-13));
  }

  TEST_CASE("multiphase bound") {
    CHECK(hb_k(2, 4) == doctest::Approx(std::log2(15.0)).epsilon(1e-13));
    CHECK(hb_k(3, 3) == doctest::Approx(std::log2(20.0)).epsilon(1e-13));
    for (int k = 1; k <= 5; ++k) CHECK(hb_k(k, 0) == doctest::Approx(0.0));
    for (int k = 1; k <= 20; ++k) {
      for (int n = 0; n <= 40; ++n) {
        CHECK(hb_k(k, n) == doctest::Approx(std::log2(static_cast<double>(dimension(k, n)))).epsilon(1e-12));
      }
    }
    for (int k = 1; k <= 200; k += 7) {
      for (int n = 1; n <= 200; n += 11) CHECK(hb_k(k, n) == doctest::Approx(hb_k(n, k)).epsilon(1e-13));
    }
  }

  TEST_CASE("two-phase gain over split resources approaches one bit") {
    double previous = 0.0;
    for (int n : {10, 100, 1000}) {
      const double gain = hb_k(2, n) - 2.0 * hb(n / 2);
      CHECK(gain > previous);
      CHECK(gain < 1.0);
      previous = gain;
    }
    CHECK(previous == doctest::Approx(1.0).epsilon(0.01));
    CHECK(hb_k(2, 1000000) - 2.0 * hb(500000) == doctest::Approx(1.0).epsilon(1e-5));
  }

  TEST_CASE("regimes") {
    const RegimeAsymptote plateau = regime_asymptote(1000, 1000);
    CHECK(plateau.regime == Regime::comparable);
    CHECK(plateau.per_phase_bits == 2.0);
    CHECK(std::abs(hb_k(1000, 1000) / 1000.0 - 2.0) <= 0.01);

    const RegimeAsymptote many = regime_asymptote(2, 1000);
    CHECK(many.regime == Regime::resources_dominant);
    CHECK(many.per_phase_bits == doctest::Approx(std::log2(1000.0) - 0.5).epsilon(1e-13));
    CHECK(many.per_phase_bits == doctest::Approx(9.4658).epsilon(1e-4));

    const RegimeAsymptote few = regime_asymptote(1000, 10);
    CHECK(few.regime == Regime::phases_dominant);
    CHECK(few.per_phase_bits == doctest::Approx(0.01 * std::log2(std::numbers::e * 101.0)).epsilon(1e-13));

    const RegimeAsymptote mid = regime_asymptote(4, 10);
    CHECK(mid.regime == Regime::comparable);
    CHECK_FALSE(mid.asymptotic);
    CHECK(mid.per_phase_bits == doctest::Approx(hb_k(4, 10) / 4.0));
    CHECK(to_string(Regime::resources_dominant) == "N>>k");
    CHECK_THROWS_AS(regime_asymptote(2, 0), DomainError);
  }

  TEST_CASE("multiphase advantage") {
    CHECK(multiphase_advantage(2).total_bits == 1.0);
    CHECK(multiphase_advantage(1).total_bits == 0.0);
    // log2 k - log2(k!)/k rises from 0 towards log2 e.
    double previous = -1.0;
    for (long long k = 1; k <= 10000; ++k) {
      const double per_phase = multiphase_advantage(k).per_phase_bits;
      if (k > 1) CHECK(per_phase > 0.0);
      CHECK(per_phase > previous);
      CHECK(per_phase < std::numbers::log2e);
      previous = per_phase;
    }
    // Stirling: log2 e - log2(2 pi k) / (2k) + O(1/k^2).
    const double k = 1e6;
    const double stirling = std::numbers::log2e - std::log2(2.0 * std::numbers::pi * k) / (2.0 * k);
    CHECK(multiphase_advantage(1000000).per_phase_bits == doctest::Approx(stirling).epsilon(1e-11));
    CHECK_THROWS_AS(multiphase_advantage(0), DomainError);
  }

  TEST_CASE("asymptotic offsets") {
    const auto p1 = asymptotic_offset(Strategy::parallel, 1);
    CHECK(p1.bits == doctest::Approx(0.60440).epsilon(1e-4));
    CHECK(p1.provenance == Provenance::closed_form);
    CHECK(asymptotic_offset(Strategy::sequential, 1).bits == doctest::Approx(-1.21990).epsilon(1e-5));
    CHECK(asymptotic_offset(Strategy::parallel, 2).bits == doctest::Approx(0.83137).epsilon(1e-5));
    const auto s2 = asymptotic_offset(Strategy::sequential, 2);
    CHECK(s2.bits == -3.7899);
    CHECK(s2.provenance == Provenance::numeric);
    CHECK_THROWS_AS(asymptotic_offset(Strategy::parallel, 3), UnsupportedError);
  }

  TEST_CASE("report") {
    const BoundsReport r = bounds_report(2, 16);
    CHECK(r.hb == doctest::Approx(std::log2(17.0)));
    CHECK(r.hb_per_phase == doctest::Approx(hb_k(2, 16) / 2.0));
    CHECK(r.sql == doctest::Approx(2.0));
    CHECK(r.regime == Regime::comparable);
    CHECK(r.advantage_per_phase == doctest::Approx(0.5));
  }
}
