#include "multiphase/bounds.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "multiphase/errors.hpp"
#include "multiphase/hilbert.hpp"

namespace multiphase {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kResourcesDominant = 10.0;
constexpr double kPhasesDominant = 0.1;

// Two-phase Holland-Burnett offset, known only from quadrature at N = 500.
constexpr double kSequentialTwoPhase = -3.7899;

double log2_factorial(double k) { return std::lgamma(k + 1.0) / kLn2; }

}  // namespace

double sql(int n) {
  if (n < 1) throw DomainError("SQL needs N >= 1");
  return 0.5 * std::log2(static_cast<double>(n));
}

double hb(int n) {
  if (n < 0) throw DomainError("HB needs N >= 0");
  return std::log2(n + 1.0);
}

double hb_k(int k, int n) {
  // Exact integer dimension when it is representable, log-gamma otherwise.
  constexpr std::size_t kExactLimit = std::size_t{1} << 53;
  try {
    const std::size_t d = dimension(k, n);
    if (d <= kExactLimit) return std::log2(static_cast<double>(d));
  } catch (const CapacityError&) {
  }
  return log_dimension(k, n) / kLn2;
}

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::resources_dominant:
      return "N>>k";
    case Regime::comparable:
      return "N~k";
    case Regime::phases_dominant:
      return "N<<k";
  }
  return "?";
}

RegimeAsymptote regime_asymptote(int k, int n) {
  if (k < 1 || n < 1) throw DomainError("regime_asymptote needs k >= 1 and N >= 1");
  const double ratio = static_cast<double>(n) / k;
  if (ratio >= kResourcesDominant) {
    return {Regime::resources_dominant, std::log2(static_cast<double>(n)) - log2_factorial(k) / k,
            true};
  }
  if (ratio <= kPhasesDominant) {
    return {Regime::phases_dominant, ratio * std::log2(std::numbers::e * (1.0 + 1.0 / ratio)), true};
  }
  if (k == n) return {Regime::comparable, 2.0, true};
  return {Regime::comparable, hb_k(k, n) / k, false};
}

Advantage multiphase_advantage(long long k) {
  if (k < 1) throw DomainError("multiphase_advantage needs k >= 1");
  const auto kd = static_cast<double>(k);
  const double total = kd * std::log2(kd) - log2_factorial(kd);
  return {total, total / kd};
}

std::string_view to_string(Strategy strategy) {
  return strategy == Strategy::parallel ? "parallel" : "sequential";
}

AsymptoticOffset asymptotic_offset(Strategy strategy, int k) {
  const double inv_ln2 = 1.0 / kLn2;
  if (strategy == Strategy::parallel) {
    if (k == 1) return {0.5 * (std::log2(2.0 * std::numbers::pi) - inv_ln2), Provenance::closed_form};
    if (k == 2) {
      return {std::log2(8.0 * std::sqrt(3.0) * std::numbers::pi / 9.0) - inv_ln2,
              Provenance::closed_form};
    }
  } else {
    if (k == 1) {
      return {-2.0 * (1.0 - (std::numbers::egamma + kLn2 - 1.0) / kLn2), Provenance::closed_form};
    }
    if (k == 2) return {kSequentialTwoPhase, Provenance::numeric};
  }
  throw UnsupportedError("no asymptotic offset for " + std::string(to_string(strategy)) +
                         " strategy with k = " + std::to_string(k));
}

BoundsReport bounds_report(int k, int n) {
  const RegimeAsymptote regime = regime_asymptote(k, n);
  const double total = hb_k(k, n);
  return {k,     n,        sql(n), hb(n), total / k, regime.regime, regime.per_phase_bits,
          multiphase_advantage(k).per_phase_bits};
}

}  // namespace multiphase
