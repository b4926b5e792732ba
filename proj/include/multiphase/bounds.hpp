#pragma once

#include <string_view>

namespace multiphase {

/// Standard quantum limit (log2 N)/2 in bits; N >= 1.
double sql(int n);

/// Single-phase Heisenberg bound log2(N+1); N >= 0.
double hb(int n);

/// k-phase Heisenberg bound log2 C(N+k, N); k >= 1, N >= 0.
double hb_k(int k, int n);

enum class Regime { resources_dominant, comparable, phases_dominant };

/// "N>>k", "N~k" or "N<<k".
std::string_view to_string(Regime regime);

struct RegimeAsymptote {
  Regime regime;
  double per_phase_bits;
  /// False when no asymptotic form applies and the exact hb_k/k is reported.
  bool asymptotic;
};

/// Per-phase Heisenberg bound in the regime set by N/k: N/k >= 10 gives
/// log2 N - log2(k!)/k; N/k <= 0.1 gives (N/k) log2[e (1 + k/N)]; in between
/// the plateau of 2 bits applies when k = N and exact hb_k/k otherwise.
RegimeAsymptote regime_asymptote(int k, int n);

struct Advantage {
  double total_bits;
  double per_phase_bits;
};

/// k log2 k - log2 k!, the large-N gain of estimating k phases jointly over
/// splitting the resources among k single-phase estimations.
Advantage multiphase_advantage(long long k);

enum class Strategy { parallel, sequential };
enum class Provenance { closed_form, numeric };

struct AsymptoticOffset {
  double bits;
  Provenance provenance;
};

/// Additive constant of the large-N mutual information, relative to k SQL(N)
/// for the product probe (parallel) or k HB(N) for the Holland-Burnett probe
/// (sequential). The two-phase sequential value has no closed form and is a
/// numerical estimate. k in {1, 2}.
AsymptoticOffset asymptotic_offset(Strategy strategy, int k);

std::string_view to_string(Strategy strategy);

struct BoundsReport {
  int k;
  int n;
  double sql;
  double hb;
  double hb_per_phase;
  Regime regime;
  double regime_asymptote;
  double advantage_per_phase;
};

/// Bounds for one (k, N) point; N >= 1.
BoundsReport bounds_report(int k, int n);

}  // namespace multiphase
