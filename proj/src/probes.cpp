#include "multiphase/probes.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "multiphase/errors.hpp"
#include "multiphase/hilbert.hpp"

namespace multiphase {

std::string_view to_string(ProbeFamily family) {
  switch (family) {
    case ProbeFamily::equatorial_product:
      return "product";
    case ProbeFamily::holland_burnett:
      return "hb";
    case ProbeFamily::custom:
      return "custom";
  }
  return "custom";
}

ProbeState::ProbeState(int k, int n, std::vector<Amplitude> amplitudes, ProbeFamily family)
    : k_(k), n_(n), amplitudes_(std::move(amplitudes)), family_(family) {
  const std::size_t expected = dimension(k, n);
  if (amplitudes_.size() != expected) {
    throw DomainError("probe for k=" + std::to_string(k) + ", N=" + std::to_string(n) + " needs " +
                      std::to_string(expected) + " amplitudes, got " +
                      std::to_string(amplitudes_.size()));
  }
  double norm2 = 0.0;
  for (const auto& c : amplitudes_) norm2 += std::norm(c);
  if (std::abs(norm2 - 1.0) > 1e-12) {
    throw DomainError("probe amplitudes are not normalized (sum |c|^2 = " + std::to_string(norm2) +
                      ")");
  }
}

ProbeState ProbeState::normalized(int k, int n, std::vector<Amplitude> amplitudes) {
  double norm2 = 0.0;
  for (const auto& c : amplitudes) norm2 += std::norm(c);
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
    throw DomainError("cannot normalize a zero or non-finite amplitude vector");
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& c : amplitudes) c *= scale;
  return ProbeState(k, n, std::move(amplitudes));
}

bool ProbeState::is_real_nonnegative(double tol) const noexcept {
  return std::all_of(amplitudes_.begin(), amplitudes_.end(), [tol](const Amplitude& c) {
    return std::abs(c.imag()) <= tol && c.real() >= -tol;
  });
}

bool ProbeState::is_uniform() const noexcept {
  const Amplitude first = amplitudes_.front();
  if (first.imag() != 0.0 || !(first.real() > 0.0)) return false;
  return std::all_of(amplitudes_.begin(), amplitudes_.end(),
                     [first](const Amplitude& c) { return c == first; });
}

ProbeState equatorial_product(int k, int n) {
  const BasisCatalog catalog(k, n);
  const double log_norm = n * std::log(static_cast<double>(k) + 1.0);
  std::vector<Amplitude> amplitudes(catalog.size());
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    amplitudes[i] = std::exp(0.5 * (log_multiplicity(n, catalog[i]) - log_norm));
  }
  // The multinomial theorem makes the vector normalized; renormalizing only
  // absorbs the log-gamma rounding.
  double norm2 = 0.0;
  for (const auto& c : amplitudes) norm2 += std::norm(c);
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& c : amplitudes) c *= scale;
  return ProbeState(k, n, std::move(amplitudes), ProbeFamily::equatorial_product);
}

ProbeState holland_burnett(int k, int n) {
  const std::size_t size = dimension(k, n);
  const double value = 1.0 / std::sqrt(static_cast<double>(size));
  return ProbeState(k, n, std::vector<Amplitude>(size, Amplitude(value, 0.0)),
                    ProbeFamily::holland_burnett);
}

namespace {

struct SimplexSearchResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t evaluations = 0;
};

// Nelder-Mead minimization with the standard coefficients.
SimplexSearchResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                                std::vector<double> start, double step, double ftol,
                                std::size_t max_evaluations) {
  const std::size_t dim = start.size();
  std::vector<std::vector<double>> vertices(dim + 1, start);
  for (std::size_t i = 0; i < dim; ++i) vertices[i + 1][i] += step;
  std::vector<double> values(dim + 1);
  std::size_t evaluations = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evaluations;
    return f(x);
  };
  for (std::size_t i = 0; i <= dim; ++i) values[i] = eval(vertices[i]);

  std::vector<std::size_t> order(dim + 1);
  std::vector<double> centroid(dim), trial(dim), second(dim);
  while (evaluations < max_evaluations) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t next_worst = order[dim - (dim > 0 ? 1 : 0)];

    double diameter = 0.0;
    for (std::size_t i = 0; i <= dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        diameter = std::max(diameter, std::abs(vertices[i][j] - vertices[best][j]));
      }
    }
    if (values[worst] - values[best] <= ftol && diameter < 1e-9) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == worst) continue;
      for (std::size_t j = 0; j < dim; ++j) centroid[j] += vertices[i][j] / static_cast<double>(dim);
    }
    for (std::size_t j = 0; j < dim; ++j) trial[j] = centroid[j] + (centroid[j] - vertices[worst][j]);
    const double reflected = eval(trial);

    if (reflected < values[best]) {
      for (std::size_t j = 0; j < dim; ++j)
        second[j] = centroid[j] + 2.0 * (centroid[j] - vertices[worst][j]);
      const double expanded = eval(second);
      if (expanded < reflected) {
        vertices[worst] = second;
        values[worst] = expanded;
      } else {
        vertices[worst] = trial;
        values[worst] = reflected;
      }
      continue;
    }
    if (reflected < values[next_worst]) {
      vertices[worst] = trial;
      values[worst] = reflected;
      continue;
    }
    const bool outside = reflected < values[worst];
    for (std::size_t j = 0; j < dim; ++j) {
      second[j] = outside ? centroid[j] + 0.5 * (trial[j] - centroid[j])
                          : centroid[j] + 0.5 * (vertices[worst][j] - centroid[j]);
    }
    const double contracted = eval(second);
    if (contracted < std::min(reflected, values[worst])) {
      vertices[worst] = second;
      values[worst] = contracted;
      continue;
    }
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == best) continue;
      for (std::size_t j = 0; j < dim; ++j)
        vertices[i][j] = vertices[best][j] + 0.5 * (vertices[i][j] - vertices[best][j]);
      values[i] = eval(vertices[i]);
    }
  }
  const auto best = static_cast<std::size_t>(
      std::min_element(values.begin(), values.end()) - values.begin());
  return {vertices[best], values[best], evaluations};
}

// Squared overlap with the symmetric product state sum_j sqrt(p_j)|j>, for a
// real non-negative probe. Terms are assembled in log space so that large N
// neither overflows the multinomial nor underflows p^n.
class ProductOverlap {
 public:
  explicit ProductOverlap(const ProbeState& probe) : k_(probe.k()) {
    const BasisCatalog catalog(probe.k(), probe.n());
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      const double c = probe.amplitudes()[i].real();
      if (!(c > 0.0)) continue;
      log_weights_.push_back(std::log(c) + 0.5 * log_multiplicity(probe.n(), catalog[i]));
      occupations_.push_back(catalog.reference_occupation(i));
      for (int nj : catalog[i]) occupations_.push_back(nj);
    }
  }

  // probs holds (p_0, ..., p_k); returns -1 outside the simplex.
  double operator()(std::span<const double> probs) const {
    double total = 0.0;
    for (double p : probs) {
      if (p < 0.0) return -1.0;
      total += p;
    }
    if (std::abs(total - 1.0) > 1e-12) return -1.0;

    const std::size_t width = static_cast<std::size_t>(k_) + 1;
    std::vector<double> half_log(width);
    for (std::size_t j = 0; j < width; ++j) half_log[j] = 0.5 * std::log(probs[j]);

    double sum = 0.0;
    for (std::size_t t = 0; t < log_weights_.size(); ++t) {
      double exponent = log_weights_[t];
      bool vanishes = false;
      for (std::size_t j = 0; j < width; ++j) {
        const int nj = occupations_[t * width + j];
        if (nj == 0) continue;
        if (probs[j] == 0.0) {
          vanishes = true;
          break;
        }
        exponent += nj * half_log[j];
      }
      if (!vanishes) sum += std::exp(exponent);
    }
    return sum * sum;
  }

 private:
  int k_;
  std::vector<double> log_weights_;
  std::vector<int> occupations_;
};

}  // namespace

EntanglementResult geometric_entanglement(const ProbeState& probe, double tol) {
  if (!probe.is_real_nonnegative()) {
    throw UnsupportedError(
        "geometric_entanglement requires real non-negative amplitudes; the relative phases of "
        "the closest product state cannot be fixed to zero for this probe");
  }
  const int k = probe.k();
  const ProductOverlap overlap(probe);
  std::size_t evaluations = 0;

  // Dense grid over the simplex: 64 cells per free coordinate.
  constexpr int kGrid = 64;
  const BasisCatalog grid(k, kGrid);
  std::vector<double> probs(static_cast<std::size_t>(k) + 1);
  auto fill_probs = [&](std::span<const double> free) {
    double rest = 1.0;
    for (int j = 0; j < k; ++j) {
      probs[static_cast<std::size_t>(j) + 1] = free[static_cast<std::size_t>(j)];
      rest -= free[static_cast<std::size_t>(j)];
    }
    // Snap tiny negatives from cancellation so the simplex test is exact.
    probs[0] = std::abs(rest) < 1e-15 ? 0.0 : rest;
  };

  double best_value = -1.0;
  std::vector<double> best_free(static_cast<std::size_t>(k));
  std::vector<double> free(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (int j = 0; j < k; ++j)
      free[static_cast<std::size_t>(j)] = grid[i][static_cast<std::size_t>(j)] / double(kGrid);
    fill_probs(free);
    const double value = overlap(probs);
    ++evaluations;
    if (value > best_value) {
      best_value = value;
      best_free = free;
    }
  }

  auto objective = [&](std::span<const double> x) {
    fill_probs(x);
    return -overlap(probs);
  };
  const auto polished = nelder_mead(objective, best_free, 0.5 / kGrid, tol, 20000);
  evaluations += polished.evaluations;
  if (-polished.value > best_value) {
    best_value = -polished.value;
    best_free = polished.x;
  }

  EntanglementResult result;
  fill_probs(best_free);
  result.argmax_probs = probs;
  result.eg = std::clamp(1.0 - best_value, 0.0, 1.0);
  result.evaluations = evaluations;
  return result;
}

AsymptoticValue eg_asymptotic(int k, int n) {
  if (n < 1) throw DomainError("eg_asymptotic needs N >= 1");
  AsymptoticValue out;
  if (k == 1) {
    out.value = 1.0 - std::sqrt(2.0 * std::numbers::pi * n) / (n + 1.0);
  } else if (k == 2) {
    const double m = static_cast<double>(dimension(2, n));
    out.value = 1.0 - 8.0 * std::numbers::pi * n / (3.0 * std::sqrt(3.0) * m);
  } else {
    throw UnsupportedError("asymptotic geometric measure is only available for k = 1 or 2");
  }
  out.in_regime = out.value >= 0.0 && out.value < 1.0;
  return out;
}

}  // namespace multiphase
