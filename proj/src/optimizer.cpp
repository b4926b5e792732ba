#include "multiphase/optimizer.hpp"

#include <cmath>
#include <random>
#include <string>

#include "multiphase/errors.hpp"
#include "multiphase/hilbert.hpp"
#include "multiphase/information.hpp"

namespace multiphase {

namespace {

constexpr std::size_t kMaxDimension = 200;
constexpr double kInitialStep = 0.25;
constexpr double kMinStep = 1e-4;
constexpr std::size_t kMaxEvaluationsPerStart = 200000;

void check_phase_count(int k) {
  if (k != 1 && k != 2) throw UnsupportedError("probe optimization supports k = 1 or 2");
}

std::vector<double> magnitudes(const ProbeState& probe) {
  std::vector<double> x;
  x.reserve(probe.size());
  for (const Amplitude& a : probe.amplitudes()) x.push_back(std::abs(a));
  return x;
}

double norm(const std::vector<double>& x) {
  double s = 0.0;
  for (const double v : x) s += v * v;
  return std::sqrt(s);
}

ProbeState to_probe(int k, int n, const std::vector<double>& x) {
  const double r = norm(x);
  std::vector<Amplitude> amps(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) amps[i] = x[i] / r;
  return ProbeState::normalized(k, n, std::move(amps));
}

struct LocalResult {
  std::vector<double> x;
  double value;
  std::size_t evaluations;
  bool converged;
};

class Objective {
 public:
  Objective(int k, int n, double tol) : k_(k), n_(n), tol_(tol) {}
  double operator()(const std::vector<double>& x) {
    ++evaluations_;
    return mutual_information(to_probe(k_, n_, x), tol_).value;
  }
  std::size_t evaluations() const noexcept { return evaluations_; }

 private:
  int k_;
  int n_;
  double tol_;
  std::size_t evaluations_ = 0;
};

// Coordinate (compass) search on the positive orthant; the point is
// renormalized after each accepted move so the step is relative to the sphere.
LocalResult compass_search(Objective& objective, std::vector<double> x, double tol) {
  const std::size_t first = objective.evaluations();
  double best = objective(x);
  double step = kInitialStep;
  const double margin = 2.0 * tol;
  bool converged = false;
  while (objective.evaluations() - first < kMaxEvaluationsPerStart) {
    bool moved = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (const double direction : {1.0, -1.0}) {
        std::vector<double> trial = x;
        trial[i] = std::max(0.0, trial[i] + direction * step);
        if (trial[i] == x[i] || norm(trial) == 0.0) continue;
        const double value = objective(trial);
        if (value > best + margin) {
          const double r = norm(trial);
          for (double& v : trial) v /= r;
          x = std::move(trial);
          best = value;
          moved = true;
          break;
        }
      }
    }
    if (!moved) {
      step *= 0.5;
      if (step < kMinStep) {
        converged = true;
        break;
      }
    }
  }
  return {std::move(x), best, objective.evaluations() - first, converged};
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

OptimizationRun optimize_probe(int k, int n, double tol, int starts, std::uint64_t seed) {
  check_phase_count(k);
  if (n < 0) throw DomainError("N must be non-negative");
  if (starts < 2) throw DomainError("optimization needs at least the two named starts");
  const std::size_t dim = dimension(k, n);
  if (dim > kMaxDimension) {
    throw CapacityError("probe dimension " + std::to_string(dim) + " exceeds the optimizer limit of " +
                        std::to_string(kMaxDimension));
  }

  Objective objective(k, n, tol);
  std::mt19937_64 rng(seed);
  std::vector<std::vector<double>> initial;
  initial.push_back(magnitudes(equatorial_product(k, n)));
  initial.push_back(magnitudes(holland_burnett(k, n)));
  for (int s = 2; s < starts; ++s) {
    std::vector<double> x(dim);
    for (double& v : x) v = uniform01(rng);
    initial.push_back(std::move(x));
  }

  OptimizationRun run{holland_burnett(k, n), 0.0, starts, 0, true, seed, 0.0, 0.0};
  run.product_mi = objective(initial[0]);
  run.hb_mi = objective(initial[1]);
  std::optional<LocalResult> best;
  for (auto& x0 : initial) {
    LocalResult local = compass_search(objective, std::move(x0), tol);
    run.converged = run.converged && local.converged;
    if (!best || local.value > best->value) best = std::move(local);
  }
  run.best_probe = to_probe(k, n, best->x);
  run.best_mi = best->value;
  run.iterations = objective.evaluations();
  return run;
}

ProbeState local_optimal_probe(int k, int n) { return holland_burnett(k, n); }

CrossoverResult crossover(int k, int n_max, double tol) {
  check_phase_count(k);
  if (n_max < 2) throw DomainError("crossover needs N_max >= 2");
  CrossoverResult result;
  for (int n = 1; n <= n_max; ++n) {
    const double product = mutual_information(equatorial_product(k, n), tol).value;
    const double uniform = mutual_information(holland_burnett(k, n), tol).value;
    result.sweep.push_back({n, product, uniform});
  }
  for (const CrossoverPoint& p : result.sweep) {
    if (p.hb_mi > p.product_mi + tol) {
      result.n_star = p.n;
      break;
    }
  }
  if (result.n_star) {
    result.stable = true;
    for (const CrossoverPoint& p : result.sweep) {
      if (p.n >= *result.n_star && !(p.hb_mi > p.product_mi + tol)) result.stable = false;
    }
  }
  return result;
}

}  // namespace multiphase
