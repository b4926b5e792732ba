#include "multiphase/quadrature.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <vector>

namespace multiphase {

void CompensatedSum::add(double x) noexcept {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    compensation_ += (sum_ - t) + x;
  } else {
    compensation_ += (x - t) + sum_;
  }
  sum_ = t;
}

namespace {

std::string short_number(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3g", x);
  return buffer;
}

// Kronrod nodes on [0, 1]; odd indices are shared with the Gauss rule.
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Estimate {
  double value;
  double error;
};

Estimate gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[static_cast<std::size_t>(i)];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[static_cast<std::size_t>(i)] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[static_cast<std::size_t>(i / 2)] * pair;
  }
  return {kronrod * half, std::abs((kronrod - gauss) * half)};
}

constexpr std::size_t kKronrodPoints = 15;
constexpr int kMaxDepth1d = 50;

struct Interval {
  double a;
  double b;
  Estimate estimate;
  int depth;
};

}  // namespace

QuadratureResult integrate_1d(const std::function<double(double)>& f, double a, double b,
                              std::size_t initial_cells, double tol, std::size_t budget) {
  if (initial_cells == 0) initial_cells = 1;
  QuadratureResult result;
  if (initial_cells * kKronrodPoints > budget) {
    throw BudgetExceeded("initial mesh of " + std::to_string(initial_cells) +
                             " cells exceeds the evaluation budget",
                         {0.0, INFINITY, 0});
  }
  const double length = b - a;
  CompensatedSum value;
  double error = 0.0;
  bool exhausted = false;
  std::vector<Interval> stack;
  // The base mesh is always evaluated; its cost is reserved up front.
  result.evaluations = initial_cells * kKronrodPoints;

  for (std::size_t cell = 0; cell < initial_cells; ++cell) {
    const double lo = a + length * static_cast<double>(cell) / static_cast<double>(initial_cells);
    const double hi =
        a + length * static_cast<double>(cell + 1) / static_cast<double>(initial_cells);
    stack.push_back({lo, hi, gauss_kronrod(f, lo, hi), 0});

    while (!stack.empty()) {
      Interval iv = stack.back();
      stack.pop_back();
      const double allowance = tol * (iv.b - iv.a) / length;
      const bool refine = iv.estimate.error > allowance && iv.depth < kMaxDepth1d;
      if (refine && result.evaluations + 2 * kKronrodPoints > budget) exhausted = true;
      if (!refine || exhausted) {
        value.add(iv.estimate.value);
        error += iv.estimate.error;
        continue;
      }
      const double mid = 0.5 * (iv.a + iv.b);
      // Right half goes first so the left half is summed first.
      stack.push_back({mid, iv.b, gauss_kronrod(f, mid, iv.b), iv.depth + 1});
      stack.push_back({iv.a, mid, gauss_kronrod(f, iv.a, mid), iv.depth + 1});
      result.evaluations += 2 * kKronrodPoints;
    }
  }
  result.value = value.value();
  result.abs_error_estimate = error;
  if (exhausted || error > tol) {
    throw BudgetExceeded("quadrature did not reach tolerance " + short_number(tol) +
                             " (estimate " + short_number(error) + ") within " +
                             std::to_string(budget) + " evaluations",
                         result);
  }
  return result;
}

namespace {

// Genz-Malik rule for two dimensions on the reference square [-1, 1]^2.
const double kLambda2 = std::sqrt(9.0 / 70.0);
const double kLambda4 = std::sqrt(9.0 / 10.0);
const double kLambda5 = std::sqrt(9.0 / 19.0);
constexpr double kW1 = (12824.0 - 9120.0 * 2 + 400.0 * 4) / 19683.0;
constexpr double kW2 = 980.0 / 6561.0;
constexpr double kW3 = (1820.0 - 400.0 * 2) / 19683.0;
constexpr double kW4 = 200.0 / 19683.0;
constexpr double kW5 = 6859.0 / 19683.0 / 4.0;
constexpr double kE1 = (729.0 - 950.0 * 2 + 50.0 * 4) / 729.0;
constexpr double kE2 = 245.0 / 486.0;
constexpr double kE3 = (265.0 - 100.0 * 2) / 1458.0;
constexpr double kE4 = 25.0 / 729.0;
constexpr std::size_t kGenzMalikPoints = 17;
constexpr int kMaxDepth2d = 60;

struct Rect {
  double x0, x1, y0, y1;
  Estimate estimate;
  int split_axis;
  int depth;
};

Rect genz_malik(const std::function<double(double, double)>& f, double x0, double x1, double y0,
                double y1, int depth) {
  const double cx = 0.5 * (x0 + x1);
  const double cy = 0.5 * (y0 + y1);
  const double hx = 0.5 * (x1 - x0);
  const double hy = 0.5 * (y1 - y0);
  const double f0 = f(cx, cy);

  const double fx2p = f(cx + kLambda2 * hx, cy), fx2m = f(cx - kLambda2 * hx, cy);
  const double fy2p = f(cx, cy + kLambda2 * hy), fy2m = f(cx, cy - kLambda2 * hy);
  const double fx4p = f(cx + kLambda4 * hx, cy), fx4m = f(cx - kLambda4 * hx, cy);
  const double fy4p = f(cx, cy + kLambda4 * hy), fy4m = f(cx, cy - kLambda4 * hy);
  const double s2 = fx2p + fx2m + fy2p + fy2m;
  const double s3 = fx4p + fx4m + fy4p + fy4m;
  const double s4 = f(cx + kLambda4 * hx, cy + kLambda4 * hy) +
                    f(cx + kLambda4 * hx, cy - kLambda4 * hy) +
                    f(cx - kLambda4 * hx, cy + kLambda4 * hy) +
                    f(cx - kLambda4 * hx, cy - kLambda4 * hy);
  const double s5 = f(cx + kLambda5 * hx, cy + kLambda5 * hy) +
                    f(cx + kLambda5 * hx, cy - kLambda5 * hy) +
                    f(cx - kLambda5 * hx, cy + kLambda5 * hy) +
                    f(cx - kLambda5 * hx, cy - kLambda5 * hy);

  const double area = 4.0 * hx * hy;
  const double degree7 = area * (kW1 * f0 + kW2 * s2 + kW3 * s3 + kW4 * s4 + kW5 * s5);
  const double degree5 = area * (kE1 * f0 + kE2 * s2 + kE3 * s3 + kE4 * s4);

  const double ratio = kLambda2 * kLambda2 / (kLambda4 * kLambda4);
  const double dx = std::abs(fx2p + fx2m - 2.0 * f0 - ratio * (fx4p + fx4m - 2.0 * f0));
  const double dy = std::abs(fy2p + fy2m - 2.0 * f0 - ratio * (fy4p + fy4m - 2.0 * f0));
  int axis = dx >= dy ? 0 : 1;
  // Keep cells from degenerating when the fourth differences are flat.
  if (hx > 4.0 * hy) axis = 0;
  if (hy > 4.0 * hx) axis = 1;
  return {x0, x1, y0, y1, {degree7, std::abs(degree7 - degree5)}, axis, depth};
}

}  // namespace

QuadratureResult integrate_2d(const std::function<double(double, double)>& f, double ax, double bx,
                              double ay, double by, std::size_t cells_per_axis, double tol,
                              std::size_t budget) {
  if (cells_per_axis == 0) cells_per_axis = 1;
  const std::size_t base = cells_per_axis * cells_per_axis;
  QuadratureResult result;
  if (base * kGenzMalikPoints > budget) {
    throw BudgetExceeded("initial mesh of " + std::to_string(base) +
                             " cells exceeds the evaluation budget",
                         {0.0, INFINITY, 0});
  }
  const double total_area = (bx - ax) * (by - ay);
  const auto n = static_cast<double>(cells_per_axis);
  CompensatedSum value;
  double error = 0.0;
  bool exhausted = false;
  std::vector<Rect> stack;
  result.evaluations = base * kGenzMalikPoints;

  for (std::size_t i = 0; i < cells_per_axis; ++i) {
    const double x0 = ax + (bx - ax) * static_cast<double>(i) / n;
    const double x1 = ax + (bx - ax) * static_cast<double>(i + 1) / n;
    for (std::size_t j = 0; j < cells_per_axis; ++j) {
      const double y0 = ay + (by - ay) * static_cast<double>(j) / n;
      const double y1 = ay + (by - ay) * static_cast<double>(j + 1) / n;
      stack.push_back(genz_malik(f, x0, x1, y0, y1, 0));

      while (!stack.empty()) {
        const Rect r = stack.back();
        stack.pop_back();
        const double allowance = tol * (r.x1 - r.x0) * (r.y1 - r.y0) / total_area;
        const bool refine = r.estimate.error > allowance && r.depth < kMaxDepth2d;
        if (refine && result.evaluations + 2 * kGenzMalikPoints > budget) exhausted = true;
        if (!refine || exhausted) {
          value.add(r.estimate.value);
          error += r.estimate.error;
          continue;
        }
        if (r.split_axis == 0) {
          const double mid = 0.5 * (r.x0 + r.x1);
          stack.push_back(genz_malik(f, mid, r.x1, r.y0, r.y1, r.depth + 1));
          stack.push_back(genz_malik(f, r.x0, mid, r.y0, r.y1, r.depth + 1));
        } else {
          const double mid = 0.5 * (r.y0 + r.y1);
          stack.push_back(genz_malik(f, r.x0, r.x1, mid, r.y1, r.depth + 1));
          stack.push_back(genz_malik(f, r.x0, r.x1, r.y0, mid, r.depth + 1));
        }
        result.evaluations += 2 * kGenzMalikPoints;
      }
    }
  }
  result.value = value.value();
  result.abs_error_estimate = error;
  if (exhausted || error > tol) {
    throw BudgetExceeded("cubature did not reach tolerance " + short_number(tol) +
                             " (estimate " + short_number(error) + ") within " +
                             std::to_string(budget) + " evaluations",
                         result);
  }
  return result;
}

}  // namespace multiphase
