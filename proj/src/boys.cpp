#include "sgdyn/boys.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sgdyn {

namespace {

constexpr double kSwitchX = 35.0;

// F_n(x) = e^{-x}/(2n+1) * sum_{i>=0} (2x)^i (2n+1)!! / (2n+2i+1)!!;
// all terms positive, converges for moderate x.
double boys_series(int n, double x) {
  double term = 1.0 / (2 * n + 1);
  double sum = term;
  for (int i = 1; i < 400; ++i) {
    term *= 2.0 * x / (2 * n + 2 * i + 1);
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return std::exp(-x) * sum;
}

}  // namespace

std::vector<double> boys_sequence(int n_max, double x) {
  if (n_max < 0) throw std::invalid_argument("boys: order must be non-negative");
  if (x < 0.0) throw std::invalid_argument("boys: argument must be non-negative");
  std::vector<double> f(static_cast<std::size_t>(n_max) + 1);
  if (x == 0.0) {
    for (int n = 0; n <= n_max; ++n) f[static_cast<std::size_t>(n)] = 1.0 / (2 * n + 1);
    return f;
  }
  const double ex = std::exp(-x);
  if (x < kSwitchX) {
    f[static_cast<std::size_t>(n_max)] = boys_series(n_max, x);
    for (int n = n_max; n > 0; --n)
      f[static_cast<std::size_t>(n - 1)] = (2.0 * x * f[static_cast<std::size_t>(n)] + ex) /
                                           (2 * n - 1);
  } else {
    f[0] = 0.5 * std::sqrt(std::numbers::pi / x) * std::erf(std::sqrt(x));
    // Upward is stable here: (2n+1) F_n dominates e^{-x} for n << x.
    for (int n = 0; n < n_max; ++n)
      f[static_cast<std::size_t>(n) + 1] =
          ((2 * n + 1) * f[static_cast<std::size_t>(n)] - ex) / (2.0 * x);
  }
  return f;
}

double boys(int order, double x) { return boys_sequence(order, x)[static_cast<std::size_t>(order)]; }

}  // namespace sgdyn
