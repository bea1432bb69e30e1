#pragma once

#include <vector>

namespace sgdyn {

/// Boys function F_n(x) = int_0^1 t^(2n) exp(-x t^2) dt, x >= 0.
/// Series evaluation at the top order with downward recursion below x = 35,
/// erf-based upward recursion above; relative accuracy better than 1e-12 for
/// n <= 40, x in [0, 1e4].
double boys(int order, double x);

/// F_0(x) ... F_n_max(x) in one pass.
std::vector<double> boys_sequence(int n_max, double x);

}  // namespace sgdyn
