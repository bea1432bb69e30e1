#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "sgdyn/basis.hpp"

namespace sgdyn {

/// Independent verification paths for the analytic integral code. Everything
/// here works from pointwise evaluation plus classical quadrature only and
/// never touches the Hermite/Boys machinery it cross-checks.

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol);

/// Nodes and weights on [a, b].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n, double a, double b);

/// Nodes and weights for the weight exp(-x^2) on the real line.
std::pair<std::vector<double>, std::vector<double>> gauss_hermite(int n);

/// Boys integral by adaptive quadrature of its definition.
double boys_quadrature(int order, double x, double tol = 1e-14);

double overlap_quadrature(const BasisFunction& a, const BasisFunction& b);

/// <grad a, grad b>/2 with finite-difference gradients.
double kinetic_quadrature(const BasisFunction& a, const BasisFunction& b);

double nuclear_quadrature(const BasisFunction& a, const BasisFunction& b,
                          const std::vector<Nucleus>& nuclei);

/// (ab|cd) by exact Gauss-Hermite inner correlation and smooth outer
/// quadrature in the separation variable; singularity removed analytically.
double eri_quadrature(const BasisFunction& a, const BasisFunction& b, const BasisFunction& c,
                      const BasisFunction& d);

/// Importance-sampled Monte-Carlo estimate of an s-type primitive ERI.
double eri_monte_carlo(const BasisFunction& a, const BasisFunction& b, const BasisFunction& c,
                       const BasisFunction& d, std::uint64_t seed, std::int64_t n_samples);

}  // namespace sgdyn
