#pragma once

#include <Eigen/Core>
#include <array>
#include <utility>

#include "sgdyn/basis.hpp"
#include "sgdyn/determinant.hpp"
#include "sgdyn/orbitals.hpp"

namespace sgdyn {

/// Displacement of the second He starting orbital along z, in Bohr.
inline constexpr double kInitialShiftZ = 0.2;
/// Width of the starting Gaussians exp(-0.5 r^2).
inline constexpr double kInitialExponent = 0.5;

struct ProjectedOrbital {
  Eigen::VectorXd ao_coeff;
  double residual = 0.0;  // L^2 distance between the target and its projection
};

/// Least-squares projection (normal equations in the overlap metric) of a
/// normalized s-Gaussian onto the system basis; throws when the residual
/// exceeds the threshold.
ProjectedOrbital project_gaussian(const MolecularSystem& system, const Eigen::MatrixXd& overlap,
                                  const std::array<double, 3>& center, double exponent,
                                  double residual_threshold);

/// The two starting orbitals of the reference experiments: He gets the
/// origin-centered Gaussian and its z-shifted copy, H2 one Gaussian per
/// nucleus. Both are projected onto the basis.
std::pair<ProjectedOrbital, ProjectedOrbital> initial_orbitals(
    const MolecularSystem& system, const Eigen::MatrixXd& overlap,
    double residual_threshold = 1e-3);

/// Normalized CI vector of the antisymmetrized pair a ^ b in the given space.
CIVector antisymmetrized_ci(const Eigen::VectorXd& a_ao, const Eigen::VectorXd& b_ao,
                            const OrthonormalOrbitals& orbitals, const Eigen::MatrixXd& overlap,
                            const DeterminantSpace& space);

}  // namespace sgdyn
