#include "sgdyn/initial_state.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "sgdyn/integrals.hpp"

namespace sgdyn {

ProjectedOrbital project_gaussian(const MolecularSystem& system, const Eigen::MatrixXd& overlap,
                                  const std::array<double, 3>& center, double exponent,
                                  double residual_threshold) {
  const int n = static_cast<int>(system.basis.size());
  ContractedShell target_shell{center, 0, 1, {{1.0, exponent}}};
  const BasisFunction target = make_basis_function(target_shell, 0);
  Eigen::VectorXd b(n);
  for (int i = 0; i < n; ++i)
    b(i) = sgdyn::overlap(system.basis[static_cast<std::size_t>(i)], target);
  const Eigen::VectorXd x = Eigen::LLT<Eigen::MatrixXd>(overlap).solve(b);
  const double captured = b.dot(x);  // ||target||^2 = 1
  ProjectedOrbital out;
  out.ao_coeff = x;
  out.residual = std::sqrt(std::max(0.0, 1.0 - captured));
  if (out.residual > residual_threshold)
    throw std::runtime_error("project_gaussian: insufficient basis, projection residual " +
                             std::to_string(out.residual) + " exceeds threshold " +
                             std::to_string(residual_threshold));
  return out;
}

std::pair<ProjectedOrbital, ProjectedOrbital> initial_orbitals(const MolecularSystem& system,
                                                               const Eigen::MatrixXd& overlap,
                                                               double residual_threshold) {
  std::array<double, 3> center_a{}, center_b{};
  if (system.nuclei.size() == 1) {
    center_a = system.nuclei[0].position;
    center_b = center_a;
    center_b[2] += kInitialShiftZ;
  } else if (system.nuclei.size() == 2) {
    center_a = system.nuclei[0].position;
    center_b = system.nuclei[1].position;
  } else {
    throw std::invalid_argument("initial_orbitals: expected one or two nuclei");
  }
  return {project_gaussian(system, overlap, center_a, kInitialExponent, residual_threshold),
          project_gaussian(system, overlap, center_b, kInitialExponent, residual_threshold)};
}

CIVector antisymmetrized_ci(const Eigen::VectorXd& a_ao, const Eigen::VectorXd& b_ao,
                            const OrthonormalOrbitals& orbitals, const Eigen::MatrixXd& overlap,
                            const DeterminantSpace& space) {
  // MO components of the (projected) orbitals: alpha_p = <MO_p, a>.
  const Eigen::VectorXd alpha = orbitals.coeff.transpose() * overlap * a_ao;
  const Eigen::VectorXd beta = orbitals.coeff.transpose() * overlap * b_ao;
  CIVector c(space.dim());
  for (int k = 0; k < space.dim(); ++k) {
    const auto [p, q] = space.pairs[static_cast<std::size_t>(k)];
    c(k) = alpha(p) * beta(q) - alpha(q) * beta(p);
  }
  const double norm = c.norm();
  if (norm <= 1e-14)
    throw std::runtime_error("antisymmetrized_ci: orbitals are parallel, zero antisymmetric part");
  return c / norm;
}

}  // namespace sgdyn
