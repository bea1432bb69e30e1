#pragma once

#include <Eigen/Core>
#include <Eigen/Eigenvalues>
#include <functional>
#include <optional>
#include <vector>

#include "sgdyn/determinant.hpp"

namespace sgdyn {

enum class Integrator { CrankNicolson, ExactEigen };

struct PropagationConfig {
  double dt = 1e-3;  // atomic units of time
  int n_steps = 1000;
  Integrator integrator = Integrator::CrankNicolson;
  int record_every = 1;
  double solve_residual = 1e-12;
  int max_solver_iterations = 500;
  bool keep_states = false;
};

struct TrajectoryRecord {
  std::vector<double> time;
  std::vector<double> norm;
  std::vector<double> energy;          // Rayleigh quotient along the run
  std::vector<double> h1_error;        // filled by compare_trajectories
  std::vector<double> energy_dev;      // filled by compare_trajectories
};

struct PropagationResult {
  TrajectoryRecord record;
  std::vector<CIVector> states;  // recorded states when keep_states is set
};

/// Conjugate gradient on the normal equations of A = I + i*coef*H (H
/// Hermitian), matrix free; returns the solution of A x = b with relative
/// residual below tol. Shared by the CI and the grid propagators.
CIVector solve_cayley(const std::function<CIVector(const CIVector&)>& apply_h, double coef,
                      const CIVector& b, double tol, int max_iterations);

class Propagator {
 public:
  Propagator(const CIOperator& hamiltonian, PropagationConfig config);

  /// One unitary step of size dt (may differ from config.dt, e.g. reversed).
  CIVector step(const CIVector& c, double dt) const;

  PropagationResult propagate(const CIVector& c0) const;

  const PropagationConfig& config() const { return config_; }

 private:
  const CIOperator& h_;
  PropagationConfig config_;
  // spectral decomposition cache for the ExactEigen integrator
  mutable std::optional<Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>> eigen_;
};

/// Single step without a persistent propagator (spectral cache not reused).
CIVector step(const CIOperator& hamiltonian, const CIVector& c, double dt,
              const PropagationConfig& config);

struct TrajectoryComparison {
  double max_h1_error = 0.0;
  double max_energy_dev = 0.0;
  std::vector<double> h1_series;
  std::vector<double> energy_dev_series;
};

/// H^1 difference and raw <u, H u> energy deviation between a truncated
/// trajectory (embedded through the projector) and the reference, at the
/// common recorded times.
TrajectoryComparison compare_trajectories(const std::vector<CIVector>& truncated_states,
                                          const std::vector<CIVector>& reference_states,
                                          const TruncationProjector& projector,
                                          const CIOperator& h1_gram, const CIOperator& h_full);

}  // namespace sgdyn
