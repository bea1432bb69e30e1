#include "sgdyn/propagator.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace sgdyn {

namespace {

using Cplx = std::complex<double>;

}  // namespace

CIVector solve_cayley(const std::function<CIVector(const CIVector&)>& apply_h, double coef,
                      const CIVector& b, double tol, int max_iterations) {
  const Cplx ic(0.0, coef);
  auto apply_a = [&](const CIVector& v) { return (v + ic * apply_h(v)).eval(); };
  auto apply_ah = [&](const CIVector& v) { return (v - ic * apply_h(v)).eval(); };

  const double bnorm = b.norm();
  if (bnorm == 0.0) return b;
  CIVector x = b;  // A is a small perturbation of the identity
  CIVector r = b - apply_a(x);
  CIVector g = apply_ah(r);
  CIVector p = g;
  double g2 = g.squaredNorm();
  for (int it = 0; it < max_iterations; ++it) {
    if (r.norm() <= tol * bnorm) return x;
    const CIVector ap = apply_a(p);
    const double ap2 = ap.squaredNorm();
    if (ap2 == 0.0) break;
    const double alpha = g2 / ap2;
    x += alpha * p;
    r -= alpha * ap;
    const CIVector ahap = apply_ah(ap);
    g -= alpha * ahap;
    const double g2_new = g.squaredNorm();
    p = g + (g2_new / g2) * p;
    g2 = g2_new;
  }
  if (r.norm() <= tol * bnorm) return x;
  throw std::runtime_error("solve_cayley: linear solve did not reach the residual target");
}

Propagator::Propagator(const CIOperator& hamiltonian, PropagationConfig config)
    : h_(hamiltonian), config_(config) {
  if (config_.dt <= 0.0) throw std::invalid_argument("Propagator: dt must be positive");
  if (config_.n_steps < 1) throw std::invalid_argument("Propagator: n_steps must be >= 1");
  if (config_.record_every < 1)
    throw std::invalid_argument("Propagator: record_every must be >= 1");
  if (config_.integrator == Integrator::ExactEigen && !h_.dense_available())
    throw std::invalid_argument("Propagator: ExactEigen requires the dense Hamiltonian");
  if (h_.dense_available()) h_.dense();  // materialize once; all applies become symv
}

CIVector Propagator::step(const CIVector& c, double dt) const {
  if (!c.allFinite()) throw std::runtime_error("Propagator::step: non-finite state");
  if (config_.integrator == Integrator::ExactEigen) {
    if (!eigen_) eigen_.emplace(h_.dense());
    const auto& es = *eigen_;
    Eigen::VectorXcd w = es.eigenvectors().transpose() * c;
    for (Eigen::Index k = 0; k < w.size(); ++k)
      w(k) *= std::exp(Cplx(0.0, -dt * es.eigenvalues()(k)));
    return es.eigenvectors() * w;
  }
  // Crank-Nicolson: (I + i dt/2 H) c' = (I - i dt/2 H) c
  auto apply_h = [this](const CIVector& v) { return h_.apply(v); };
  const Cplx ihalf(0.0, 0.5 * dt);
  const CIVector rhs = c - ihalf * h_.apply(c);
  return solve_cayley(apply_h, 0.5 * dt, rhs, config_.solve_residual,
                      config_.max_solver_iterations);
}

PropagationResult Propagator::propagate(const CIVector& c0) const {
  const double n0 = c0.norm();
  if (!(n0 > 0.0) || n0 > 1.0 + 1e-10)
    throw std::invalid_argument(
        "Propagator::propagate: initial norm must lie in (0, 1] (projected states keep "
        "their reduced norm)");
  PropagationResult out;
  auto record = [&](double t, const CIVector& c) {
    out.record.time.push_back(t);
    out.record.norm.push_back(c.norm());
    out.record.energy.push_back(energy(c, h_));
    if (config_.keep_states) out.states.push_back(c);
  };
  CIVector c = c0;
  record(0.0, c);
  for (int s = 1; s <= config_.n_steps; ++s) {
    c = step(c, config_.dt);
    if (!c.allFinite()) throw std::runtime_error("Propagator::propagate: state became non-finite");
    if (s % config_.record_every == 0 || s == config_.n_steps) record(s * config_.dt, c);
  }
  return out;
}

CIVector step(const CIOperator& hamiltonian, const CIVector& c, double dt,
              const PropagationConfig& config) {
  return Propagator(hamiltonian, config).step(c, dt);
}

TrajectoryComparison compare_trajectories(const std::vector<CIVector>& truncated_states,
                                          const std::vector<CIVector>& reference_states,
                                          const TruncationProjector& projector,
                                          const CIOperator& h1_gram, const CIOperator& h_full) {
  if (truncated_states.size() != reference_states.size())
    throw std::invalid_argument("compare_trajectories: trajectories use different time grids");
  TrajectoryComparison out;
  for (std::size_t k = 0; k < truncated_states.size(); ++k) {
    const CIVector embedded = projector.embed(truncated_states[k]);
    const CIVector diff = embedded - reference_states[k];
    const double e_h1 = h1_norm(diff, h1_gram);
    // raw quadratic forms <u, H u> on each trajectory's own state
    const double e_trunc = embedded.dot(h_full.apply(embedded)).real();
    const double e_ref =
        reference_states[k].dot(h_full.apply(reference_states[k])).real();
    const double de = std::abs(e_trunc - e_ref);
    out.h1_series.push_back(e_h1);
    out.energy_dev_series.push_back(de);
    out.max_h1_error = std::max(out.max_h1_error, e_h1);
    out.max_energy_dev = std::max(out.max_energy_dev, de);
  }
  return out;
}

}  // namespace sgdyn
