#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cstdint>
#include <vector>

#include "sgdyn/basis.hpp"

namespace sgdyn {

/// Real symmetric AO matrices in Hartree atomic units.
struct OneElectronMatrices {
  Eigen::MatrixXd overlap;
  Eigen::MatrixXd kinetic;
  Eigen::MatrixXd nuclear;
};

double overlap(const BasisFunction& a, const BasisFunction& b);
double kinetic(const BasisFunction& a, const BasisFunction& b);
double nuclear(const BasisFunction& a, const BasisFunction& b,
               const std::vector<Nucleus>& nuclei);

/// Per-electron H^1 pairing <a,b> + <grad a, grad b> = S_ab + 2 T_ab.
double h1_gram(const BasisFunction& a, const BasisFunction& b);

/// Two-electron repulsion integral (ab|cd) in chemists' notation.
double eri(const BasisFunction& a, const BasisFunction& b, const BasisFunction& c,
           const BasisFunction& d);

struct HardyPair {
  double grad_norm = 0.0;      // ||grad f||_L2
  double weighted_norm = 0.0;  // || f / |.-a| ||_L2
};

/// Both norms of the improved-Hardy pair, computed from closed-form radial
/// Gaussian moments; f must be centered at a single point.
HardyPair hardy_ratio(const BasisFunction& f);

OneElectronMatrices compute_one_electron(const MolecularSystem& system);

/// Full ERI tensor over canonical quadruples (8-fold permutation symmetry).
class ERITensor {
 public:
  ERITensor() = default;
  explicit ERITensor(int n_basis);

  int size() const { return n_; }
  double operator()(int a, int b, int c, int d) const {
    return values_[static_cast<std::size_t>(index(a, b, c, d))];
  }
  double& at(int a, int b, int c, int d) {
    return values_[static_cast<std::size_t>(index(a, b, c, d))];
  }
  double& raw_at(std::int64_t flat) { return values_[static_cast<std::size_t>(flat)]; }
  const std::vector<double>& raw() const { return values_; }

  static std::int64_t pair_index(int a, int b) {
    const auto [lo, hi] = std::minmax(a, b);
    return static_cast<std::int64_t>(hi) * (hi + 1) / 2 + lo;
  }
  std::int64_t index(int a, int b, int c, int d) const {
    const std::int64_t ab = pair_index(a, b), cd = pair_index(c, d);
    const auto [lo, hi] = std::minmax(ab, cd);
    return hi * (hi + 1) / 2 + lo;
  }

 private:
  int n_ = 0;
  std::vector<double> values_;
};

ERITensor compute_eri_tensor(const MolecularSystem& system);

/// FNV-1a checksum of a matrix / tensor formatted at fixed precision; used by
/// the CLI for regression snapshots.
std::uint64_t fnv1a_checksum(const Eigen::MatrixXd& m);
std::uint64_t fnv1a_checksum(const ERITensor& t);

}  // namespace sgdyn
