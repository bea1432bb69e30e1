#pragma once

#include <Eigen/Core>
#include <vector>

#include "sgdyn/basis.hpp"

namespace sgdyn {

/// Angular label carried by a molecular orbital; block orthogonalization
/// never mixes different labels, so the sparse-grid filter stays sharp.
struct OrbitalLabel {
  int l = 0;
  int m = 0;
  int symmetry = 0;  // center block: 0 for atomic, gerade/ungerade = 0/1 for two centers
};

struct OrthonormalOrbitals {
  Eigen::MatrixXd coeff;  // n_ao x n_mo, C^T S C = I
  std::vector<OrbitalLabel> labels;
  double drop_threshold = 1e-8;
  int n_dropped = 0;

  int n_mo() const { return static_cast<int>(coeff.cols()); }
};

/// Block-wise Loewdin orthogonalization within fixed (l, m, center-symmetry)
/// blocks. For two mirrored centers the per-center functions are first
/// combined into gerade/ungerade pairs; the angular label of a
/// symmetry-adapted orbital is its per-center (l, m). Overlap eigenvalues
/// below the threshold are dropped and counted.
OrthonormalOrbitals orthonormalize(const MolecularSystem& system, const Eigen::MatrixXd& overlap,
                                   double drop_threshold = 1e-8);

}  // namespace sgdyn
