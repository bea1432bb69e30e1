#pragma once

#include <Eigen/Core>
#include <complex>
#include <iosfwd>
#include <memory>
#include <optional>
#include <vector>

#include "sgdyn/hyperbolic.hpp"
#include "sgdyn/integrals.hpp"
#include "sgdyn/orbitals.hpp"

namespace sgdyn {

using CIVector = Eigen::VectorXcd;

/// Two-electron same-spin configuration space: ordered orbital pairs p < q of
/// normalized antisymmetrized products.
struct DeterminantSpace {
  int n_orbitals = 0;
  std::vector<std::pair<int, int>> pairs;

  int dim() const { return static_cast<int>(pairs.size()); }
};

/// All pairs, or the pairs whose angular labels (l_p, l_q) survive the
/// hyperbolic-cross filter; the SG set is swap symmetric for the all-up
/// partition, so the filter is well defined on unordered pairs.
DeterminantSpace build_space(const OrthonormalOrbitals& orbitals,
                             const HyperbolicCrossSpec* spec = nullptr);

/// MO transforms of the AO integrals.
Eigen::MatrixXd mo_one_electron(const Eigen::MatrixXd& ao, const OrthonormalOrbitals& orbitals);
ERITensor mo_eri(const ERITensor& ao, const OrthonormalOrbitals& orbitals);

/// One- plus two-body operator on a determinant space via the Slater-Condon
/// rules. `identity_shift` adds a multiple of the identity (used by the H^1
/// Gram 1 + 2T). The dense matrix is materialized lazily and only when the
/// dimension does not exceed kDenseLimit.
class CIOperator {
 public:
  static constexpr int kDenseLimit = 4096;

  CIOperator(DeterminantSpace space, Eigen::MatrixXd one_body,
             std::shared_ptr<const ERITensor> two_body, double identity_shift = 0.0);

  const DeterminantSpace& space() const { return space_; }
  int dim() const { return space_.dim(); }

  double element(int row, int col) const;
  CIVector apply(const CIVector& c) const;

  /// Dense symmetric matrix; throws above kDenseLimit.
  const Eigen::MatrixXd& dense() const;
  bool dense_available() const { return dim() <= kDenseLimit; }

 private:
  DeterminantSpace space_;
  Eigen::MatrixXd h_;
  std::shared_ptr<const ERITensor> eri_;
  double shift_ = 0.0;
  mutable std::optional<Eigen::MatrixXd> dense_;
};

/// The electronic Hamiltonian h = T + V plus electron repulsion.
CIOperator assemble_hamiltonian(const Eigen::MatrixXd& h_mo,
                                std::shared_ptr<const ERITensor> eri_mo,
                                DeterminantSpace space);

/// The two-electron H^1 Gram <.,(1 - D1 - D2).> = identity + one-body(2 T).
CIOperator h1_gram_operator(const Eigen::MatrixXd& t_mo, DeterminantSpace space);

/// Coordinate-selection embedding/restriction between nested spaces.
class TruncationProjector {
 public:
  TruncationProjector(const DeterminantSpace& full, const DeterminantSpace& sub);

  CIVector embed(const CIVector& sub_vec) const;
  CIVector restrict(const CIVector& full_vec) const;
  int full_dim() const { return full_dim_; }
  int sub_dim() const { return static_cast<int>(map_.size()); }

 private:
  int full_dim_ = 0;
  std::vector<int> map_;  // sub index -> full index
};

double h1_norm(const CIVector& c, const CIOperator& h1_gram);
double energy(const CIVector& c, const CIOperator& hamiltonian);

/// Text round-trip of a CI vector: one "index real imag" line per pair.
void write_ci_vector(std::ostream& os, const CIVector& c);
CIVector read_ci_vector(std::istream& is);

}  // namespace sgdyn
