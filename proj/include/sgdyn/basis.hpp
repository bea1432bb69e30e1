#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "sgdyn/spin_partition.hpp"

namespace sgdyn {

struct Primitive {
  double coeff = 1.0;
  double exponent = 1.0;  // zeta > 0
};

/// Contracted radial function f_{n,l}(s) = sum_k c_k s^l exp(-zeta_k s^2)
/// attached to a center; one shell fans out into 2l+1 basis functions.
struct ContractedShell {
  std::array<double, 3> center{0.0, 0.0, 0.0};  // Bohr
  int l = 0;
  int radial_index = 1;  // the n label distinguishing radial functions of equal l
  std::vector<Primitive> primitives;
};

/// A single (l, m) Gaussian-type orbital, unit-normalized in L^2(R^3).
struct BasisFunction {
  ContractedShell shell;
  int m = 0;
  double norm_factor = 1.0;
};

struct Nucleus {
  int charge = 1;
  std::array<double, 3> position{0.0, 0.0, 0.0};
};

struct MolecularSystem {
  std::vector<Nucleus> nuclei;
  std::vector<BasisFunction> basis;
  SpinPartition partition;

  int total_charge() const {
    int z = 0;
    for (const auto& n : nuclei) z += n.charge;
    return z;
  }
};

/// int_0^inf r^n exp(-a r^2) dr = Gamma((n+1)/2) / (2 a^((n+1)/2)).
double gaussian_radial_moment(int n, double a);

/// Normalization factor making the self-overlap of the shell's functions 1.
double shell_norm_factor(const ContractedShell& shell);

/// Unit-normalized basis function for one m of a shell.
BasisFunction make_basis_function(const ContractedShell& shell, int m);

double eval_basis_function(const BasisFunction& f, const std::array<double, 3>& point);

/// Primitive exponent shared by all shells of the reference bases, matching
/// the width of the initial-state Gaussians.
inline constexpr double kReferenceExponent = 0.5;
/// Bracketing exponents of the radially-noded second s function.
inline constexpr double kNodeExponentLow = 0.4;
inline constexpr double kNodeExponentHigh = 0.6;

/// He: single Z=2 nucleus at the origin, one shell per (l, m) with l <= l_max
/// plus a second s-type radial shell; 65 functions for l_max = 7.
MolecularSystem build_helium_basis(int l_max = 7);

/// H2: two Z=1 nuclei at (0, 0, +-bond_length/2) on the z-axis, the 65-function
/// set on each center; 130 functions for l_max = 7.
MolecularSystem build_h2_basis(double bond_length = 1.4, int l_max = 7);

/// One line per shell: center coordinates, l, then (coeff, exponent) pairs.
void write_basis_text(std::ostream& os, const MolecularSystem& system);

}  // namespace sgdyn
