#include "sgdyn/basis.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "sgdyn/spherical.hpp"

namespace sgdyn {

double gaussian_radial_moment(int n, double a) {
  if (n < 0 || a <= 0.0)
    throw std::invalid_argument("gaussian_radial_moment: need n >= 0, a > 0");
  return std::tgamma(0.5 * (n + 1)) / (2.0 * std::pow(a, 0.5 * (n + 1)));
}

double shell_norm_factor(const ContractedShell& shell) {
  double s = 0.0;
  for (const auto& pa : shell.primitives)
    for (const auto& pb : shell.primitives) {
      if (pa.exponent <= 0.0 || pb.exponent <= 0.0)
        throw std::invalid_argument("shell_norm_factor: exponents must be positive");
      s += pa.coeff * pb.coeff *
           gaussian_radial_moment(2 * shell.l + 2, pa.exponent + pb.exponent);
    }
  if (s <= 0.0) throw std::invalid_argument("shell_norm_factor: degenerate contraction");
  return 1.0 / std::sqrt(s);
}

BasisFunction make_basis_function(const ContractedShell& shell, int m) {
  if (std::abs(m) > shell.l) throw std::invalid_argument("make_basis_function: |m| > l");
  return BasisFunction{shell, m, shell_norm_factor(shell)};
}

double eval_basis_function(const BasisFunction& f, const std::array<double, 3>& point) {
  const std::array<double, 3> v{point[0] - f.shell.center[0], point[1] - f.shell.center[1],
                                point[2] - f.shell.center[2]};
  const double r2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  double radial = 0.0;
  for (const auto& p : f.shell.primitives) radial += p.coeff * std::exp(-p.exponent * r2);
  return f.norm_factor * radial * eval_solid_harmonic(f.shell.l, f.m, v);
}

namespace {

void append_center_set(MolecularSystem& sys, const std::array<double, 3>& center, int l_max) {
  // l = 0 carries two radial functions: the bare reference Gaussian and a
  // radially-noded contraction; every other l one single-primitive shell.
  ContractedShell s1{center, 0, 1, {{1.0, kReferenceExponent}}};
  ContractedShell s2{center, 0, 2, {{1.0, kNodeExponentLow}, {-1.0, kNodeExponentHigh}}};
  sys.basis.push_back(make_basis_function(s1, 0));
  sys.basis.push_back(make_basis_function(s2, 0));
  for (int l = 1; l <= l_max; ++l) {
    ContractedShell sh{center, l, 1, {{1.0, kReferenceExponent}}};
    for (int m = -l; m <= l; ++m) sys.basis.push_back(make_basis_function(sh, m));
  }
}

}  // namespace

MolecularSystem build_helium_basis(int l_max) {
  MolecularSystem sys;
  sys.nuclei.push_back(Nucleus{2, {0.0, 0.0, 0.0}});
  sys.partition = SpinPartition::all_up(2);
  append_center_set(sys, {0.0, 0.0, 0.0}, l_max);
  return sys;
}

MolecularSystem build_h2_basis(double bond_length, int l_max) {
  if (bond_length <= 0.0) throw std::invalid_argument("build_h2_basis: bond_length must be > 0");
  MolecularSystem sys;
  const double h = 0.5 * bond_length;
  sys.nuclei.push_back(Nucleus{1, {0.0, 0.0, -h}});
  sys.nuclei.push_back(Nucleus{1, {0.0, 0.0, h}});
  sys.partition = SpinPartition::all_up(2);
  append_center_set(sys, {0.0, 0.0, -h}, l_max);
  append_center_set(sys, {0.0, 0.0, h}, l_max);
  return sys;
}

void write_basis_text(std::ostream& os, const MolecularSystem& system) {
  os.precision(17);
  for (const auto& f : system.basis) {
    if (f.shell.l > 0 && f.m != -f.shell.l) continue;  // one line per shell
    os << f.shell.center[0] << ' ' << f.shell.center[1] << ' ' << f.shell.center[2] << ' '
       << f.shell.l;
    for (const auto& p : f.shell.primitives) os << ' ' << p.coeff << ' ' << p.exponent;
    os << '\n';
  }
}

}  // namespace sgdyn
