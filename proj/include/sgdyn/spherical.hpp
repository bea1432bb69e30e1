#pragma once

#include <array>
#include <vector>

namespace sgdyn {

/// One Cartesian monomial x^ix y^iy z^iz of a real solid harmonic.
struct SolidHarmonicTerm {
  int ix = 0, iy = 0, iz = 0;
  double coeff = 0.0;
};

inline constexpr int kSolidHarmonicLMax = 10;

/// Monomial expansion of the real solid harmonic r^l Y_{l,m}(Omega).
/// Real convention without the Condon-Shortley phase:
///   Y_{l,0}   = K_{l,0} P_l(cos t),
///   Y_{l,m>0} = sqrt(2) K_{l,m} cos(m p) P_l^m(cos t),
///   Y_{l,-m}  = sqrt(2) K_{l,m} sin(m p) P_l^m(cos t),
/// with K_{l,m} = sqrt((2l+1)/(4 pi) (l-m)!/(l+m)!) and
/// P_l^m = (1-w^2)^{m/2} d^m/dw^m P_l(w). Unit L^2(S^2) normalization.
const std::vector<SolidHarmonicTerm>& solid_harmonic(int l, int m);

/// Value of r^l Y_{l,m} at an arbitrary (not necessarily unit) point.
double eval_solid_harmonic(int l, int m, const std::array<double, 3>& v);

/// Y_{l,m} on the unit sphere; direction must be normalized to 1e-12.
double eval_real_sph(int l, int m, const std::array<double, 3>& direction);

}  // namespace sgdyn
