#include "sgdyn/spherical.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace sgdyn {

namespace {

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double v = 1.0;
  for (int i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
  return std::round(v);
}

double falling(int n, int m) {
  double v = 1.0;
  for (int i = 0; i < m; ++i) v *= n - i;
  return v;
}

double factorial(int n) {
  double v = 1.0;
  for (int i = 2; i <= n; ++i) v *= i;
  return v;
}

using MonoMap = std::map<std::array<int, 3>, double>;

// Accumulates c * x^a y^b z^g * (x^2+y^2+z^2)^t into the map.
void add_r2_power(MonoMap& out, int a, int b, int g, int t, double c) {
  for (int alpha = 0; alpha <= t; ++alpha)
    for (int beta = 0; beta <= t - alpha; ++beta) {
      const int gamma = t - alpha - beta;
      const double mult =
          factorial(t) / (factorial(alpha) * factorial(beta) * factorial(gamma));
      out[{a + 2 * alpha, b + 2 * beta, g + 2 * gamma}] += c * mult;
    }
}

std::vector<SolidHarmonicTerm> build_terms(int l, int m) {
  const int am = std::abs(m);
  // r^l P_l^am(cos t) e^(i am p) = sum_t a_t (x+iy)^am z^(l-am-2t) r^(2t)
  MonoMap re, im;
  for (int t = 0; 2 * t <= l - am; ++t) {
    const double a_t = std::ldexp(1.0, -l) * (t % 2 ? -1.0 : 1.0) * binom(l, t) *
                       binom(2 * l - 2 * t, l) * falling(l - 2 * t, am);
    if (a_t == 0.0) continue;
    const int ze = l - am - 2 * t;
    for (int p = 0; p <= am; ++p) {
      const double c = binom(am, p) * a_t;
      if (p % 2 == 0)
        add_r2_power(re, am - p, p, ze, t, (p / 2 % 2 ? -1.0 : 1.0) * c);
      else
        add_r2_power(im, am - p, p, ze, t, ((p - 1) / 2 % 2 ? -1.0 : 1.0) * c);
    }
  }
  const double k_lm = std::sqrt((2 * l + 1) / (4.0 * std::numbers::pi) * factorial(l - am) /
                                factorial(l + am));
  const double scale = (m == 0) ? k_lm : std::numbers::sqrt2 * k_lm;
  const MonoMap& src = (m >= 0) ? re : im;
  std::vector<SolidHarmonicTerm> terms;
  for (const auto& [mono, c] : src)
    if (c != 0.0) terms.push_back({mono[0], mono[1], mono[2], scale * c});
  return terms;
}

}  // namespace

const std::vector<SolidHarmonicTerm>& solid_harmonic(int l, int m) {
  if (l < 0 || l > kSolidHarmonicLMax || std::abs(m) > l)
    throw std::invalid_argument("solid_harmonic: invalid (l, m)");
  static const auto table = [] {
    std::vector<std::vector<SolidHarmonicTerm>> t;
    for (int ll = 0; ll <= kSolidHarmonicLMax; ++ll)
      for (int mm = -ll; mm <= ll; ++mm) t.push_back(build_terms(ll, mm));
    return t;
  }();
  return table[static_cast<std::size_t>(l * l + l + m)];
}

double eval_solid_harmonic(int l, int m, const std::array<double, 3>& v) {
  double sum = 0.0;
  for (const auto& t : solid_harmonic(l, m)) {
    double mono = t.coeff;
    for (int i = 0; i < t.ix; ++i) mono *= v[0];
    for (int i = 0; i < t.iy; ++i) mono *= v[1];
    for (int i = 0; i < t.iz; ++i) mono *= v[2];
    sum += mono;
  }
  return sum;
}

double eval_real_sph(int l, int m, const std::array<double, 3>& direction) {
  const double n2 =
      direction[0] * direction[0] + direction[1] * direction[1] + direction[2] * direction[2];
  if (std::abs(std::sqrt(n2) - 1.0) > 1e-12)
    throw std::invalid_argument("eval_real_sph: direction must be a unit vector");
  return eval_solid_harmonic(l, m, direction);
}

}  // namespace sgdyn
