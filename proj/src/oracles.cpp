#include "sgdyn/oracles.hpp"

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "sgdyn/spherical.hpp"

namespace sgdyn {

namespace {

using Vec3 = std::array<double, 3>;

double simpson_rec(const std::function<double(double)>& f, double a, double m, double b,
                   double fa, double fm, double fb, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson_rec(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, m, b, fa, fm, fb, whole, tol, 48);
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n, double a, double b) {
  // Newton iteration on P_n; standard symmetric construction.
  std::vector<double> x(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p0 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    const double xm = 0.5 * (b + a), xl = 0.5 * (b - a);
    x[static_cast<std::size_t>(i)] = xm - xl * z;
    x[static_cast<std::size_t>(n - 1 - i)] = xm + xl * z;
    w[static_cast<std::size_t>(i)] = 2.0 * xl / ((1.0 - z * z) * pp * pp);
    w[static_cast<std::size_t>(n - 1 - i)] = w[static_cast<std::size_t>(i)];
  }
  return {x, w};
}

std::pair<std::vector<double>, std::vector<double>> gauss_hermite(int n) {
  // Golub-Welsch on the Hermite Jacobi matrix.
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double b = std::sqrt(0.5 * k);
    j(k - 1, k) = b;
    j(k, k - 1) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
  std::vector<double> x(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
  const double mu0 = std::sqrt(std::numbers::pi);
  for (int k = 0; k < n; ++k) {
    x[static_cast<std::size_t>(k)] = es.eigenvalues()(k);
    const double v = es.eigenvectors()(0, k);
    w[static_cast<std::size_t>(k)] = mu0 * v * v;
  }
  return {x, w};
}

double boys_quadrature(int order, double x, double tol) {
  if (x < 0.0) throw std::invalid_argument("boys_quadrature: negative argument");
  return adaptive_simpson(
      [order, x](double t) { return std::pow(t, 2 * order) * std::exp(-x * t * t); }, 0.0, 1.0,
      tol);
}

namespace {

// One primitive component of a contracted solid-harmonic function: pointwise
// value, Gaussian envelope exponent and center.
struct PrimComponent {
  Vec3 center;
  double exponent;
  int l;
  int m;
  double coeff;  // norm * contraction coefficient

  double eval(const Vec3& r) const {
    const Vec3 v{r[0] - center[0], r[1] - center[1], r[2] - center[2]};
    const double r2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    return coeff * std::exp(-exponent * r2) * eval_solid_harmonic(l, m, v);
  }
};

std::vector<PrimComponent> components(const BasisFunction& f) {
  std::vector<PrimComponent> out;
  for (const auto& p : f.shell.primitives)
    out.push_back({f.shell.center, p.exponent, f.shell.l, f.m, f.norm_factor * p.coeff});
  return out;
}

struct BoxRule {
  std::vector<double> x, w;
};

// Cartesian Gauss-Legendre box covering both envelopes.
BoxRule box_rule_1d(double c1, double c2, double zmin, int n) {
  const double half = 0.5 * std::abs(c1 - c2) + 7.0 / std::sqrt(zmin);
  const double mid = 0.5 * (c1 + c2);
  auto [x, w] = gauss_legendre(n, mid - half, mid + half);
  return {std::move(x), std::move(w)};
}

template <typename F>
double box_integrate(const BasisFunction& a, const BasisFunction& b, int n, F&& f) {
  double zmin = 1e30;
  for (const auto& p : a.shell.primitives) zmin = std::min(zmin, p.exponent);
  for (const auto& p : b.shell.primitives) zmin = std::min(zmin, p.exponent);
  std::array<BoxRule, 3> rules;
  for (int d = 0; d < 3; ++d)
    rules[static_cast<std::size_t>(d)] =
        box_rule_1d(a.shell.center[static_cast<std::size_t>(d)],
                    b.shell.center[static_cast<std::size_t>(d)], zmin, n);
  double total = 0.0;
  for (std::size_t i = 0; i < rules[0].x.size(); ++i)
    for (std::size_t j = 0; j < rules[1].x.size(); ++j)
      for (std::size_t k = 0; k < rules[2].x.size(); ++k)
        total += rules[0].w[i] * rules[1].w[j] * rules[2].w[k] *
                 f(Vec3{rules[0].x[i], rules[1].x[j], rules[2].x[k]});
  return total;
}

Vec3 fd_gradient(const BasisFunction& f, const Vec3& r, double h) {
  Vec3 g;
  for (int d = 0; d < 3; ++d) {
    Vec3 rp = r, rm = r;
    rp[static_cast<std::size_t>(d)] += h;
    rm[static_cast<std::size_t>(d)] -= h;
    g[static_cast<std::size_t>(d)] =
        (eval_basis_function(f, rp) - eval_basis_function(f, rm)) / (2.0 * h);
  }
  return g;
}

}  // namespace

double overlap_quadrature(const BasisFunction& a, const BasisFunction& b) {
  return box_integrate(a, b, 96, [&](const Vec3& r) {
    return eval_basis_function(a, r) * eval_basis_function(b, r);
  });
}

double kinetic_quadrature(const BasisFunction& a, const BasisFunction& b) {
  const double h = 1e-4;
  return box_integrate(a, b, 80, [&](const Vec3& r) {
    const Vec3 ga = fd_gradient(a, r, h), gb = fd_gradient(b, r, h);
    return 0.5 * (ga[0] * gb[0] + ga[1] * gb[1] + ga[2] * gb[2]);
  });
}

double nuclear_quadrature(const BasisFunction& a, const BasisFunction& b,
                          const std::vector<Nucleus>& nuclei) {
  double zmin = 1e30;
  for (const auto& p : a.shell.primitives) zmin = std::min(zmin, p.exponent);
  for (const auto& p : b.shell.primitives) zmin = std::min(zmin, p.exponent);
  double total = 0.0;
  for (const auto& nuc : nuclei) {
    // Spherical coordinates centered at the nucleus cancel the 1/s singularity.
    double reach = 7.0 / std::sqrt(zmin);
    for (int d = 0; d < 3; ++d)
      reach += std::max(std::abs(a.shell.center[static_cast<std::size_t>(d)] -
                                 nuc.position[static_cast<std::size_t>(d)]),
                        std::abs(b.shell.center[static_cast<std::size_t>(d)] -
                                 nuc.position[static_cast<std::size_t>(d)]));
    auto [sx, sw] = gauss_legendre(96, 0.0, reach);
    auto [cx, cw] = gauss_legendre(24, -1.0, 1.0);
    const int nphi = 24;
    double acc = 0.0;
    for (std::size_t is = 0; is < sx.size(); ++is)
      for (std::size_t ic = 0; ic < cx.size(); ++ic)
        for (int ip = 0; ip < nphi; ++ip) {
          const double phi = 2.0 * std::numbers::pi * ip / nphi;
          const double st = std::sqrt(std::max(0.0, 1.0 - cx[ic] * cx[ic]));
          const Vec3 r{nuc.position[0] + sx[is] * st * std::cos(phi),
                       nuc.position[1] + sx[is] * st * std::sin(phi),
                       nuc.position[2] + sx[is] * cx[ic]};
          acc += sw[is] * cw[ic] * (2.0 * std::numbers::pi / nphi) * sx[is] *
                 eval_basis_function(a, r) * eval_basis_function(b, r);
        }
    total -= nuc.charge * acc;
  }
  return total;
}

namespace {

// Correlation h(v) = int rho1(r) rho2(r + v) dr for one primitive-pair product
// on each side; exact Gauss-Hermite since the integrand is a polynomial times
// a single Gaussian whose center and width follow from the exponents alone.
struct PrimPairDensity {
  PrimComponent f, g;
  double p;  // combined exponent
  Vec3 weighted_center;

  PrimPairDensity(const PrimComponent& a, const PrimComponent& b) : f(a), g(b) {
    p = a.exponent + b.exponent;
    for (int d = 0; d < 3; ++d)
      weighted_center[static_cast<std::size_t>(d)] =
          (a.exponent * a.center[static_cast<std::size_t>(d)] +
           b.exponent * b.center[static_cast<std::size_t>(d)]) /
          p;
  }
  double eval(const Vec3& r) const { return f.eval(r) * g.eval(r); }
  int degree() const { return f.l + g.l; }
};

double correlation(const PrimPairDensity& r1, const PrimPairDensity& r2, const Vec3& v,
                   const std::vector<double>& hx, const std::vector<double>& hw) {
  const double ptot = r1.p + r2.p;
  Vec3 m;
  for (int d = 0; d < 3; ++d)
    m[static_cast<std::size_t>(d)] =
        (r1.p * r1.weighted_center[static_cast<std::size_t>(d)] +
         r2.p * (r2.weighted_center[static_cast<std::size_t>(d)] - v[static_cast<std::size_t>(d)])) /
        ptot;
  const double scale = 1.0 / std::sqrt(ptot);
  double acc = 0.0;
  for (std::size_t i = 0; i < hx.size(); ++i)
    for (std::size_t j = 0; j < hx.size(); ++j)
      for (std::size_t k = 0; k < hx.size(); ++k) {
        const Vec3 r{m[0] + scale * hx[i], m[1] + scale * hx[j], m[2] + scale * hx[k]};
        const Vec3 rv{r[0] + v[0], r[1] + v[1], r[2] + v[2]};
        const double x2 = hx[i] * hx[i] + hx[j] * hx[j] + hx[k] * hx[k];
        acc += hw[i] * hw[j] * hw[k] * r1.eval(r) * r2.eval(rv) * std::exp(x2);
      }
  return acc * scale * scale * scale;
}

double eri_prim_quadrature(const PrimPairDensity& d1, const PrimPairDensity& d2) {
  const int gh_nodes = (d1.degree() + d2.degree()) / 2 + 3;
  auto [hx, hw] = gauss_hermite(gh_nodes);
  const double alpha = d1.p * d2.p / (d1.p + d2.p);
  Vec3 sep;
  double sep2 = 0.0;
  for (int d = 0; d < 3; ++d) {
    sep[static_cast<std::size_t>(d)] = d2.weighted_center[static_cast<std::size_t>(d)] -
                                       d1.weighted_center[static_cast<std::size_t>(d)];
    sep2 += sep[static_cast<std::size_t>(d)] * sep[static_cast<std::size_t>(d)];
  }
  const double smax = std::sqrt(sep2) + 9.0 / std::sqrt(alpha);
  auto [sx, sw] = gauss_legendre(64, 0.0, smax);
  auto [cx, cw] = gauss_legendre(20, -1.0, 1.0);
  const int nphi = 20;
  double total = 0.0;
  for (std::size_t is = 0; is < sx.size(); ++is) {
    const double s = sx[is];
    double shell_sum = 0.0;
    for (std::size_t ic = 0; ic < cx.size(); ++ic) {
      const double st = std::sqrt(std::max(0.0, 1.0 - cx[ic] * cx[ic]));
      for (int ip = 0; ip < nphi; ++ip) {
        const double phi = 2.0 * std::numbers::pi * ip / nphi;
        const Vec3 v{s * st * std::cos(phi), s * st * std::sin(phi), s * cx[ic]};
        shell_sum += cw[ic] * (2.0 * std::numbers::pi / nphi) * correlation(d1, d2, v, hx, hw);
      }
    }
    total += sw[is] * s * shell_sum;
  }
  return total;
}

}  // namespace

double eri_quadrature(const BasisFunction& a, const BasisFunction& b, const BasisFunction& c,
                      const BasisFunction& d) {
  double total = 0.0;
  for (const auto& pa : components(a))
    for (const auto& pb : components(b))
      for (const auto& pc : components(c))
        for (const auto& pd : components(d))
          total += eri_prim_quadrature(PrimPairDensity(pa, pb), PrimPairDensity(pc, pd));
  return total;
}

double eri_monte_carlo(const BasisFunction& a, const BasisFunction& b, const BasisFunction& c,
                       const BasisFunction& d, std::uint64_t seed, std::int64_t n_samples) {
  for (const auto* f : {&a, &b, &c, &d})
    if (f->shell.l != 0 || f->shell.primitives.size() != 1)
      throw std::invalid_argument("eri_monte_carlo: s-type single-primitive functions only");
  const PrimPairDensity d1(components(a)[0], components(b)[0]);
  const PrimPairDensity d2(components(c)[0], components(d)[0]);
  // Importance sampling of (r1, r2) from the two product Gaussians. For pure
  // s densities the weight rho/pdf is a constant, leaving only the Coulomb
  // kernel to average; deterministic Box-Muller on the fixed mt19937_64.
  auto pdf = [](const Vec3& r, const Vec3& mean, double exponent) {
    double q = 0.0;
    for (int k = 0; k < 3; ++k) {
      const double dx = r[static_cast<std::size_t>(k)] - mean[static_cast<std::size_t>(k)];
      q += dx * dx;
    }
    return std::pow(exponent / std::numbers::pi, 1.5) * std::exp(-exponent * q);
  };
  const double w0 = d1.eval(d1.weighted_center) / pdf(d1.weighted_center, d1.weighted_center, d1.p) *
                    d2.eval(d2.weighted_center) / pdf(d2.weighted_center, d2.weighted_center, d2.p);
  const double sigma1 = 1.0 / std::sqrt(2.0 * d1.p), sigma2 = 1.0 / std::sqrt(2.0 * d2.p);

  const int n_streams = 2;
  std::array<double, n_streams> partial{};
#pragma omp parallel for num_threads(n_streams)
  for (int s = 0; s < n_streams; ++s) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(s));
    auto normal_pair = [&rng](double& z1, double& z2) {
      const double u1 = (static_cast<double>(rng()) + 0.5) / 18446744073709551616.0;
      const double u2 = (static_cast<double>(rng()) + 0.5) / 18446744073709551616.0;
      const double rad = std::sqrt(-2.0 * std::log(u1));
      z1 = rad * std::cos(2.0 * std::numbers::pi * u2);
      z2 = rad * std::sin(2.0 * std::numbers::pi * u2);
    };
    const std::int64_t chunk = n_samples / n_streams + (s < n_samples % n_streams ? 1 : 0);
    double acc = 0.0;
    for (std::int64_t i = 0; i < chunk; ++i) {
      double z[6];
      normal_pair(z[0], z[1]);
      normal_pair(z[2], z[3]);
      normal_pair(z[4], z[5]);
      double dist2 = 0.0;
      for (int k = 0; k < 3; ++k) {
        const double x1 = d1.weighted_center[static_cast<std::size_t>(k)] + sigma1 * z[k];
        const double x2 = d2.weighted_center[static_cast<std::size_t>(k)] + sigma2 * z[k + 3];
        dist2 += (x1 - x2) * (x1 - x2);
      }
      if (dist2 > 0.0) acc += 1.0 / std::sqrt(dist2);
    }
    partial[static_cast<std::size_t>(s)] = acc;
  }
  double total = 0.0;
  for (double v : partial) total += v;  // fixed combination order
  return w0 * total / static_cast<double>(n_samples);
}

}  // namespace sgdyn
