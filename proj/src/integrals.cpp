#include "sgdyn/integrals.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <stdexcept>

#include "sgdyn/boys.hpp"
#include "sgdyn/spherical.hpp"

namespace sgdyn {

namespace {

constexpr int kMaxTotalOrder = 32;  // Hermite order cap of the R-tensor recursion

using Vec3 = std::array<double, 3>;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// 1-D Hermite expansion coefficients E_t^{ij} of x_A^i x_B^j exp(-a x_A^2) exp(-b x_B^2).
class ETable {
 public:
  ETable(int imax, int jmax, double a, double b, double ab) : imax_(imax), jmax_(jmax) {
    const double p = a + b;
    const double mu = a * b / p;
    const double pa = -b * ab / p;  // P - A with AB = A - B
    const double pb = a * ab / p;   // P - B
    tmax_ = imax + jmax;
    data_.assign(static_cast<std::size_t>((imax_ + 1) * (jmax_ + 1) * (tmax_ + 1)), 0.0);
    at(0, 0, 0) = std::exp(-mu * ab * ab);
    const double inv2p = 0.5 / p;
    for (int i = 0; i < imax_; ++i)
      for (int t = 0; t <= i; ++t) {
        const double e = at(i, 0, t);
        if (e == 0.0) continue;
        at(i + 1, 0, t + 1) += inv2p * e;
        at(i + 1, 0, t) += pa * e;
        if (t > 0) at(i + 1, 0, t - 1) += t * e;
      }
    for (int j = 0; j < jmax_; ++j)
      for (int i = 0; i <= imax_; ++i)
        for (int t = 0; t <= i + j; ++t) {
          const double e = at(i, j, t);
          if (e == 0.0) continue;
          at(i, j + 1, t + 1) += inv2p * e;
          at(i, j + 1, t) += pb * e;
          if (t > 0) at(i, j + 1, t - 1) += t * e;
        }
  }

  double operator()(int i, int j, int t) const {
    if (t < 0 || t > i + j) return 0.0;
    return data_[idx(i, j, t)];
  }

 private:
  double& at(int i, int j, int t) { return data_[idx(i, j, t)]; }
  std::size_t idx(int i, int j, int t) const {
    return static_cast<std::size_t>((i * (jmax_ + 1) + j) * (tmax_ + 1) + t);
  }
  int imax_, jmax_, tmax_;
  std::vector<double> data_;
};

// Hermite Coulomb integrals R_{tuv}(p, D) for t+u+v <= order.
class RTensor {
 public:
  RTensor(int order, double p, const Vec3& d) : order_(order), n1_(order + 1) {
    if (order > kMaxTotalOrder)
      throw std::invalid_argument("integrals: angular momentum beyond supported recursion depth");
    const double x = p * dot(d, d);
    const auto f = boys_sequence(order, x);
    std::vector<double> cur(cube(), 0.0), next(cube(), 0.0);
    // n = order down to 0; at level n fill t+u+v <= order - n.
    for (int n = order; n >= 0; --n) {
      std::fill(next.begin(), next.end(), 0.0);
      next[flat(0, 0, 0)] = std::pow(-2.0 * p, n) * f[static_cast<std::size_t>(n)];
      const int cap = order - n;
      for (int total = 1; total <= cap; ++total)
        for (int t = 0; t <= total; ++t)
          for (int u = 0; u + t <= total; ++u) {
            const int v = total - t - u;
            double val = 0.0;
            if (t > 0) {
              val = d[0] * cur[flat(t - 1, u, v)];
              if (t > 1) val += (t - 1) * cur[flat(t - 2, u, v)];
            } else if (u > 0) {
              val = d[1] * cur[flat(t, u - 1, v)];
              if (u > 1) val += (u - 1) * cur[flat(t, u - 2, v)];
            } else {
              val = d[2] * cur[flat(t, u, v - 1)];
              if (v > 1) val += (v - 1) * cur[flat(t, u, v - 2)];
            }
            next[flat(t, u, v)] = val;
          }
      std::swap(cur, next);
    }
    data_ = std::move(cur);
  }

  double operator()(int t, int u, int v) const { return data_[flat(t, u, v)]; }

 private:
  std::size_t cube() const { return static_cast<std::size_t>(n1_) * n1_ * n1_; }
  std::size_t flat(int t, int u, int v) const {
    return (static_cast<std::size_t>(t) * n1_ + u) * n1_ + v;
  }
  int order_, n1_;
  std::vector<double> data_;
};

// Sparse Hermite-basis representation of the product of two contracted
// solid-harmonic Gaussians; one block per primitive pair.
struct HermiteTerm {
  int t, u, v;
  double c;
};
struct HermiteBlock {
  double p = 0.0;
  Vec3 P{0, 0, 0};
  int order = 0;
  std::vector<HermiteTerm> terms;
};
struct PairHermite {
  int order = 0;  // l_a + l_b
  std::vector<HermiteBlock> blocks;
};

PairHermite build_pair_hermite(const BasisFunction& a, const BasisFunction& b) {
  const auto& ta = solid_harmonic(a.shell.l, a.m);
  const auto& tb = solid_harmonic(b.shell.l, b.m);
  const int la = a.shell.l, lb = b.shell.l;
  PairHermite ph;
  ph.order = la + lb;
  const Vec3 ab = sub(a.shell.center, b.shell.center);
  const int n1 = la + lb + 1;
  std::vector<double> dense(static_cast<std::size_t>(n1) * n1 * n1);
  for (const auto& pa : a.shell.primitives)
    for (const auto& pb : b.shell.primitives) {
      const double za = pa.exponent, zb = pb.exponent;
      const double p = za + zb;
      HermiteBlock blk;
      blk.p = p;
      blk.order = la + lb;
      for (int k = 0; k < 3; ++k)
        blk.P[k] = (za * a.shell.center[k] + zb * b.shell.center[k]) / p;
      const ETable ex(la, lb, za, zb, ab[0]);
      const ETable ey(la, lb, za, zb, ab[1]);
      const ETable ez(la, lb, za, zb, ab[2]);
      std::fill(dense.begin(), dense.end(), 0.0);
      const double cc = a.norm_factor * b.norm_factor * pa.coeff * pb.coeff;
      for (const auto& ma : ta)
        for (const auto& mb : tb) {
          const double w = cc * ma.coeff * mb.coeff;
          for (int t = 0; t <= ma.ix + mb.ix; ++t) {
            const double etx = ex(ma.ix, mb.ix, t);
            if (etx == 0.0) continue;
            for (int u = 0; u <= ma.iy + mb.iy; ++u) {
              const double ety = ey(ma.iy, mb.iy, u);
              if (ety == 0.0) continue;
              for (int v = 0; v <= ma.iz + mb.iz; ++v) {
                const double etz = ez(ma.iz, mb.iz, v);
                if (etz == 0.0) continue;
                dense[(static_cast<std::size_t>(t) * n1 + u) * n1 + v] += w * etx * ety * etz;
              }
            }
          }
        }
      for (int t = 0; t < n1; ++t)
        for (int u = 0; u < n1; ++u)
          for (int v = 0; v < n1; ++v) {
            const double c = dense[(static_cast<std::size_t>(t) * n1 + u) * n1 + v];
            if (c != 0.0) blk.terms.push_back({t, u, v, c});
          }
      ph.blocks.push_back(std::move(blk));
    }
  return ph;
}

// One-electron kernels over a single primitive pair and Cartesian component.
struct Prim1e {
  double za, zb, p;
  ETable ex, ey, ez;
  double root;  // sqrt(pi/p)
  Prim1e(const BasisFunction& a, const BasisFunction& b, double za_, double zb_, int extra)
      : za(za_), zb(zb_), p(za_ + zb_),
        ex(a.shell.l, b.shell.l + extra, za_, zb_, a.shell.center[0] - b.shell.center[0]),
        ey(a.shell.l, b.shell.l + extra, za_, zb_, a.shell.center[1] - b.shell.center[1]),
        ez(a.shell.l, b.shell.l + extra, za_, zb_, a.shell.center[2] - b.shell.center[2]),
        root(std::sqrt(std::numbers::pi / p)) {}

  double s1(int dim, int i, int j) const {
    const ETable& e = dim == 0 ? ex : (dim == 1 ? ey : ez);
    return e(i, j, 0) * root;
  }
  // <i| -1/2 d^2/dx^2 |j> for this primitive pair
  double k1(int dim, int i, int j) const {
    double v = -2.0 * zb * zb * s1(dim, i, j + 2) + zb * (2 * j + 1) * s1(dim, i, j);
    if (j >= 2) v -= 0.5 * j * (j - 1) * s1(dim, i, j - 2);
    return v;
  }
};

template <typename Kernel>
double contract_pairs(const BasisFunction& a, const BasisFunction& b, int extra, Kernel&& kernel) {
  const auto& ta = solid_harmonic(a.shell.l, a.m);
  const auto& tb = solid_harmonic(b.shell.l, b.m);
  double total = 0.0;
  for (const auto& pa : a.shell.primitives)
    for (const auto& pb : b.shell.primitives) {
      const Prim1e prim(a, b, pa.exponent, pb.exponent, extra);
      double block = 0.0;
      for (const auto& ma : ta)
        for (const auto& mb : tb)
          block += ma.coeff * mb.coeff * kernel(prim, ma, mb);
      total += pa.coeff * pb.coeff * block;
    }
  return total * a.norm_factor * b.norm_factor;
}

}  // namespace

double overlap(const BasisFunction& a, const BasisFunction& b) {
  return contract_pairs(a, b, 0,
                        [](const Prim1e& p, const SolidHarmonicTerm& ma,
                           const SolidHarmonicTerm& mb) {
                          return p.s1(0, ma.ix, mb.ix) * p.s1(1, ma.iy, mb.iy) *
                                 p.s1(2, ma.iz, mb.iz);
                        });
}

double kinetic(const BasisFunction& a, const BasisFunction& b) {
  return contract_pairs(
      a, b, 2,
      [](const Prim1e& p, const SolidHarmonicTerm& ma, const SolidHarmonicTerm& mb) {
        const double sx = p.s1(0, ma.ix, mb.ix), sy = p.s1(1, ma.iy, mb.iy),
                     sz = p.s1(2, ma.iz, mb.iz);
        return p.k1(0, ma.ix, mb.ix) * sy * sz + sx * p.k1(1, ma.iy, mb.iy) * sz +
               sx * sy * p.k1(2, ma.iz, mb.iz);
      });
}

double nuclear(const BasisFunction& a, const BasisFunction& b,
               const std::vector<Nucleus>& nuclei) {
  const PairHermite ph = build_pair_hermite(a, b);
  double total = 0.0;
  for (const auto& blk : ph.blocks) {
    const double pref = 2.0 * std::numbers::pi / blk.p;
    for (const auto& nuc : nuclei) {
      const RTensor r(blk.order, blk.p, sub(blk.P, nuc.position));
      double sum = 0.0;
      for (const auto& h : blk.terms) sum += h.c * r(h.t, h.u, h.v);
      total -= nuc.charge * pref * sum;
    }
  }
  return total;
}

double h1_gram(const BasisFunction& a, const BasisFunction& b) {
  return overlap(a, b) + 2.0 * kinetic(a, b);
}

double eri(const BasisFunction& a, const BasisFunction& b, const BasisFunction& c,
           const BasisFunction& d) {
  const PairHermite ab = build_pair_hermite(a, b);
  const PairHermite cd = build_pair_hermite(c, d);
  double total = 0.0;
  for (const auto& b1 : ab.blocks)
    for (const auto& b2 : cd.blocks) {
      const double p = b1.p, q = b2.p;
      const double alpha = p * q / (p + q);
      const double pref = 2.0 * std::pow(std::numbers::pi, 2.5) / (p * q * std::sqrt(p + q));
      const RTensor r(b1.order + b2.order, alpha, sub(b1.P, b2.P));
      double sum = 0.0;
      for (const auto& h2 : b2.terms) {
        const double sign = ((h2.t + h2.u + h2.v) % 2) ? -1.0 : 1.0;
        double inner = 0.0;
        for (const auto& h1 : b1.terms) inner += h1.c * r(h1.t + h2.t, h1.u + h2.u, h1.v + h2.v);
        sum += sign * h2.c * inner;
      }
      total += pref * sum;
    }
  return total;
}

HardyPair hardy_ratio(const BasisFunction& f) {
  const int l = f.shell.l;
  double w2 = 0.0, g2 = 0.0;
  for (const auto& pj : f.shell.primitives)
    for (const auto& pk : f.shell.primitives) {
      const double s = pj.exponent + pk.exponent;
      const double cc = pj.coeff * pk.coeff;
      w2 += cc * gaussian_radial_moment(2 * l, s);
      g2 += cc * ((l * l + l * (l + 1)) * gaussian_radial_moment(2 * l, s) -
                  2.0 * s * l * gaussian_radial_moment(2 * l + 2, s) +
                  4.0 * pj.exponent * pk.exponent * gaussian_radial_moment(2 * l + 4, s));
    }
  const double n2 = f.norm_factor * f.norm_factor;
  if (!(w2 > 0.0) || !(g2 > 0.0))
    throw std::runtime_error("hardy_ratio: non-positive norm encountered");
  return HardyPair{std::sqrt(n2 * g2), std::sqrt(n2 * w2)};
}

OneElectronMatrices compute_one_electron(const MolecularSystem& system) {
  const int n = static_cast<int>(system.basis.size());
  OneElectronMatrices m;
  m.overlap.resize(n, n);
  m.kinetic.resize(n, n);
  m.nuclear.resize(n, n);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const auto& a = system.basis[static_cast<std::size_t>(i)];
      const auto& b = system.basis[static_cast<std::size_t>(j)];
      const double s = overlap(a, b);
      const double t = kinetic(a, b);
      const double v = nuclear(a, b, system.nuclei);
      m.overlap(i, j) = m.overlap(j, i) = s;
      m.kinetic(i, j) = m.kinetic(j, i) = t;
      m.nuclear(i, j) = m.nuclear(j, i) = v;
    }
  return m;
}

ERITensor::ERITensor(int n_basis) : n_(n_basis) {
  const std::int64_t npair = static_cast<std::int64_t>(n_) * (n_ + 1) / 2;
  values_.assign(static_cast<std::size_t>(npair * (npair + 1) / 2), 0.0);
}

ERITensor compute_eri_tensor(const MolecularSystem& system) {
  const int n = static_cast<int>(system.basis.size());
  ERITensor tensor(n);
  std::vector<PairHermite> pairs;
  const std::int64_t npair = static_cast<std::int64_t>(n) * (n + 1) / 2;
  pairs.resize(static_cast<std::size_t>(npair));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i <= j; ++i)
      pairs[static_cast<std::size_t>(ERITensor::pair_index(i, j))] = build_pair_hermite(
          system.basis[static_cast<std::size_t>(i)], system.basis[static_cast<std::size_t>(j)]);

#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t ab = 0; ab < npair; ++ab) {
    for (std::int64_t cd = 0; cd <= ab; ++cd) {
      const auto& ph1 = pairs[static_cast<std::size_t>(ab)];
      const auto& ph2 = pairs[static_cast<std::size_t>(cd)];
      double total = 0.0;
      for (const auto& b1 : ph1.blocks)
        for (const auto& b2 : ph2.blocks) {
          const double p = b1.p, q = b2.p;
          const double alpha = p * q / (p + q);
          const double pref =
              2.0 * std::pow(std::numbers::pi, 2.5) / (p * q * std::sqrt(p + q));
          const RTensor r(b1.order + b2.order, alpha, sub(b1.P, b2.P));
          double sum = 0.0;
          for (const auto& h2 : b2.terms) {
            const double sign = ((h2.t + h2.u + h2.v) % 2) ? -1.0 : 1.0;
            double inner = 0.0;
            for (const auto& h1 : b1.terms)
              inner += h1.c * r(h1.t + h2.t, h1.u + h2.u, h1.v + h2.v);
            sum += sign * h2.c * inner;
          }
          total += pref * sum;
        }
      tensor.raw_at(ab * (ab + 1) / 2 + cd) = total;
    }
  }
  return tensor;
}

namespace {

std::uint64_t fnv1a_bytes(std::uint64_t h, const char* s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    h ^= static_cast<unsigned char>(s[i]);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::uint64_t fnv1a_checksum(const Eigen::MatrixXd& m) {
  std::uint64_t h = 14695981039346656037ull;
  char buf[64];
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const int len = std::snprintf(buf, sizeof(buf), "%.15e;", m(i, j));
      h = fnv1a_bytes(h, buf, static_cast<std::size_t>(len));
    }
  return h;
}

std::uint64_t fnv1a_checksum(const ERITensor& t) {
  std::uint64_t h = 14695981039346656037ull;
  char buf[64];
  for (double v : t.raw()) {
    const int len = std::snprintf(buf, sizeof(buf), "%.15e;", v);
    h = fnv1a_bytes(h, buf, static_cast<std::size_t>(len));
  }
  return h;
}

}  // namespace sgdyn
