#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>

#include "sgdyn/basis.hpp"
#include "sgdyn/integrals.hpp"
#include "sgdyn/oracles.hpp"

using namespace sgdyn;

namespace {

BasisFunction raw_prim(const std::array<double, 3>& center, int l, int m, double zeta) {
  // norm_factor forced to 1: an unnormalized primitive for closed-form checks
  ContractedShell s{center, l, 1, {{1.0, zeta}}};
  return BasisFunction{s, m, 1.0};
}

BasisFunction normalized_prim(const std::array<double, 3>& center, int l, int m, double zeta) {
  ContractedShell s{center, l, 1, {{1.0, zeta}}};
  return make_basis_function(s, m);
}

}  // namespace

TEST_CASE("closed-form s-s overlap of unnormalized primitives") {
  // <s|s> for bare exp(-r^2) pair = (pi/2)^(3/2); our functions carry Y00
  const auto a = raw_prim({0, 0, 0}, 0, 0, 1.0);
  const double y00sq = 1.0 / (4.0 * std::numbers::pi);
  CHECK(overlap(a, a) ==
        doctest::Approx(std::pow(std::numbers::pi / 2.0, 1.5) * y00sq).epsilon(1e-13));
}

TEST_CASE("one-electron integrals match quadrature on random shell pairs") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> zeta(0.35, 1.8);
  std::uniform_real_distribution<double> pos(-0.8, 0.8);
  std::uniform_int_distribution<int> ell(0, 2);
  const std::vector<Nucleus> nuclei{{1, {0.2, -0.1, 0.4}}, {2, {-0.5, 0.3, -0.2}}};
  for (int trial = 0; trial < 12; ++trial) {
    const int la = ell(rng), lb = ell(rng);
    std::uniform_int_distribution<int> ma(-la, la), mb(-lb, lb);
    const auto a =
        normalized_prim({pos(rng), pos(rng), pos(rng)}, la, ma(rng), zeta(rng));
    const auto b =
        normalized_prim({pos(rng), pos(rng), pos(rng)}, lb, mb(rng), zeta(rng));
    CHECK(overlap(a, b) == doctest::Approx(overlap_quadrature(a, b)).epsilon(5e-9));
    CHECK(kinetic(a, b) == doctest::Approx(kinetic_quadrature(a, b)).epsilon(5e-7));
    CHECK(nuclear(a, b, nuclei) ==
          doctest::Approx(nuclear_quadrature(a, b, nuclei)).epsilon(1e-7));
  }
}

TEST_CASE("nuclear attraction agrees with quadrature for an s pair at the nucleus") {
  const auto a = raw_prim({0, 0, 0}, 0, 0, 1.0);
  const std::vector<Nucleus> nuclei{{1, {0.0, 0.0, 0.0}}};
  const double analytic = nuclear(a, a, nuclei);
  const double quad = nuclear_quadrature(a, a, nuclei);
  CHECK(std::abs(analytic - quad) < 1e-8 * std::abs(quad));
}

TEST_CASE("(ss|ss) closed form and Monte-Carlo oracle") {
  const auto s = raw_prim({0, 0, 0}, 0, 0, 1.0);
  const double y004 = std::pow(4.0 * std::numbers::pi, -2.0);
  const double expect = std::pow(std::numbers::pi, 2.5) / 4.0 * y004;
  CHECK(eri(s, s, s, s) == doctest::Approx(expect).epsilon(1e-12));
  const double mc = eri_monte_carlo(s, s, s, s, 20240731ull, 200000000);
  CHECK(std::abs(mc - expect) < 1e-4 * expect);
}

TEST_CASE("ERI matches the quadrature oracle on random low-l quadruples") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> zeta(0.4, 1.6);
  std::uniform_real_distribution<double> pos(-0.7, 0.7);
  std::uniform_int_distribution<int> ell(0, 2);
  for (int trial = 0; trial < 6; ++trial) {
    BasisFunction f[4] = {
        normalized_prim({pos(rng), pos(rng), pos(rng)}, ell(rng), 0, zeta(rng)),
        normalized_prim({pos(rng), pos(rng), pos(rng)}, ell(rng), 0, zeta(rng)),
        normalized_prim({pos(rng), pos(rng), pos(rng)}, ell(rng), 0, zeta(rng)),
        normalized_prim({pos(rng), pos(rng), pos(rng)}, ell(rng), 0, zeta(rng))};
    for (auto& g : f) {
      std::uniform_int_distribution<int> mm(-g.shell.l, g.shell.l);
      g = normalized_prim(g.shell.center, g.shell.l, mm(rng), g.shell.primitives[0].exponent);
    }
    const double analytic = eri(f[0], f[1], f[2], f[3]);
    const double quad = eri_quadrature(f[0], f[1], f[2], f[3]);
    const double scale = std::max({1e-4, std::abs(quad)});
    CHECK(std::abs(analytic - quad) < 1e-6 * scale);
  }
}

TEST_CASE("ERI 8-fold symmetry is exact in the tensor") {
  const auto he = build_helium_basis(1);  // 1 + 1 + 3 functions
  const auto t = compute_eri_tensor(he);
  const int n = static_cast<int>(he.basis.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d <= c; ++d) {
          CHECK(t(a, b, c, d) == t(b, a, c, d));
          CHECK(t(a, b, c, d) == t(a, b, d, c));
          CHECK(t(a, b, c, d) == t(c, d, a, b));
        }
  // diagonal elements are positive self-repulsions
  for (int a = 0; a < n; ++a) CHECK(t(a, a, a, a) > 0.0);
}

TEST_CASE("tensor entries equal direct eri() calls") {
  const auto he = build_helium_basis(2);
  const auto t = compute_eri_tensor(he);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(he.basis.size()) - 1);
  for (int trial = 0; trial < 25; ++trial) {
    const int a = pick(rng), b = pick(rng), c = pick(rng), d = pick(rng);
    const double direct = eri(he.basis[static_cast<std::size_t>(a)],
                              he.basis[static_cast<std::size_t>(b)],
                              he.basis[static_cast<std::size_t>(c)],
                              he.basis[static_cast<std::size_t>(d)]);
    CHECK(t(a, b, c, d) == doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("point-charge limit of widely separated s distributions") {
  const auto a = normalized_prim({0, 0, 0}, 0, 0, 0.9);
  const auto b = normalized_prim({0, 0, 20.0}, 0, 0, 0.9);
  const double v = eri(a, a, b, b);
  CHECK(std::abs(v - 1.0 / 20.0) < 0.01 / 20.0);
}

TEST_CASE("h1 gram closed form and positivity") {
  const auto s = normalized_prim({0, 0, 0}, 0, 0, 0.5);
  CHECK(h1_gram(s, s) == doctest::Approx(2.5).epsilon(1e-12));  // 1 + 2*(3 zeta/2)
  const auto p = normalized_prim({0.1, 0.2, 0.3}, 1, 0, 0.7);
  CHECK(h1_gram(s, p) == doctest::Approx(h1_gram(p, s)).epsilon(1e-12));

  const auto he = build_helium_basis(3);
  const int n = static_cast<int>(he.basis.size());
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g(i, j) = h1_gram(he.basis[static_cast<std::size_t>(i)],
                        he.basis[static_cast<std::size_t>(j)]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
  CHECK(es.eigenvalues().minCoeff() > 0.0);
}

TEST_CASE("improved Hardy inequality for every reference basis function") {
  for (const auto& sys : {build_helium_basis(), build_h2_basis()})
    for (const auto& f : sys.basis) {
      const auto [grad, weighted] = hardy_ratio(f);
      CHECK(grad >= (f.shell.l + 0.5) * weighted - 1e-10);
    }
  // the ratio is scale invariant in the exponent
  const auto p1 = normalized_prim({0, 0, 0}, 1, 1, 0.3);
  const auto p2 = normalized_prim({0, 0, 0}, 1, 1, 2.4);
  const auto h1 = hardy_ratio(p1), h2 = hardy_ratio(p2);
  CHECK(h1.grad_norm / h1.weighted_norm ==
        doctest::Approx(h2.grad_norm / h2.weighted_norm).epsilon(1e-12));
  // l = 0 and l = 1 reference constants
  const auto s = normalized_prim({0, 0, 0}, 0, 0, 0.5);
  const auto hs = hardy_ratio(s);
  CHECK(hs.grad_norm / hs.weighted_norm >= 0.5);
  CHECK(h1.grad_norm / h1.weighted_norm >= 1.5);
}

TEST_CASE("translation invariance of S, T and ERIs") {
  const std::array<double, 3> shift{1.3, -0.4, 0.9};
  auto shifted = [&](const BasisFunction& f) {
    BasisFunction g = f;
    for (int d = 0; d < 3; ++d) g.shell.center[static_cast<std::size_t>(d)] +=
        shift[static_cast<std::size_t>(d)];
    return g;
  };
  const auto a = normalized_prim({0.0, 0.1, -0.2}, 1, -1, 0.8);
  const auto b = normalized_prim({0.4, -0.3, 0.5}, 2, 2, 1.1);
  CHECK(overlap(a, b) == doctest::Approx(overlap(shifted(a), shifted(b))).epsilon(1e-12));
  CHECK(kinetic(a, b) == doctest::Approx(kinetic(shifted(a), shifted(b))).epsilon(1e-12));
  CHECK(eri(a, b, a, b) ==
        doctest::Approx(eri(shifted(a), shifted(b), shifted(a), shifted(b))).epsilon(1e-12));
}

TEST_CASE("rotation invariance of one-electron spectra") {
  // rotate centers by 90 degrees about z; the (l, m) functions permute among
  // themselves, so the spectra of S and T are unchanged
  auto rot = [](const std::array<double, 3>& r) {
    return std::array<double, 3>{-r[1], r[0], r[2]};
  };
  MolecularSystem sys;
  sys.partition = SpinPartition::all_up(2);
  sys.nuclei.push_back({1, {0.3, 0.0, -0.2}});
  MolecularSystem rsys = sys;
  rsys.nuclei[0].position = rot(rsys.nuclei[0].position);
  for (int l = 0; l <= 2; ++l)
    for (int m = -l; m <= l; ++m) {
      sys.basis.push_back(normalized_prim({0.5, -0.2, 0.1}, l, m, 0.7));
      rsys.basis.push_back(normalized_prim(rot({0.5, -0.2, 0.1}), l, m, 0.7));
    }
  const auto m1 = compute_one_electron(sys);
  const auto m2 = compute_one_electron(rsys);
  Eigen::VectorXd s1 = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m1.overlap).eigenvalues();
  Eigen::VectorXd s2 = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m2.overlap).eigenvalues();
  Eigen::VectorXd t1 = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m1.kinetic).eigenvalues();
  Eigen::VectorXd t2 = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m2.kinetic).eigenvalues();
  CHECK((s1 - s2).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((t1 - t2).cwiseAbs().maxCoeff() < 1e-10);
  Eigen::VectorXd v1 = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m1.nuclear).eigenvalues();
  Eigen::VectorXd v2 = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m2.nuclear).eigenvalues();
  CHECK((v1 - v2).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("one-electron matrix structure on the He basis") {
  const auto he = build_helium_basis(2);
  const auto m = compute_one_electron(he);
  CHECK((m.overlap - m.overlap.transpose()).norm() == 0.0);
  CHECK((m.kinetic - m.kinetic.transpose()).norm() == 0.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.overlap);
  CHECK(es.eigenvalues().minCoeff() > 0.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> et(m.kinetic);
  CHECK(et.eigenvalues().minCoeff() > -1e-12);
  for (int i = 0; i < m.nuclear.rows(); ++i) CHECK(m.nuclear(i, i) < 0.0);
}
