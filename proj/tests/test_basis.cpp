#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "sgdyn/basis.hpp"
#include "sgdyn/integrals.hpp"

using namespace sgdyn;

TEST_CASE("He basis composition") {
  const auto he = build_helium_basis();
  CHECK(he.basis.size() == 65);
  CHECK(he.nuclei.size() == 1);
  CHECK(he.nuclei[0].charge == 2);
  CHECK(he.total_charge() == 2);
  int n_s = 0, n_l7 = 0;
  for (const auto& f : he.basis) {
    if (f.shell.l == 0) ++n_s;
    if (f.shell.l == 7) ++n_l7;
    CHECK(std::abs(f.m) <= f.shell.l);
    for (const auto& p : f.shell.primitives) CHECK(p.exponent > 0.0);
  }
  CHECK(n_s == 2);    // two s-type radial functions
  CHECK(n_l7 == 15);  // 2l+1 at l=7
}

TEST_CASE("H2 basis composition and geometry") {
  const auto h2 = build_h2_basis();
  CHECK(h2.basis.size() == 130);
  CHECK(h2.nuclei.size() == 2);
  CHECK(h2.nuclei[0].position[2] == doctest::Approx(-0.7));
  CHECK(h2.nuclei[1].position[2] == doctest::Approx(0.7));
  CHECK_THROWS(build_h2_basis(-1.0));
}

TEST_CASE("every reference basis function is unit normalized") {
  for (const auto& sys : {build_helium_basis(), build_h2_basis()})
    for (const auto& f : sys.basis)
      CHECK(overlap(f, f) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pointwise evaluation") {
  ContractedShell s{{0.0, 0.0, 0.0}, 0, 1, {{1.0, 0.5}}};
  const auto f = make_basis_function(s, 0);
  // normalized s Gaussian value at its center: (2 zeta / pi)^(3/4)
  CHECK(eval_basis_function(f, {0.0, 0.0, 0.0}) ==
        doctest::Approx(std::pow(1.0 / M_PI, 0.75)).epsilon(1e-12));
  CHECK(std::abs(eval_basis_function(f, {0.0, 0.0, 10.0})) < 1e-8);

  ContractedShell d{{0.5, -0.25, 1.0}, 2, 1, {{1.0, 0.8}}};
  const auto g = make_basis_function(d, 1);
  CHECK(eval_basis_function(g, {0.5, -0.25, 1.0}) == 0.0);  // r^l kills the center
}

TEST_CASE("H2 overlap matrix respects the mirror center swap") {
  const auto h2 = build_h2_basis();
  const auto S = compute_one_electron(h2).overlap;
  // The z -> -z mirror exchanges the two identical center blocks of 65 and
  // multiplies each (l, m) function by its reflection parity (-1)^(l+|m|).
  const int half = 65;
  auto parity = [&](int i) {
    const auto& f = h2.basis[static_cast<std::size_t>(i)];
    return ((f.shell.l + std::abs(f.m)) % 2) ? -1.0 : 1.0;
  };
  double max_dev = 0.0;
  for (int i = 0; i < 130; ++i)
    for (int j = 0; j < 130; ++j) {
      const int si = (i + half) % 130, sj = (j + half) % 130;
      max_dev = std::max(max_dev, std::abs(S(i, j) - parity(i) * parity(j) * S(si, sj)));
    }
  CHECK(max_dev < 1e-10);
}

TEST_CASE("shell text serialization") {
  const auto he = build_helium_basis(1);
  std::ostringstream os;
  write_basis_text(os, he);
  int lines = 0;
  std::istringstream is(os.str());
  std::string line;
  while (std::getline(is, line)) ++lines;
  CHECK(lines == 3);  // s(n=1), s(n=2), p
}
