#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "sgdyn/hyperbolic.hpp"

using namespace sgdyn;

namespace {

HyperbolicCrossSpec sg_spec(double r, int n = 2, int lmax = 7) {
  return HyperbolicCrossSpec(TruncationMode::SparseGrid, r, SpinPartition::all_up(n), lmax);
}

HyperbolicCrossSpec fg_spec(double r, int n = 2, int lmax = 7) {
  return HyperbolicCrossSpec(TruncationMode::FullGrid, r, SpinPartition::all_up(n), lmax);
}

// Brute-force intersection by sampling a fine grid over the closed cell.
bool cell_intersects_brute(const std::vector<int>& l, double big_l,
                           const HyperbolicCrossSpec& spec, int d, int samples = 21) {
  const double w = 1.0 / big_l;
  std::vector<int> idx(l.size(), 0);
  for (;;) {
    std::vector<double> xi(l.size());
    for (std::size_t k = 0; k < l.size(); ++k)
      xi[k] = w * l[k] + w * idx[k] / (samples - 1);
    if (cross_weight(xi, d, spec.partition) <= spec.radius) return true;
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == samples) idx[k++] = 0;
    if (k == idx.size()) return false;
  }
}

}  // namespace

TEST_CASE("continuous membership matches the defining formula") {
  const auto spec = sg_spec(2.0);
  const std::vector<double> zero{0.0, 0.0};
  CHECK(continuous_membership(zero, spec, 1));  // 1 + 1 = 2 <= 2

  const auto small = sg_spec(1.5);
  CHECK_FALSE(continuous_membership(zero, small, 1));

  // d=1, N=2, xi=(1,1), R=3: sqrt2*sqrt2 + 1 = 3 <= 3
  const std::vector<double> ones{1.0, 1.0};
  CHECK(continuous_membership(ones, sg_spec(3.0), 1));
  const double w = cross_weight(ones, 1, SpinPartition::all_up(2));
  CHECK(w == doctest::Approx(3.0).epsilon(1e-14));

  CHECK_THROWS(continuous_membership(std::vector<double>{1.0}, spec, 1));
  CHECK_THROWS(continuous_membership(zero, fg_spec(2.0), 1));
}

TEST_CASE("empty-partition blocks contribute the empty product 1") {
  // N=2 with I1={1}, I2={2}: weight = sqrt(1+x1^2) + sqrt(1+x2^2)
  SpinPartition split(2, {1}, {2});
  const std::vector<double> xi{1.0, 2.0};
  CHECK(cross_weight(xi, 1, split) ==
        doctest::Approx(std::sqrt(2.0) + std::sqrt(5.0)).epsilon(1e-14));
}

TEST_CASE("discrete cells: 1 particle window") {
  // N=1 with I1={1}, I2 empty: weight sqrt(1+xi^2) + 1, so the block bound
  // sqrt(1+xi^2) <= 2 corresponds to R = 3. Cells touching |xi| <= sqrt(3):
  // closest point of [1,2) is 1 (sqrt 2 <= 2), of [2,3) is 2 (sqrt 5 > 2).
  HyperbolicCrossSpec spec(TruncationMode::SparseGrid, 3.0, SpinPartition::all_up(1), 7);
  const auto cells = enumerate_discrete_cells(1.0, spec, 0, 1);
  std::set<int> ls;
  for (const auto& c : cells) ls.insert(c.l_vec[0]);
  CHECK(ls == std::set<int>{-2, -1, 0, 1});
  for (const auto& c : cells) CHECK(c.j_vec == std::vector<int>{0});

  HyperbolicCrossSpec tight(TruncationMode::SparseGrid, 2.0, SpinPartition::all_up(1), 7);
  const auto small = enumerate_discrete_cells(1.0, tight, 0, 1);
  std::set<int> ls2;
  for (const auto& c : small) ls2.insert(c.l_vec[0]);
  CHECK(ls2 == std::set<int>{-1, 0});
}

TEST_CASE("discrete cells: 2 particles, R=2 keeps only origin-adjacent cells") {
  const auto spec = sg_spec(2.0);
  const auto cells = enumerate_discrete_cells(1.0, spec, 0, 1);
  std::set<std::vector<int>> got;
  for (const auto& c : cells) got.insert(c.l_vec);
  // Only cells whose closed corner closest to zero reaches weight <= 2 survive;
  // candidates such as (0,1) have weight sqrt(2)+1 > 2 there.
  const std::set<std::vector<int>> expect{{-1, -1}, {-1, 0}, {0, -1}, {0, 0}};
  CHECK(got == expect);
  for (const auto& c : cells)
    CHECK(cell_intersects_brute(c.l_vec, 1.0, spec, 1));
}

TEST_CASE("discrete cells: no truncation when R covers the window") {
  // weight anywhere in the |l| <= 3, L = 1 window is at most sqrt(17)^2+1 = 18
  const auto spec = sg_spec(50.0);
  const auto cells = enumerate_discrete_cells(1.0, spec, 1, 1);
  std::set<std::vector<int>> ls;
  for (const auto& c : cells) ls.insert(c.l_vec);
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) CHECK(ls.count({a, b}) == 1);
  // 9 j-combinations per cell
  std::size_t with_l00 = 0;
  for (const auto& c : cells)
    if (c.l_vec == std::vector<int>{0, 0}) ++with_l00;
  CHECK(with_l00 == 9);
}

TEST_CASE("analytic cell rule equals brute-force sampling on random cells") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> cell(-6, 6);
  std::uniform_real_distribution<double> radius(1.0, 8.0);
  std::uniform_real_distribution<double> lbox(0.5, 2.0);
  int checked = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const auto spec = sg_spec(radius(rng));
    const double big_l = lbox(rng);
    const std::vector<int> l{cell(rng), cell(rng)};
    const bool analytic = cell_intersects_cross(l, big_l, spec, 1);
    const bool brute = cell_intersects_brute(l, big_l, spec, 1, 41);
    CHECK(analytic == brute);
    ++checked;
  }
  CHECK(checked >= 100);
}

TEST_CASE("angular enumeration: SG example set at R=2.25") {
  const auto set = enumerate_angular(sg_spec(2.25));
  const std::vector<std::vector<int>> expect{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 0}};
  CHECK(set == expect);
  CHECK(cardinality(sg_spec(2.25)) == 17);  // 1+3+3+5+5 with m multiplicity
}

TEST_CASE("angular enumeration: FG mode") {
  const auto set = enumerate_angular(fg_spec(1.0));
  const std::vector<std::vector<int>> expect{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  CHECK(set == expect);
  CHECK(cardinality(fg_spec(0.0)) == 1);
  // sum_{l<=7} (2l+1) = 64 per particle
  CHECK(cardinality(fg_spec(7.0)) == 64 * 64);
}

TEST_CASE("SG sets are swap-symmetric for the all-up partition") {
  const auto set = enumerate_angular(sg_spec(6.5));
  std::set<std::vector<int>> s(set.begin(), set.end());
  for (const auto& l : set) CHECK(s.count({l[1], l[0]}) == 1);
}

TEST_CASE("nesting in R for both index families") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> radius(1.2, 12.0);
  for (int trial = 0; trial < 20; ++trial) {
    double r1 = radius(rng), r2 = radius(rng);
    if (r1 > r2) std::swap(r1, r2);
    const auto a1 = enumerate_angular(sg_spec(r1));
    const auto a2 = enumerate_angular(sg_spec(r2));
    CHECK(std::includes(a2.begin(), a2.end(), a1.begin(), a1.end()));
    const auto c1 = enumerate_discrete_cells(1.0, sg_spec(std::min(r1, 5.0)), 0, 1);
    const auto c2 = enumerate_discrete_cells(1.0, sg_spec(std::min(r2, 5.0)), 0, 1);
    CHECK(std::includes(c2.begin(), c2.end(), c1.begin(), c1.end()));
  }
}

TEST_CASE("continuous/discrete consistency at cell centers") {
  const auto spec = sg_spec(3.5);
  const double big_l = 1.0;
  const auto cells = enumerate_discrete_cells(big_l, spec, 0, 1);
  std::set<std::vector<int>> in_set;
  for (const auto& c : cells) in_set.insert(c.l_vec);
  for (int a = -5; a <= 5; ++a)
    for (int b = -5; b <= 5; ++b) {
      const std::vector<double> center{a + 0.5, b + 0.5};
      if (continuous_membership(center, spec, 1)) CHECK(in_set.count({a, b}) == 1);
    }
}

TEST_CASE("index sets serialize one multi-index per line") {
  std::ostringstream os;
  write_index_set(os, enumerate_angular(fg_spec(1.0)));
  CHECK(os.str() == "0 0\n0 1\n1 0\n1 1\n");
}
