#include "sgdyn/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace sgdyn {

HyperbolicCrossSpec::HyperbolicCrossSpec(TruncationMode m, double r, SpinPartition p, int lmax)
    : mode(m), radius(r), partition(std::move(p)), l_max(lmax) {
  // R = 0 is admitted for the full-grid mode, where it keeps exactly l = 0.
  if (radius < 0.0) throw std::invalid_argument("HyperbolicCrossSpec: radius must be >= 0");
  if (l_max < 0) throw std::invalid_argument("HyperbolicCrossSpec: l_max must be non-negative");
}

double cross_weight(std::span<const double> xi, int dim_per_particle,
                    const SpinPartition& partition) {
  const int n = partition.n_electrons;
  const int d = dim_per_particle;
  if (static_cast<int>(xi.size()) != n * d)
    throw std::invalid_argument("cross_weight: xi dimension does not match N*d");
  double total = 0.0;
  for (const auto* set : {&partition.i1, &partition.i2}) {
    // One square root per block keeps representable boundary cases exact.
    double prod2 = 1.0;  // empty product convention
    for (int label : *set) {
      double s2 = 0.0;
      for (int k = 0; k < d; ++k) {
        const double x = xi[static_cast<std::size_t>((label - 1) * d + k)];
        s2 += x * x;
      }
      prod2 *= 1.0 + s2;
    }
    total += std::sqrt(prod2);
  }
  return total;
}

bool continuous_membership(std::span<const double> xi, const HyperbolicCrossSpec& spec,
                           int dim_per_particle) {
  if (spec.mode != TruncationMode::SparseGrid)
    throw std::invalid_argument("continuous_membership: requires SparseGrid mode");
  return cross_weight(xi, dim_per_particle, spec.partition) <= spec.radius;
}

std::vector<double> cell_closest_point(std::span<const int> l_vec, double box_width_inv) {
  if (box_width_inv <= 0.0)
    throw std::invalid_argument("cell_closest_point: L must be positive");
  const double w = 1.0 / box_width_inv;  // cell width
  std::vector<double> p(l_vec.size());
  for (std::size_t k = 0; k < l_vec.size(); ++k) {
    const double lo = w * l_vec[k];
    const double hi = w * (l_vec[k] + 1);
    p[k] = (lo >= 0.0) ? lo : (hi <= 0.0 ? hi : 0.0);
  }
  return p;
}

bool cell_intersects_cross(std::span<const int> l_vec, double box_width_inv,
                           const HyperbolicCrossSpec& spec, int dim_per_particle) {
  const auto p = cell_closest_point(l_vec, box_width_inv);
  return cross_weight(p, dim_per_particle, spec.partition) <= spec.radius;
}

namespace {

// Odometer-style scan over a symmetric integer box [-k, k]^len.
bool advance(std::vector<int>& v, int lo, int hi) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (v[i] < hi) {
      ++v[i];
      std::fill(v.begin() + static_cast<std::ptrdiff_t>(i) + 1, v.end(), lo);
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<CellIndex> enumerate_discrete_cells(double box_width_inv,
                                                const HyperbolicCrossSpec& spec, int j_cap,
                                                int dim_per_particle) {
  if (box_width_inv <= 0.0)
    throw std::invalid_argument("enumerate_discrete_cells: L must be positive");
  if (j_cap < 0) throw std::invalid_argument("enumerate_discrete_cells: j_cap must be >= 0");
  if (dim_per_particle < 1 || dim_per_particle > 3)
    throw std::invalid_argument("enumerate_discrete_cells: d must be in {1,2,3}");
  const int len = spec.partition.n_electrons * dim_per_particle;
  const double R = spec.radius;

  // Each per-particle factor is >= 1, so any single coordinate must satisfy
  // sqrt(1 + xi^2) <= R at the closest point; that bounds the l-window.
  const double xi_max = (R >= 1.0) ? std::sqrt(R * R - 1.0) : 0.0;
  const int k_max = static_cast<int>(std::ceil(xi_max * box_width_inv)) + 1;

  std::vector<CellIndex> out;
  std::vector<int> l(static_cast<std::size_t>(len), -k_max);
  do {
    if (!cell_intersects_cross(l, box_width_inv, spec, dim_per_particle)) continue;
    std::vector<int> j(static_cast<std::size_t>(len), -j_cap);
    do {
      out.push_back(CellIndex{j, l, box_width_inv});
    } while (advance(j, -j_cap, j_cap));
  } while (advance(l, -k_max, k_max));
  std::sort(out.begin(), out.end());
  return out;
}

bool angular_member(std::span<const int> l_vec, const HyperbolicCrossSpec& spec) {
  if (static_cast<int>(l_vec.size()) != spec.partition.n_electrons)
    throw std::invalid_argument("angular_member: l size does not match N");
  for (int l : l_vec)
    if (l < 0 || l > spec.l_max) return false;
  if (spec.mode == TruncationMode::FullGrid) {
    for (int l : l_vec)
      if (static_cast<double>(l) > spec.radius) return false;
    return true;
  }
  double total = 0.0;
  for (const auto* set : {&spec.partition.i1, &spec.partition.i2}) {
    double prod = 1.0;
    for (int label : *set) prod *= l_vec[static_cast<std::size_t>(label - 1)] + 0.5;
    total += prod;
  }
  return total <= spec.radius;
}

std::vector<std::vector<int>> enumerate_angular(const HyperbolicCrossSpec& spec) {
  const int n = spec.partition.n_electrons;
  std::vector<std::vector<int>> out;
  std::vector<int> l(static_cast<std::size_t>(n), 0);
  do {
    if (angular_member(l, spec)) out.push_back(l);
  } while (advance(l, 0, spec.l_max));
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t cardinality(const HyperbolicCrossSpec& spec) {
  std::int64_t count = 0;
  for (const auto& l : enumerate_angular(spec)) {
    std::int64_t mult = 1;
    for (int lj : l) mult *= 2 * lj + 1;
    count += mult;
  }
  return count;
}

void write_index_set(std::ostream& os, const std::vector<std::vector<int>>& set) {
  for (const auto& idx : set) {
    for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? " " : "") << idx[k];
    os << '\n';
  }
}

void write_index_set(std::ostream& os, const std::vector<CellIndex>& cells) {
  for (const auto& c : cells) {
    bool first = true;
    for (int v : c.l_vec) {
      os << (first ? "" : " ") << v;
      first = false;
    }
    for (int v : c.j_vec) os << ' ' << v;
    os << '\n';
  }
}

}  // namespace sgdyn
