#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "sgdyn/spin_partition.hpp"

namespace sgdyn {

enum class TruncationMode { SparseGrid, FullGrid };

/// Hyperbolic-cross truncation parameters. In SparseGrid mode the bound is
///   sum_{l=1,2} prod_{i in I_l} (1 + |xi_i|^2)^{1/2} <= R
/// (empty products equal 1); FullGrid mode keeps the sup-norm ball instead
/// and ignores the partition.
struct HyperbolicCrossSpec {
  TruncationMode mode = TruncationMode::SparseGrid;
  double radius = 1.0;
  SpinPartition partition;
  int l_max = 7;

  HyperbolicCrossSpec() = default;
  HyperbolicCrossSpec(TruncationMode m, double r, SpinPartition p, int lmax = 7);
};

/// Index of one Fourier-box cell: the cell covers L^-1 * l_vec + [0, L^-1)^(dN)
/// in frequency, and j_vec enumerates the intra-cell modes.
struct CellIndex {
  std::vector<int> j_vec;
  std::vector<int> l_vec;
  double box_width_inv = 1.0;  // the L of the psi^(L) system

  friend bool operator==(const CellIndex& a, const CellIndex& b) {
    return a.j_vec == b.j_vec && a.l_vec == b.l_vec;
  }
  friend auto operator<=>(const CellIndex& a, const CellIndex& b) {
    if (auto c = a.l_vec <=> b.l_vec; c != 0) return c;
    return a.j_vec <=> b.j_vec;
  }
};

/// Value of the hyperbolic-cross weight sum_l prod_{i in I_l} sqrt(1+|xi_i|^2)
/// for a frequency vector split into N blocks of dimension d.
double cross_weight(std::span<const double> xi, int dim_per_particle,
                    const SpinPartition& partition);

/// Continuous membership xi in D(R). Requires SparseGrid mode and
/// xi.size() == d*N.
bool continuous_membership(std::span<const double> xi, const HyperbolicCrossSpec& spec,
                           int dim_per_particle);

/// Per-coordinate point of the (closed) cell closest to zero; the cross weight
/// is coordinate-wise monotone in |xi|, so cell intersection with D(R) is
/// equivalent to membership of this point.
std::vector<double> cell_closest_point(std::span<const int> l_vec, double box_width_inv);

bool cell_intersects_cross(std::span<const int> l_vec, double box_width_inv,
                           const HyperbolicCrossSpec& spec, int dim_per_particle);

/// All (j, l) with ||j||_inf <= j_cap and cell(l) intersecting D(R).
/// Sorted lexicographically (l major, j minor) for deterministic output.
std::vector<CellIndex> enumerate_discrete_cells(double box_width_inv,
                                                const HyperbolicCrossSpec& spec, int j_cap,
                                                int dim_per_particle);

/// Angular multi-indices (l_1,...,l_N), each in [0, l_max]:
/// SG keeps sum_l prod_{j in I_l} (l_j + 1/2) <= R, FG keeps ||l||_inf <= R.
std::vector<std::vector<int>> enumerate_angular(const HyperbolicCrossSpec& spec);

bool angular_member(std::span<const int> l_vec, const HyperbolicCrossSpec& spec);

/// |enumerate_angular| counted with m-multiplicity prod_j (2 l_j + 1).
std::int64_t cardinality(const HyperbolicCrossSpec& spec);

/// Line-oriented text format: one multi-index per line, space-separated.
void write_index_set(std::ostream& os, const std::vector<std::vector<int>>& set);
void write_index_set(std::ostream& os, const std::vector<CellIndex>& cells);

}  // namespace sgdyn
