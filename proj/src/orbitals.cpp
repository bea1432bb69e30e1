#include "sgdyn/orbitals.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

namespace sgdyn {

namespace {

bool mirrored_two_center(const MolecularSystem& sys) {
  const std::size_t n = sys.basis.size();
  if (n % 2 != 0) return false;
  const std::size_t half = n / 2;
  for (std::size_t i = 0; i < half; ++i) {
    const auto& a = sys.basis[i].shell;
    const auto& b = sys.basis[i + half].shell;
    if (a.l != b.l || sys.basis[i].m != sys.basis[i + half].m ||
        a.radial_index != b.radial_index)
      return false;
    if (a.center == b.center) return false;
  }
  // all first-half functions on one center, all second-half on another
  for (std::size_t i = 1; i < half; ++i)
    if (sys.basis[i].shell.center != sys.basis[0].shell.center) return false;
  for (std::size_t i = half + 1; i < n; ++i)
    if (sys.basis[i].shell.center != sys.basis[half].shell.center) return false;
  return true;
}

}  // namespace

OrthonormalOrbitals orthonormalize(const MolecularSystem& system, const Eigen::MatrixXd& overlap,
                                   double drop_threshold) {
  const int n = static_cast<int>(system.basis.size());
  if (overlap.rows() != n || overlap.cols() != n)
    throw std::invalid_argument("orthonormalize: overlap dimension mismatch");

  // Columns of B are the (symmetry-adapted) starting vectors, each carrying a
  // sharp (l, m, symmetry) label.
  Eigen::MatrixXd b;
  std::vector<OrbitalLabel> pre_labels;
  if (mirrored_two_center(system)) {
    const int half = n / 2;
    b = Eigen::MatrixXd::Zero(n, n);
    pre_labels.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < half; ++i) {
      const auto& f = system.basis[static_cast<std::size_t>(i)];
      b(i, 2 * i) = 1.0;
      b(i + half, 2 * i) = 1.0;  // gerade combination
      b(i, 2 * i + 1) = 1.0;
      b(i + half, 2 * i + 1) = -1.0;  // ungerade combination
      pre_labels[static_cast<std::size_t>(2 * i)] = {f.shell.l, f.m, 0};
      pre_labels[static_cast<std::size_t>(2 * i + 1)] = {f.shell.l, f.m, 1};
    }
  } else {
    b = Eigen::MatrixXd::Identity(n, n);
    pre_labels.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const auto& f = system.basis[static_cast<std::size_t>(i)];
      pre_labels[static_cast<std::size_t>(i)] = {f.shell.l, f.m, 0};
    }
  }

  // Group columns by label; keep first-appearance order for determinism.
  std::vector<std::tuple<int, int, int>> block_keys;
  std::map<std::tuple<int, int, int>, std::vector<int>> blocks;
  for (int c = 0; c < n; ++c) {
    const auto& lb = pre_labels[static_cast<std::size_t>(c)];
    const auto key = std::make_tuple(lb.l, lb.m, lb.symmetry);
    if (blocks.find(key) == blocks.end()) block_keys.push_back(key);
    blocks[key].push_back(c);
  }

  OrthonormalOrbitals out;
  out.drop_threshold = drop_threshold;
  std::vector<Eigen::VectorXd> columns;
  for (const auto& key : block_keys) {
    const auto& cols = blocks[key];
    const int k = static_cast<int>(cols.size());
    Eigen::MatrixXd bb(n, k);
    for (int j = 0; j < k; ++j) bb.col(j) = b.col(cols[static_cast<std::size_t>(j)]);
    Eigen::MatrixXd sb = bb.transpose() * overlap * bb;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sb);
    const auto& ev = es.eigenvalues();
    int kept = 0;
    for (int j = 0; j < k; ++j)
      if (ev(j) > drop_threshold) ++kept;
    out.n_dropped += k - kept;
    Eigen::MatrixXd cb;
    if (kept == k) {
      // symmetric Loewdin: S^(-1/2) within the block
      cb = bb * es.eigenvectors() * ev.cwiseSqrt().cwiseInverse().asDiagonal() *
           es.eigenvectors().transpose();
    } else {
      // canonical orthogonalization on the retained eigenvectors
      cb.resize(n, kept);
      int c = 0;
      for (int j = 0; j < k; ++j) {
        if (ev(j) <= drop_threshold) continue;
        cb.col(c++) = bb * es.eigenvectors().col(j) / std::sqrt(ev(j));
      }
    }
    for (int j = 0; j < cb.cols(); ++j) {
      columns.push_back(cb.col(j));
      out.labels.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key)});
    }
  }
  if (columns.empty()) throw std::runtime_error("orthonormalize: degenerate basis, empty span");
  out.coeff.resize(n, static_cast<int>(columns.size()));
  for (int j = 0; j < out.coeff.cols(); ++j) out.coeff.col(j) = columns[static_cast<std::size_t>(j)];
  return out;
}

}  // namespace sgdyn
