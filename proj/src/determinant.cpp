#include "sgdyn/determinant.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sgdyn {

DeterminantSpace build_space(const OrthonormalOrbitals& orbitals,
                             const HyperbolicCrossSpec* spec) {
  DeterminantSpace space;
  space.n_orbitals = orbitals.n_mo();
  for (int p = 0; p < space.n_orbitals; ++p)
    for (int q = p + 1; q < space.n_orbitals; ++q) {
      if (spec != nullptr) {
        const std::vector<int> l{orbitals.labels[static_cast<std::size_t>(p)].l,
                                 orbitals.labels[static_cast<std::size_t>(q)].l};
        if (!angular_member(l, *spec)) continue;
      }
      space.pairs.emplace_back(p, q);
    }
  return space;
}

Eigen::MatrixXd mo_one_electron(const Eigen::MatrixXd& ao, const OrthonormalOrbitals& orbitals) {
  return orbitals.coeff.transpose() * ao * orbitals.coeff;
}

namespace {

// Inverse of pair_index: flat -> (lo <= hi).
void decode_pair(std::int64_t flat, int& lo, int& hi) {
  auto h = static_cast<std::int64_t>((std::sqrt(8.0 * static_cast<double>(flat) + 1.0) - 1.0) / 2.0);
  while (h * (h + 1) / 2 > flat) --h;
  while ((h + 1) * (h + 2) / 2 <= flat) ++h;
  hi = static_cast<int>(h);
  lo = static_cast<int>(flat - h * (h + 1) / 2);
}

}  // namespace

ERITensor mo_eri(const ERITensor& ao, const OrthonormalOrbitals& orbitals) {
  const int n_ao = ao.size();
  const int n_mo = orbitals.n_mo();
  const Eigen::MatrixXd& c = orbitals.coeff;
  const std::int64_t npair_ao = static_cast<std::int64_t>(n_ao) * (n_ao + 1) / 2;
  const std::int64_t npair_mo = static_cast<std::int64_t>(n_mo) * (n_mo + 1) / 2;

  // First half transform: K[(pq), (cd)] = sum_ab C_ap C_bq (ab|cd).
  std::vector<double> k(static_cast<std::size_t>(npair_mo * npair_ao));
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t cd = 0; cd < npair_ao; ++cd) {
    int clo, chi;
    decode_pair(cd, clo, chi);
    Eigen::MatrixXd a(n_ao, n_ao);
    for (int i = 0; i < n_ao; ++i)
      for (int j = 0; j <= i; ++j) {
        const double v = ao(i, j, clo, chi);
        a(i, j) = v;
        a(j, i) = v;
      }
    const Eigen::MatrixXd m = c.transpose() * a * c;
    for (int p = 0; p < n_mo; ++p)
      for (int q = 0; q <= p; ++q)
        k[static_cast<std::size_t>(ERITensor::pair_index(q, p) * npair_ao + cd)] = m(p, q);
  }

  // Second half transform over the remaining AO pair.
  ERITensor out(n_mo);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t pq = 0; pq < npair_mo; ++pq) {
    Eigen::MatrixXd a(n_ao, n_ao);
    const double* row = &k[static_cast<std::size_t>(pq * npair_ao)];
    for (int i = 0; i < n_ao; ++i)
      for (int j = 0; j <= i; ++j) {
        const double v = row[ERITensor::pair_index(j, i)];
        a(i, j) = v;
        a(j, i) = v;
      }
    const Eigen::MatrixXd m = c.transpose() * a * c;
    for (int r = 0; r < n_mo; ++r)
      for (int s = 0; s <= r; ++s) {
        const std::int64_t rs = ERITensor::pair_index(s, r);
        if (rs <= pq) out.raw_at(pq * (pq + 1) / 2 + rs) = m(r, s);
      }
  }
  return out;
}

CIOperator::CIOperator(DeterminantSpace space, Eigen::MatrixXd one_body,
                       std::shared_ptr<const ERITensor> two_body, double identity_shift)
    : space_(std::move(space)), h_(std::move(one_body)), eri_(std::move(two_body)),
      shift_(identity_shift) {
  if (h_.rows() != space_.n_orbitals || h_.cols() != space_.n_orbitals)
    throw std::invalid_argument("CIOperator: one-body dimension mismatch");
  if (eri_ && eri_->size() != space_.n_orbitals)
    throw std::invalid_argument("CIOperator: two-body dimension mismatch");
}

double CIOperator::element(int row, int col) const {
  const auto [p, q] = space_.pairs[static_cast<std::size_t>(row)];
  const auto [r, s] = space_.pairs[static_cast<std::size_t>(col)];
  auto kd = [](int a, int b) { return a == b ? 1.0 : 0.0; };
  double v = kd(q, s) * h_(p, r) + kd(p, r) * h_(q, s) - kd(p, s) * h_(q, r) -
             kd(q, r) * h_(p, s);
  if (eri_) v += (*eri_)(p, r, q, s) - (*eri_)(p, s, q, r);
  if (row == col) v += shift_;
  return v;
}

CIVector CIOperator::apply(const CIVector& c) const {
  const int dim = space_.dim();
  if (c.size() != dim) throw std::invalid_argument("CIOperator::apply: dimension mismatch");
  if (dense_) {
    // two real symv passes instead of a mixed real/complex product
    const Eigen::VectorXd re = (*dense_).selfadjointView<Eigen::Lower>() * c.real().eval();
    const Eigen::VectorXd im = (*dense_).selfadjointView<Eigen::Lower>() * c.imag().eval();
    CIVector out(dim);
    out.real() = re;
    out.imag() = im;
    return out;
  }

  const int n = space_.n_orbitals;
  // Antisymmetric coefficient matrices (split into re/im) with
  // u = sum_ab X_ab phi_a(r1) phi_b(r2).
  Eigen::MatrixXd xr = Eigen::MatrixXd::Zero(n, n), xi = Eigen::MatrixXd::Zero(n, n);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int k = 0; k < dim; ++k) {
    const auto [p, q] = space_.pairs[static_cast<std::size_t>(k)];
    xr(p, q) = inv_sqrt2 * c(k).real();
    xr(q, p) = -xr(p, q);
    xi(p, q) = inv_sqrt2 * c(k).imag();
    xi(q, p) = -xi(p, q);
  }
  Eigen::MatrixXd yr = h_ * xr + xr * h_;
  Eigen::MatrixXd yi = h_ * xi + xi * h_;
  if (eri_) {
    // y2(a, b) = sum_cd (ac|bd) x(c, d): one pass over canonical quadruples,
    // scattering each stored value to its distinct permutation images.
    const std::vector<double>& w = eri_->raw();
    const std::int64_t npair = static_cast<std::int64_t>(n) * (n + 1) / 2;
    const int n_threads = std::max(1, static_cast<int>(std::min<std::int64_t>(4, npair / 256 + 1)));
    std::vector<Eigen::MatrixXd> bufr(static_cast<std::size_t>(n_threads),
                                      Eigen::MatrixXd::Zero(n, n));
    std::vector<Eigen::MatrixXd> bufi(static_cast<std::size_t>(n_threads),
                                      Eigen::MatrixXd::Zero(n, n));
#pragma omp parallel num_threads(n_threads)
    {
#ifdef _OPENMP
      const int tid = omp_get_thread_num();
#else
      const int tid = 0;
#endif
      Eigen::MatrixXd& tr = bufr[static_cast<std::size_t>(tid)];
      Eigen::MatrixXd& ti = bufi[static_cast<std::size_t>(tid)];
#pragma omp for schedule(dynamic, 512)
      for (std::int64_t ab = 0; ab < npair; ++ab) {
        int i, j;
        decode_pair(ab, i, j);
        const double* base = &w[static_cast<std::size_t>(ab * (ab + 1) / 2)];
        for (std::int64_t cd = 0; cd <= ab; ++cd) {
          const double v = base[cd];
          if (v == 0.0) continue;
          int kk, ll;
          decode_pair(cd, kk, ll);
          // side1 = {i, j}, side2 = {kk, ll}; images (a, c | b, d) meaning
          // y2(a, b) += v * x(c, d)
          int quads[8][4] = {{i, j, kk, ll}, {j, i, kk, ll}, {i, j, ll, kk}, {j, i, ll, kk},
                             {kk, ll, i, j}, {ll, kk, i, j}, {kk, ll, j, i}, {ll, kk, j, i}};
          int n_uniq = 0;
          int uniq[8][4];
          for (auto& qd : quads) {
            bool seen = false;
            for (int u = 0; u < n_uniq; ++u)
              if (uniq[u][0] == qd[0] && uniq[u][1] == qd[1] && uniq[u][2] == qd[2] &&
                  uniq[u][3] == qd[3]) {
                seen = true;
                break;
              }
            if (!seen) {
              uniq[n_uniq][0] = qd[0];
              uniq[n_uniq][1] = qd[1];
              uniq[n_uniq][2] = qd[2];
              uniq[n_uniq][3] = qd[3];
              ++n_uniq;
            }
          }
          for (int u = 0; u < n_uniq; ++u) {
            const int a = uniq[u][0], cc = uniq[u][1], b = uniq[u][2], dd = uniq[u][3];
            tr(a, b) += v * xr(cc, dd);
            ti(a, b) += v * xi(cc, dd);
          }
        }
      }
    }
    for (int t = 0; t < n_threads; ++t) {
      yr += bufr[static_cast<std::size_t>(t)];
      yi += bufi[static_cast<std::size_t>(t)];
    }
  }
  CIVector out(dim);
  const double sqrt2 = std::sqrt(2.0);
  for (int k = 0; k < dim; ++k) {
    const auto [p, q] = space_.pairs[static_cast<std::size_t>(k)];
    out(k) = sqrt2 * std::complex<double>(yr(p, q), yi(p, q));
  }
  if (shift_ != 0.0) out += shift_ * c;
  return out;
}

const Eigen::MatrixXd& CIOperator::dense() const {
  if (!dense_) {
    if (dim() > kDenseLimit)
      throw std::runtime_error("CIOperator: dense matrix requested beyond the dense limit");
    Eigen::MatrixXd m(dim(), dim());
#pragma omp parallel for schedule(dynamic, 16)
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j <= i; ++j) {
        m(i, j) = element(i, j);
        m(j, i) = m(i, j);
      }
    dense_ = std::move(m);
  }
  return *dense_;
}

CIOperator assemble_hamiltonian(const Eigen::MatrixXd& h_mo,
                                std::shared_ptr<const ERITensor> eri_mo,
                                DeterminantSpace space) {
  return CIOperator(std::move(space), h_mo, std::move(eri_mo), 0.0);
}

CIOperator h1_gram_operator(const Eigen::MatrixXd& t_mo, DeterminantSpace space) {
  return CIOperator(std::move(space), 2.0 * t_mo, nullptr, 1.0);
}

TruncationProjector::TruncationProjector(const DeterminantSpace& full,
                                         const DeterminantSpace& sub)
    : full_dim_(full.dim()) {
  if (full.n_orbitals != sub.n_orbitals)
    throw std::invalid_argument("TruncationProjector: orbital sets differ");
  std::map<std::pair<int, int>, int> index;
  for (int i = 0; i < full.dim(); ++i) index[full.pairs[static_cast<std::size_t>(i)]] = i;
  map_.reserve(sub.pairs.size());
  for (const auto& pq : sub.pairs) {
    const auto it = index.find(pq);
    if (it == index.end())
      throw std::invalid_argument("TruncationProjector: sub space is not nested in full space");
    map_.push_back(it->second);
  }
}

CIVector TruncationProjector::embed(const CIVector& sub_vec) const {
  if (sub_vec.size() != sub_dim())
    throw std::invalid_argument("TruncationProjector::embed: dimension mismatch");
  CIVector out = CIVector::Zero(full_dim_);
  for (int i = 0; i < sub_dim(); ++i) out(map_[static_cast<std::size_t>(i)]) = sub_vec(i);
  return out;
}

CIVector TruncationProjector::restrict(const CIVector& full_vec) const {
  if (full_vec.size() != full_dim_)
    throw std::invalid_argument("TruncationProjector::restrict: dimension mismatch");
  CIVector out(sub_dim());
  for (int i = 0; i < sub_dim(); ++i) out(i) = full_vec(map_[static_cast<std::size_t>(i)]);
  return out;
}

double h1_norm(const CIVector& c, const CIOperator& gram) {
  const std::complex<double> q = c.dot(gram.apply(c));
  return std::sqrt(std::max(0.0, q.real()));
}

double energy(const CIVector& c, const CIOperator& hamiltonian) {
  const double n2 = c.squaredNorm();
  if (n2 <= 0.0) throw std::invalid_argument("energy: zero vector");
  return c.dot(hamiltonian.apply(c)).real() / n2;
}

void write_ci_vector(std::ostream& os, const CIVector& c) {
  os.precision(17);
  os << c.size() << '\n';
  for (Eigen::Index i = 0; i < c.size(); ++i)
    os << i << ' ' << c(i).real() << ' ' << c(i).imag() << '\n';
}

CIVector read_ci_vector(std::istream& is) {
  Eigen::Index n = 0;
  is >> n;
  if (!is || n < 0) throw std::runtime_error("read_ci_vector: bad header");
  CIVector c(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::Index idx;
    double re, im;
    is >> idx >> re >> im;
    if (!is || idx != i) throw std::runtime_error("read_ci_vector: bad entry");
    c(i) = {re, im};
  }
  return c;
}

}  // namespace sgdyn
