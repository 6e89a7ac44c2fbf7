#include "groupoidal/linalg.hpp"

#include <Eigen/Dense>
#include <random>
#include <stdexcept>

namespace groupoidal {

namespace {

using EMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

EMat to_eigen(const CMatrix& m) {
  EMat e(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

CMatrix from_eigen(const EMat& e) {
  CMatrix m(int(e.rows()), int(e.cols()));
  for (int i = 0; i < e.rows(); ++i)
    for (int j = 0; j < e.cols(); ++j) m(i, j) = e(i, j);
  return m;
}

// Column-stacking vec. vec(AM) = (M^T kron I) vec(A), vec(MA) = (I kron M) vec(A).
// Row r = i + d*j of the constraint block for [A, M] = AM - MA.
void append_commutator_rows(EMat& c, int row0, const CMatrix& m, int d) {
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      int r = row0 + i + d * j;
      // (AM)_{ij} = sum_k A_{ik} M_{kj}; column index of A_{ik} is i + d*k.
      for (int k = 0; k < d; ++k) {
        c(r, i + d * k) += m(k, j);
        c(r, k + d * j) -= m(i, k);
      }
    }
}

// Rows for T A - B T = 0 with T of shape rb x ra.
void append_intertwiner_rows(EMat& c, int row0, const CMatrix& a, const CMatrix& b,
                             int ra, int rb) {
  for (int i = 0; i < rb; ++i)
    for (int j = 0; j < ra; ++j) {
      int r = row0 + i + rb * j;
      for (int k = 0; k < ra; ++k) c(r, i + rb * k) += a(k, j);
      for (int k = 0; k < rb; ++k) c(r, k + rb * j) -= b(i, k);
    }
}

std::vector<CMatrix> nullspace_matrices(const EMat& c, int rows, int cols, double cutoff) {
  Eigen::JacobiSVD<EMat> svd(c, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  double scale = sv.size() ? std::max(1.0, sv(0)) : 1.0;
  std::vector<CMatrix> basis;
  for (int k = 0; k < svd.matrixV().cols(); ++k) {
    double s = k < sv.size() ? sv(k) : 0.0;
    if (s > cutoff * scale) continue;
    CMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = svd.matrixV()(i + rows * j, k);
    basis.push_back(std::move(m));
  }
  return basis;
}

double rng_real(std::mt19937_64& rng) {
  // Deterministic across standard libraries, unlike std distributions.
  return double(rng() >> 11) * (1.0 / 9007199254740992.0) * 2.0 - 1.0;
}

}  // namespace

std::vector<double> singular_values(const CMatrix& m) {
  Eigen::JacobiSVD<EMat> svd(to_eigen(m));
  std::vector<double> out(svd.singularValues().data(),
                          svd.singularValues().data() + svd.singularValues().size());
  return out;
}

double smallest_singular_value(const CMatrix& m) {
  auto sv = singular_values(m);
  return sv.empty() ? 0.0 : sv.back();
}

CMatrix unitary_polar(const CMatrix& t, double cutoff) {
  if (t.rows() != t.cols()) throw std::invalid_argument("unitary_polar: square input required");
  Eigen::JacobiSVD<EMat> svd(to_eigen(t), Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(sv.size() - 1) <= cutoff)
    throw std::domain_error("unitary_polar: numerically singular input");
  return from_eigen(svd.matrixU() * svd.matrixV().adjoint());
}

std::vector<CMatrix> commutant_basis(const std::vector<CMatrix>& mats, int dim, double cutoff) {
  for (const auto& m : mats)
    if (m.rows() != dim || m.cols() != dim)
      throw std::invalid_argument("commutant_basis: matrix dimension mismatch");
  int n = int(mats.size());
  EMat c = EMat::Zero(std::max(1, n) * dim * dim, dim * dim);
  for (int t = 0; t < n; ++t) append_commutator_rows(c, t * dim * dim, mats[t], dim);
  return nullspace_matrices(c, dim, dim, cutoff);
}

std::vector<CMatrix> intertwiner_basis(const std::vector<CMatrix>& a,
                                       const std::vector<CMatrix>& b, double cutoff) {
  if (a.size() != b.size())
    throw std::invalid_argument("intertwiner_basis: pair count mismatch");
  if (a.empty()) throw std::invalid_argument("intertwiner_basis: empty input");
  int ra = a[0].rows(), rb = b[0].rows();
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].rows() != ra || a[i].cols() != ra || b[i].rows() != rb || b[i].cols() != rb)
      throw std::invalid_argument("intertwiner_basis: inconsistent shapes");
  EMat c = EMat::Zero(int(a.size()) * ra * rb, ra * rb);
  for (size_t t = 0; t < a.size(); ++t)
    append_intertwiner_rows(c, int(t) * ra * rb, a[t], b[t], ra, rb);
  return nullspace_matrices(c, rb, ra, cutoff);
}

std::optional<CMatrix> invertible_in_span(const std::vector<CMatrix>& basis, double cutoff) {
  if (basis.empty()) return std::nullopt;
  if (basis[0].rows() != basis[0].cols()) return std::nullopt;
  auto try_combo = [&](const std::vector<cplx>& coef) -> std::optional<CMatrix> {
    CMatrix t = CMatrix::zero(basis[0].rows(), basis[0].cols());
    for (size_t i = 0; i < basis.size(); ++i) t = t + basis[i] * coef[i];
    if (smallest_singular_value(t) > cutoff) return t;
    return std::nullopt;
  };

  // Single basis elements first.
  for (size_t i = 0; i < basis.size(); ++i) {
    std::vector<cplx> coef(basis.size(), 0.0);
    coef[i] = 1.0;
    if (auto t = try_combo(coef)) return t;
  }
  // Small grid over the first few coordinates.
  const cplx grid[] = {0.0, 1.0, -1.0, cplx(0, 1), cplx(0, -1)};
  size_t k = std::min<size_t>(basis.size(), 4);
  size_t total = 1;
  for (size_t i = 0; i < k; ++i) total *= 5;
  for (size_t code = 1; code < total; ++code) {
    std::vector<cplx> coef(basis.size(), 0.0);
    size_t c = code;
    for (size_t i = 0; i < k; ++i) {
      coef[i] = grid[c % 5];
      c /= 5;
    }
    if (auto t = try_combo(coef)) return t;
  }
  // Fixed-seed random combinations.
  std::mt19937_64 rng(0x5eed5eed5eed5eedull);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<cplx> coef(basis.size());
    for (auto& v : coef) v = cplx(rng_real(rng), rng_real(rng));
    if (auto t = try_combo(coef)) return t;
  }
  return std::nullopt;
}

}  // namespace groupoidal
