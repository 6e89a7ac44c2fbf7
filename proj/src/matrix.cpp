#include "groupoidal/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace groupoidal {

CMatrix CMatrix::identity(int n) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("CMatrix: product shape mismatch");
  CMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      cplx aik = (*this)(i, k);
      if (aik == cplx(0.0)) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
    }
  return r;
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
  if (!same_shape(o)) throw std::invalid_argument("CMatrix: sum shape mismatch");
  CMatrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
  if (!same_shape(o)) throw std::invalid_argument("CMatrix: difference shape mismatch");
  CMatrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

CMatrix CMatrix::operator*(cplx s) const {
  CMatrix r = *this;
  for (auto& v : r.a_) v *= s;
  return r;
}

CMatrix CMatrix::adjoint() const {
  CMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : a_) m = std::max(m, std::abs(v));
  return m;
}

double CMatrix::max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("CMatrix: diff shape mismatch");
  double m = 0.0;
  for (size_t i = 0; i < a.a_.size(); ++i) m = std::max(m, std::abs(a.a_[i] - b.a_[i]));
  return m;
}

double CMatrix::unitarity_defect() const {
  if (rows_ != cols_) return 1.0;
  return max_abs_diff(adjoint() * (*this), identity(rows_));
}

CMatrix CMatrix::block(int r0, int c0, int nr, int nc) const {
  if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_)
    throw std::out_of_range("CMatrix: block out of range");
  CMatrix b(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void CMatrix::set_block(int r0, int c0, const CMatrix& b) {
  if (r0 < 0 || c0 < 0 || r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
    throw std::out_of_range("CMatrix: set_block out of range");
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

cplx CMatrix::dot(const CMatrix& a, const CMatrix& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("CMatrix: dot shape mismatch");
  cplx s = 0.0;
  for (size_t i = 0; i < a.a_.size(); ++i) s += std::conj(a.a_[i]) * b.a_[i];
  return s;
}

double CMatrix::frobenius() const {
  double s = 0.0;
  for (const auto& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

}  // namespace groupoidal
