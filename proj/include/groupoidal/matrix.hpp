#ifndef GROUPOIDAL_MATRIX_HPP
#define GROUPOIDAL_MATRIX_HPP

#include <complex>
#include <vector>

namespace groupoidal {

using cplx = std::complex<double>;

// Dense complex matrix, row-major. Sizes in this project stay tiny
// (fibers of dimension <= ~50), so plain loops are all we need here;
// factorizations live in linalg.hpp.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static CMatrix identity(int n);
  static CMatrix zero(int rows, int cols) { return CMatrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  cplx& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const cplx& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  const std::vector<cplx>& data() const { return a_; }
  std::vector<cplx>& data() { return a_; }

  CMatrix operator*(const CMatrix& o) const;
  CMatrix operator+(const CMatrix& o) const;
  CMatrix operator-(const CMatrix& o) const;
  CMatrix operator*(cplx s) const;
  CMatrix adjoint() const;

  bool same_shape(const CMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }
  bool operator==(const CMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  // Largest entry magnitude; the norm used by every tolerance check.
  double max_abs() const;
  static double max_abs_diff(const CMatrix& a, const CMatrix& b);

  // ||A*A - I||_max
  double unitarity_defect() const;

  CMatrix block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const CMatrix& b);

  // Frobenius inner product <A,B> = sum conj(A_ij) B_ij.
  static cplx dot(const CMatrix& a, const CMatrix& b);
  double frobenius() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<cplx> a_;
};

}  // namespace groupoidal

#endif
