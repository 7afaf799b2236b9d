#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "chopf/errors.hpp"

namespace chopf {

using cscalar = std::complex<double>;

/// Dense complex matrix with row-major storage. Values are immutable in
/// practice: all operations below return fresh matrices.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CMatrix identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cscalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cscalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<cscalar>& data() const { return data_; }

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(cscalar c);

  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cscalar> data_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(cscalar c, CMatrix a);
CMatrix operator*(CMatrix a, cscalar c);

/// Largest entry modulus (max-abs norm).
double max_abs(const CMatrix& a);

/// Max over entries of |a_ij - b_ij|. Throws DimensionMismatch on shape
/// disagreement. This is the residual metric used by every identity check.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// True when no entry is NaN or infinite.
bool all_finite(const CMatrix& a);

/// Kronecker product: block (i,j) of the result equals a(i,j)*b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Matrix exponential by scaled Taylor series: the argument is halved until
/// its max-abs norm is <= 0.5, the series is summed until the current term's
/// max-abs norm drops below tol*(1 + |sum|) (hard cap of 200 terms, then
/// NonConvergence), and the result is squared back up. Terminates exactly for
/// nilpotent input.
CMatrix matexp(const CMatrix& a, double tol = 1e-15);

/// Inverse by Gauss-Jordan elimination with partial pivoting. Throws Singular
/// when the selected pivot magnitude falls below 1e-14.
CMatrix inverse(const CMatrix& a);

/// Embed a two-leg operator x on V_p (x) V_q into V_1 (x) V_2 (x) V_3, acting
/// as the identity on the remaining leg. Legs are 1-based with p < q. Flat
/// indices are row-major: (i1,i2,i3) -> i1*d2*d3 + i2*d3 + i3.
CMatrix embed(const CMatrix& x, std::pair<int, int> legs,
              const std::array<std::size_t, 3>& dims);

/// Product on V_1 (x) V_2 that multiplies the first legs in *reverse* order
/// and the second legs directly: for pure tensors,
///   rev1_product(A1 (x) B1, A2 (x) B2) = (A2*A1) (x) (B1*B2).
/// In block form (d1 x d1 blocks of size d2), the (k,j) block of the result
/// is sum_i X(i,j)*Y(k,i). Identity is a two-sided unit; the product is
/// associative.
CMatrix rev1_product(const CMatrix& x, const CMatrix& y, std::size_t d1,
                     std::size_t d2);

/// Permutation matrix of the twist map V_1 (x) V_2 -> V_2 (x) V_1.
CMatrix swap_matrix(std::size_t d1, std::size_t d2);

}  // namespace chopf
