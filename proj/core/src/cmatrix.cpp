#include "chopf/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace chopf {

namespace {

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(op) + ": " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
}

}  // namespace

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  require_same_shape(*this, o, "add");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  require_same_shape(*this, o, "subtract");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(cscalar c) {
  for (auto& v : data_) v *= c;
  return *this;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
CMatrix operator*(cscalar c, CMatrix a) { return a *= c; }
CMatrix operator*(CMatrix a, cscalar c) { return a *= c; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("multiply: " + std::to_string(a.cols()) + " vs " +
                            std::to_string(b.rows()));
  }
  CMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cscalar aik = a(i, k);
      if (aik == cscalar{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

double max_abs(const CMatrix& a) {
  double m = 0.0;
  for (const auto& v : a.data()) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

bool all_finite(const CMatrix& a) {
  for (const auto& v : a.data())
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const cscalar aij = a(i1, j1);
      if (aij == cscalar{}) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
          r(i1 * b.rows() + i2, j1 * b.cols() + j2) = aij * b(i2, j2);
    }
  return r;
}

CMatrix matexp(const CMatrix& a, double tol) {
  if (!a.is_square()) throw DimensionMismatch("matexp: matrix must be square");
  const std::size_t n = a.rows();

  double norm = max_abs(a);
  if (!std::isfinite(norm)) throw NonConvergence("matexp: non-finite input");

  int squarings = 0;
  while (norm > 0.5 && squarings < 60) {
    norm *= 0.5;
    ++squarings;
  }
  const CMatrix b = a * cscalar(std::ldexp(1.0, -squarings), 0.0);

  CMatrix sum = CMatrix::identity(n);
  CMatrix term = CMatrix::identity(n);
  bool converged = false;
  for (int k = 1; k <= 200; ++k) {
    term = term * b * cscalar(1.0 / k, 0.0);
    sum += term;
    if (max_abs(term) < tol * (1.0 + max_abs(sum))) {
      converged = true;
      break;
    }
  }
  if (!converged) throw NonConvergence("matexp: series cap (200 terms) reached");

  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum;
}

CMatrix inverse(const CMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("inverse: matrix must be square");
  const std::size_t n = a.rows();
  constexpr double pivot_floor = 1e-14;

  CMatrix work = a;
  CMatrix inv = CMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = std::abs(work(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double cand = std::abs(work(r, col));
      if (cand > best) {
        best = cand;
        pivot = r;
      }
    }
    if (best < pivot_floor) {
      throw Singular("inverse: pivot magnitude " + std::to_string(best) + " below 1e-14");
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const cscalar scale = 1.0 / work(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const cscalar f = work(r, col);
      if (f == cscalar{}) continue;
      for (std::size_t j = 0; j < n; ++j) {
        work(r, j) -= f * work(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

CMatrix embed(const CMatrix& x, std::pair<int, int> legs,
              const std::array<std::size_t, 3>& dims) {
  const int p = legs.first, q = legs.second;
  if (p < 1 || q > 3 || p >= q) throw DimensionMismatch("embed: legs must satisfy 1 <= p < q <= 3");
  const std::size_t dp = dims[static_cast<std::size_t>(p - 1)];
  const std::size_t dq = dims[static_cast<std::size_t>(q - 1)];
  if (x.rows() != dp * dq || x.cols() != dp * dq) {
    throw DimensionMismatch("embed: operand is " + std::to_string(x.rows()) + "x" +
                            std::to_string(x.cols()) + ", legs need " + std::to_string(dp * dq));
  }
  const int other = 6 - p - q;  // the leg carrying the identity
  const std::size_t total = dims[0] * dims[1] * dims[2];

  CMatrix r(total, total);
  std::array<std::size_t, 3> idx{}, jdx{};
  for (std::size_t row = 0; row < total; ++row) {
    idx[2] = row % dims[2];
    idx[1] = (row / dims[2]) % dims[1];
    idx[0] = row / (dims[1] * dims[2]);
    for (std::size_t col = 0; col < total; ++col) {
      jdx[2] = col % dims[2];
      jdx[1] = (col / dims[2]) % dims[1];
      jdx[0] = col / (dims[1] * dims[2]);
      if (idx[static_cast<std::size_t>(other - 1)] != jdx[static_cast<std::size_t>(other - 1)])
        continue;
      const std::size_t xr = idx[static_cast<std::size_t>(p - 1)] * dq + idx[static_cast<std::size_t>(q - 1)];
      const std::size_t xc = jdx[static_cast<std::size_t>(p - 1)] * dq + jdx[static_cast<std::size_t>(q - 1)];
      r(row, col) = x(xr, xc);
    }
  }
  return r;
}

CMatrix rev1_product(const CMatrix& x, const CMatrix& y, std::size_t d1, std::size_t d2) {
  const std::size_t n = d1 * d2;
  if (x.rows() != n || x.cols() != n || y.rows() != n || y.cols() != n) {
    throw DimensionMismatch("rev1_product: operands must be square of size d1*d2");
  }
  CMatrix r(n, n);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d1; ++j)
      for (std::size_t k = 0; k < d1; ++k)
        // block (k,j) += X(i,j) * Y(k,i)
        for (std::size_t a = 0; a < d2; ++a)
          for (std::size_t m = 0; m < d2; ++m) {
            const cscalar xv = x(i * d2 + a, j * d2 + m);
            if (xv == cscalar{}) continue;
            for (std::size_t c = 0; c < d2; ++c)
              r(k * d2 + a, j * d2 + c) += xv * y(k * d2 + m, i * d2 + c);
          }
  return r;
}

CMatrix swap_matrix(std::size_t d1, std::size_t d2) {
  CMatrix p(d1 * d2, d1 * d2);
  for (std::size_t i1 = 0; i1 < d1; ++i1)
    for (std::size_t i2 = 0; i2 < d2; ++i2) p(i2 * d1 + i1, i1 * d2 + i2) = 1.0;
  return p;
}

}  // namespace chopf
