#include "clg/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace clg {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

bool Matrix::all_finite() const {
  for (double v : data_)
    if (!std::isfinite(v)) return false;
  return true;
}

static void check_mul_shapes(const Matrix& a, const Matrix& b, std::size_t a_cols,
                             std::size_t b_rows) {
  if (a_cols != b_rows)
    fail("matmul: incompatible shapes " + a.shape_str() + " and " + b.shape_str());
}

void matmul_into(Matrix& c, const Matrix& a, const Matrix& b) {
  check_mul_shapes(a, b, a.cols(), b.rows());
  const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
  std::fill(c.vec().begin(), c.vec().end(), 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    const double* arow = a.row(i);
    double* crow = c.row(i);
    for (std::size_t p = 0; p < k; ++p) {
      const double aip = arow[p];
      const double* brow = b.row(p);
      for (std::size_t j = 0; j < n; ++j) crow[j] += aip * brow[j];
    }
  }
}

void matmul_nt_into(Matrix& c, const Matrix& a, const Matrix& b) {
  check_mul_shapes(a, b, a.cols(), b.cols());
  const std::size_t m = a.rows(), k = a.cols(), n = b.rows();
  for (std::size_t i = 0; i < m; ++i) {
    const double* arow = a.row(i);
    double* crow = c.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      const double* brow = b.row(j);
      double acc = 0.0;
      for (std::size_t p = 0; p < k; ++p) acc += arow[p] * brow[p];
      crow[j] = acc;
    }
  }
}

void matmul_tn_into(Matrix& c, const Matrix& a, const Matrix& b) {
  check_mul_shapes(a, b, a.rows(), b.rows());
  const std::size_t m = a.cols(), k = a.rows(), n = b.cols();
  std::fill(c.vec().begin(), c.vec().end(), 0.0);
  for (std::size_t p = 0; p < k; ++p) {
    const double* arow = a.row(p);
    const double* brow = b.row(p);
    for (std::size_t i = 0; i < m; ++i) {
      const double api = arow[i];
      double* crow = c.row(i);
      for (std::size_t j = 0; j < n; ++j) crow[j] += api * brow[j];
    }
  }
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  check_mul_shapes(a, b, a.cols(), b.rows());
  Matrix c(a.rows(), b.cols());
  matmul_into(c, a, b);
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

static void check_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(std::string(op) + ": shape mismatch " + a.shape_str() + " vs " + b.shape_str());
}

Matrix add(const Matrix& a, const Matrix& b) {
  check_same_shape(a, b, "add");
  Matrix c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c.vec()[i] += b.vec()[i];
  return c;
}

Matrix sub(const Matrix& a, const Matrix& b) {
  check_same_shape(a, b, "sub");
  Matrix c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c.vec()[i] -= b.vec()[i];
  return c;
}

Matrix scale(const Matrix& a, double s) {
  Matrix c = a;
  for (double& v : c.vec()) v *= s;
  return c;
}

void axpy(Matrix& y, double alpha, const Matrix& x) {
  check_same_shape(y, x, "axpy");
  for (std::size_t i = 0; i < y.size(); ++i) y.vec()[i] += alpha * x.vec()[i];
}

double frobenius(const Matrix& a, const Matrix& b) {
  check_same_shape(a, b, "frobenius");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a.vec()[i] * b.vec()[i];
  return acc;
}

double frobenius_norm(const Matrix& a) { return std::sqrt(frobenius(a, a)); }

double norm1(const Matrix& a) {
  double best = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) col += std::fabs(a(i, j));
    best = std::max(best, col);
  }
  return best;
}

Matrix solve_lu(const Matrix& a, const Matrix& b) {
  require(a.rows() == a.cols(), "solve_lu: matrix not square: " + a.shape_str());
  require(a.rows() == b.rows(),
          "solve_lu: rhs rows mismatch " + a.shape_str() + " vs " + b.shape_str());
  const std::size_t n = a.rows();
  Matrix lu = a;
  std::vector<std::size_t> piv(n);
  for (std::size_t i = 0; i < n; ++i) piv[i] = i;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::fabs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::fabs(lu(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    require(best > 0.0, "solve_lu: singular matrix at pivot " + std::to_string(k));
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(p, j));
      std::swap(piv[k], piv[p]);
    }
    const double inv = 1.0 / lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = lu(i, k) * inv;
      lu(i, k) = f;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
    }
  }

  Matrix x(n, b.cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) = b(piv[i], j);
  // forward substitution with unit lower triangle
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = lu(i, k);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) -= f * x(k, j);
    }
  // back substitution
  for (std::size_t k = n; k-- > 0;) {
    const double inv = 1.0 / lu(k, k);
    for (std::size_t j = 0; j < x.cols(); ++j) x(k, j) *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      const double f = lu(i, k);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) -= f * x(k, j);
    }
  }
  return x;
}

}  // namespace clg
