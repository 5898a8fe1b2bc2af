#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace clg {

[[noreturn]] inline void fail(const std::string& msg) { throw std::runtime_error(msg); }

inline void require(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

// Dense row-major matrix of doubles. The one numeric carrier used everywhere.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    require(data_.size() == rows_ * cols_, "Matrix: data length " + std::to_string(data_.size()) +
                                               " does not match shape " + shape_str());
  }

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  double* row(std::size_t r) { return data_.data() + r * cols_; }
  const double* row(std::size_t r) const { return data_.data() + r * cols_; }
  std::vector<double>& vec() { return data_; }
  const std::vector<double>& vec() const { return data_; }

  bool all_finite() const;
  std::string shape_str() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

// c = a * b, allocating. Dimension mismatch is a hard error naming both shapes.
Matrix matmul(const Matrix& a, const Matrix& b);

// Preallocated variants used on hot paths. c is overwritten.
void matmul_into(Matrix& c, const Matrix& a, const Matrix& b);
void matmul_nt_into(Matrix& c, const Matrix& a, const Matrix& b);  // c = a * b^T
void matmul_tn_into(Matrix& c, const Matrix& a, const Matrix& b);  // c = a^T * b

Matrix transpose(const Matrix& a);
Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, double s);
void axpy(Matrix& y, double alpha, const Matrix& x);  // y += alpha * x

// Frobenius inner product sum_ij A_ij B_ij.
double frobenius(const Matrix& a, const Matrix& b);
double frobenius_norm(const Matrix& a);

// Induced 1-norm: max over columns of sum of absolute entries.
double norm1(const Matrix& a);

// Solves A X = B with partial-pivot LU. A square, non-singular.
Matrix solve_lu(const Matrix& a, const Matrix& b);

}  // namespace clg
