#pragma once

#include "snla/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace snla {

/// Dense row-major rational matrix. Endomorphisms act on column vectors:
/// column j holds the image of e_j.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);

  Matrix transpose() const;
  Scalar trace() const;
  bool is_zero() const;

  Vector operator*(const Vector& v) const;
  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator-() const;
  Matrix& operator+=(const Matrix& other);

  friend Matrix operator*(const Scalar& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  Matrix power(std::size_t k) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Commutator AB - BA.
Matrix commutator(const Matrix& a, const Matrix& b);

/// Bilinear evaluation x^T M y.
Scalar bilinear(const Matrix& m, const Vector& x, const Vector& y);

bool is_nilpotent(const Matrix& m);

/// Trilinear constants t(i,j,k), e.g. the coefficient of e_k in e_i * e_j.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t n) : n_(n), data_(n * n * n, Scalar(0)) {}

  std::size_t dim() const { return n_; }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n_ + j) * n_ + k]; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * n_ + j) * n_ + k];
  }

  /// Output vector of the basis pair (i, j).
  Vector slot(std::size_t i, std::size_t j) const;
  void set_slot(std::size_t i, std::size_t j, const Vector& v);

  /// Bilinear evaluation sum_ij x_i y_j t(i,j,.).
  Vector apply(const Vector& x, const Vector& y) const;

  /// Matrix of y -> t(x, y).
  Matrix left(const Vector& x) const;
  /// Matrix of y -> t(y, x).
  Matrix right(const Vector& x) const;

  friend bool operator==(const Tensor3& a, const Tensor3& b) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> data_;
};

}  // namespace snla
