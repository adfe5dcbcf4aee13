#include "snla/matrix.hpp"

#include <string>

namespace snla {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw InputError(what);
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require(r.size() == cols_, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == cols, "row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  require(v.size() == rows_, "column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Scalar Matrix::trace() const {
  require(is_square(), "trace of a non-square matrix");
  Scalar t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (s != 0) return false;
  return true;
}

Vector Matrix::operator*(const Vector& v) const {
  require(v.size() == cols_, "matrix-vector size mismatch");
  Vector out(rows_, Scalar(0));
  Scalar t;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c] == 0) continue;
    for (std::size_t r = 0; r < rows_; ++r)
      if ((*this)(r, c) != 0) {
        mpq_mul(t.get_mpq_t(), (*this)(r, c).get_mpq_t(), v[c].get_mpq_t());
        out[r] += t;
      }
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
  require(cols_ == other.rows_, "matrix product size mismatch");
  Matrix out(rows_, other.cols_);
  Scalar t;  // reused product buffer; gmpxx would allocate a temporary per term
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c)
        if (other(k, c) != 0) {
          mpq_mul(t.get_mpq_t(), a.get_mpq_t(), other(k, c).get_mpq_t());
          out(r, c) += t;
        }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
  Matrix out = *this;
  out += other;
  return out;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "matrix sum size mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix Matrix::operator-(const Matrix& other) const { return *this + (-other); }

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& s : out.data_) s = -s;
  return out;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix out = m;
  for (auto& x : out.data_) x *= s;
  return out;
}

Matrix Matrix::power(std::size_t k) const {
  require(is_square(), "power of a non-square matrix");
  Matrix out = identity(rows_);
  for (std::size_t i = 0; i < k; ++i) out = out * (*this);
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Scalar bilinear(const Matrix& m, const Vector& x, const Vector& y) { return dot(x, m * y); }

bool is_nilpotent(const Matrix& m) { return m.power(m.rows()).is_zero(); }

Vector Tensor3::slot(std::size_t i, std::size_t j) const {
  Vector v(n_);
  for (std::size_t k = 0; k < n_; ++k) v[k] = (*this)(i, j, k);
  return v;
}

void Tensor3::set_slot(std::size_t i, std::size_t j, const Vector& v) {
  require(v.size() == n_, "tensor slot length mismatch");
  for (std::size_t k = 0; k < n_; ++k) (*this)(i, j, k) = v[k];
}

Vector Tensor3::apply(const Vector& x, const Vector& y) const {
  require(x.size() == n_ && y.size() == n_, "tensor argument length mismatch");
  Vector out(n_, Scalar(0));
  Scalar w, t;
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j] == 0) continue;
      mpq_mul(w.get_mpq_t(), x[i].get_mpq_t(), y[j].get_mpq_t());
      for (std::size_t k = 0; k < n_; ++k)
        if ((*this)(i, j, k) != 0) {
          mpq_mul(t.get_mpq_t(), w.get_mpq_t(), (*this)(i, j, k).get_mpq_t());
          out[k] += t;
        }
    }
  }
  return out;
}

Matrix Tensor3::left(const Vector& x) const {
  Matrix m(n_, n_);
  for (std::size_t j = 0; j < n_; ++j) m.set_column(j, apply(x, unit_vector(n_, j)));
  return m;
}

Matrix Tensor3::right(const Vector& x) const {
  Matrix m(n_, n_);
  for (std::size_t j = 0; j < n_; ++j) m.set_column(j, apply(unit_vector(n_, j), x));
  return m;
}

}  // namespace snla
