#include "snla/linear.hpp"

#include <algorithm>
#include <string>

namespace snla {

RowEchelon row_reduce(Matrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pick = row;
    while (pick < m.rows() && m(pick, col) == 0) ++pick;
    if (pick == m.rows()) continue;
    if (pick != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pick, c), m(row, c));

    Scalar inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Scalar f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw InputError("determinant of a non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  Scalar det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pick = col;
    while (pick < n && a(pick, col) == 0) ++pick;
    if (pick == n) return 0;
    if (pick != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pick, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      Scalar f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  RowEchelon e = row_reduce(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size())
    throw InputError("solve: system has " + std::to_string(a.rows()) + " rows but right-hand side has " +
                     std::to_string(b.size()) + " entries");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  RowEchelon e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
  Vector x = zero_vector(n);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, n);
  return x;
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  std::vector<Vector> units;
  for (std::size_t i = 0; i < ambient_dim; ++i) units.push_back(unit_vector(ambient_dim, i));
  return echelonize(ambient_dim, units);
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_) throw InputError("vector does not live in the subspace's ambient space");
  // In echelon form the coefficient of basis row r is the pivot entry of v.
  Vector coeffs(dim());
  Vector residual = v;
  for (std::size_t r = 0; r < dim(); ++r) {
    coeffs[r] = v[pivots_[r]];
    if (coeffs[r] != 0) residual = residual - coeffs[r] * basis_[r];
  }
  if (!snla::is_zero(residual)) return std::nullopt;
  return coeffs;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vector& v) { return contains(v); });
}

Matrix Subspace::basis_matrix() const { return Matrix::from_columns(basis_, ambient_); }

Subspace echelonize(std::size_t ambient_dim, std::span<const Vector> vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient_dim)
      throw InputError("echelonize: vector of length " + std::to_string(v.size()) + " in ambient dimension " +
                       std::to_string(ambient_dim));
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  RowEchelon e = row_reduce(Matrix::from_rows(std::vector<Vector>(vectors.begin(), vectors.end()), ambient_dim));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) s.basis_.push_back(e.reduced.row(r));
  s.pivots_ = e.pivots;
  return s;
}

Subspace kernel(const Matrix& m) {
  const std::size_t n = m.cols();
  RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> gens;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(n);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    gens.push_back(std::move(v));
  }
  return echelonize(n, gens);
}

Subspace span_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InputError("span_sum: ambient dimensions differ");
  std::vector<Vector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return echelonize(a.ambient_dim(), all);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InputError("intersection: ambient dimensions differ");
  const std::size_t n = a.ambient_dim();
  // Solve sum_i s_i a_i - sum_j t_j b_j = 0 and map the s-part back.
  Matrix stacked(n, a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) stacked.set_column(i, a.basis()[i]);
  for (std::size_t j = 0; j < b.dim(); ++j) stacked.set_column(a.dim() + j, -b.basis()[j]);
  Subspace rel = kernel(stacked);
  std::vector<Vector> gens;
  for (const auto& r : rel.basis()) {
    Vector v = zero_vector(n);
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (r[i] != 0) v += r[i] * a.basis()[i];
    gens.push_back(std::move(v));
  }
  return echelonize(n, gens);
}

QuotientMap quotient_map(std::size_t ambient_dim, const Subspace& s) {
  if (s.ambient_dim() != ambient_dim) throw InputError("quotient_map: subspace lives in a different space");
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto p : s.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> complement;
  for (std::size_t i = 0; i < ambient_dim; ++i)
    if (!is_pivot[i]) complement.push_back(i);

  const std::size_t q = complement.size();
  QuotientMap out{Matrix(q, ambient_dim), Matrix(ambient_dim, q)};
  // v = sum_r v[p_r] b_r + sum_a t_a e_{c_a}; reading off t_a gives the projection.
  for (std::size_t a = 0; a < q; ++a) {
    out.section(complement[a], a) = 1;
    out.projection(a, complement[a]) = 1;
    for (std::size_t r = 0; r < s.dim(); ++r) out.projection(a, s.pivots()[r]) = -s.basis()[r][complement[a]];
  }
  return out;
}

}  // namespace snla
