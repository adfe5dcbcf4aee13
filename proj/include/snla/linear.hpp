#pragma once

#include "snla/matrix.hpp"

#include <optional>
#include <span>
#include <vector>

namespace snla {

/// Reduced row-echelon form with the pivot column of each nonzero row.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

RowEchelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);
Scalar determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// Some x with A x = b, or nullopt when inconsistent. Free variables are set
/// to zero, so the answer is the unique one under full column rank and the
/// minimal-support echelon representative otherwise.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// A linear subspace stored as a basis in reduced row-echelon form. Two
/// subspaces are equal iff their bases are equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static Subspace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// Coefficients of v in the echelon basis, or nullopt when v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;

  /// Basis vectors as the columns of an ambient_dim x dim matrix.
  Matrix basis_matrix() const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  friend Subspace echelonize(std::size_t, std::span<const Vector>);
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Span of the given vectors in canonical echelon form.
Subspace echelonize(std::size_t ambient_dim, std::span<const Vector> vectors);

/// Null space of m as a subspace of K^{cols}.
Subspace kernel(const Matrix& m);

Subspace span_sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

/// projection: (n - dim S) x n with kernel S; section: n x (n - dim S) with
/// projection * section = identity. The complement is spanned by the
/// non-pivot coordinate vectors in increasing order.
struct QuotientMap {
  Matrix projection;
  Matrix section;
};

QuotientMap quotient_map(std::size_t ambient_dim, const Subspace& s);

}  // namespace snla
