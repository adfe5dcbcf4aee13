#pragma once

#include "snla/linear.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace snla {

class ProductTable;

/// Square matrix acting on column vectors (column j = image of e_j).
class Endomorphism {
 public:
  Endomorphism() = default;
  explicit Endomorphism(Matrix m);
  static Endomorphism zero(std::size_t n) { return Endomorphism(Matrix(n, n)); }
  static Endomorphism identity(std::size_t n) { return Endomorphism(Matrix::identity(n)); }

  std::size_t dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  Vector operator()(const Vector& v) const { return m_ * v; }

  Endomorphism operator*(const Endomorphism& o) const { return Endomorphism(m_ * o.m_); }
  Endomorphism operator+(const Endomorphism& o) const { return Endomorphism(m_ + o.m_); }
  Endomorphism operator-(const Endomorphism& o) const { return Endomorphism(m_ - o.m_); }
  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  Matrix m_;
};

enum class FormKind { symmetric, skew, none };

/// omega(x, y) = x^T M y. e^{ij} is the form with M(i,j) = 1, M(j,i) = -1.
class BilinearForm {
 public:
  BilinearForm() = default;
  explicit BilinearForm(Matrix m);

  /// Sum of c * e^{ij} with 0-based indices.
  static BilinearForm two_form(std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, Scalar>>& terms);

  std::size_t dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  FormKind kind() const { return kind_; }
  Scalar operator()(const Vector& x, const Vector& y) const { return bilinear(m_, x, y); }
  Scalar at(std::size_t i, std::size_t j) const { return m_(i, j); }

  bool is_nondegenerate() const;
  friend bool operator==(const BilinearForm& a, const BilinearForm& b) { return a.m_ == b.m_; }

 private:
  Matrix m_;
  FormKind kind_ = FormKind::none;
};

/// Finite-dimensional Lie algebra given by structure constants c(i,j,k) = coefficient
/// of e_k in [e_i, e_j]. Antisymmetry is built in; Jacobi is checked on construction.
class LieAlgebra {
 public:
  LieAlgebra() = default;

  /// Throws MathError when the constants are not antisymmetric or violate Jacobi.
  explicit LieAlgebra(Tensor3 constants, std::vector<std::string> labels = {});

  /// Skips the Jacobi check (antisymmetry is still enforced). For testing check_jacobi.
  static LieAlgebra raw(Tensor3 constants, std::vector<std::string> labels = {});

  /// Builds from (i, j, out) entries, 0-based, with skew completion.
  static Tensor3 skew_constants(std::size_t n,
                                const std::vector<std::tuple<std::size_t, std::size_t, Vector>>& brackets);

  static LieAlgebra abelian(std::size_t n);

  std::size_t dim() const { return c_.dim(); }
  const Tensor3& constants() const { return c_; }
  const std::vector<std::string>& labels() const { return labels_; }

  Vector bracket(const Vector& x, const Vector& y) const;
  Vector bracket_basis(std::size_t i, std::size_t j) const { return c_.slot(i, j); }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.c_ == b.c_; }

 private:
  struct Unchecked {};
  LieAlgebra(Tensor3 constants, std::vector<std::string> labels, Unchecked);
  Tensor3 c_;
  std::vector<std::string> labels_;
};

std::vector<std::string> default_labels(std::size_t n);

Vector bracket(const LieAlgebra& lie, const Vector& x, const Vector& y);

struct JacobiViolation {
  std::size_t i, j, k;
  Vector residual;
};

struct JacobiReport {
  bool ok = true;
  std::vector<JacobiViolation> violating_triples;
};

/// Cyclic sum [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] over i<j<k.
JacobiReport check_jacobi(const LieAlgebra& lie);
JacobiReport check_jacobi(const Tensor3& constants);

struct SymplecticReport {
  bool skew = false;
  bool nondegenerate = false;
  bool cocycle = false;
  bool even_dim = false;
  std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> cocycle_witness;

  bool ok() const { return skew && nondegenerate && cocycle && even_dim; }
  /// Name of the first failing axiom, empty when ok.
  std::string failure() const;
};

SymplecticReport is_symplectic(const LieAlgebra& lie, const BilinearForm& omega);

Endomorphism ad(const LieAlgebra& lie, const Vector& x);
inline Endomorphism ad(const LieAlgebra& lie, std::size_t i) { return ad(lie, unit_vector(lie.dim(), i)); }

/// span{[a, b] : a in A, b in B}
Subspace bracket_span(const LieAlgebra& lie, const Subspace& a, const Subspace& b);

Subspace derived_subalgebra(const LieAlgebra& lie);

/// C^0 = g, C^k = [g, C^{k-1}], listed until the sequence stabilizes.
std::vector<Subspace> lower_central_series(const LieAlgebra& lie);
/// D^0 = g, D^k = [D^{k-1}, D^{k-1}], listed until the sequence stabilizes.
std::vector<Subspace> derived_series(const LieAlgebra& lie);

/// Smallest p with C^p = 0; nullopt when g is not nilpotent.
std::optional<std::size_t> nilpotency_step(const LieAlgebra& lie);
/// Smallest s with D^s = 0; nullopt when g is not solvable.
std::optional<std::size_t> solvability_step(const LieAlgebra& lie);

Subspace center(const LieAlgebra& lie);

bool is_ideal(const LieAlgebra& lie, const Subspace& s);
bool is_subalgebra(const LieAlgebra& lie, const Subspace& s);

/// f* with omega(f x, y) = omega(x, f* y). Throws MathError for degenerate omega.
Endomorphism symplectic_adjoint(const BilinearForm& omega, const Endomorphism& f);

/// Leibniz rule D[x,y] = [Dx,y] + [x,Dy] on all basis pairs.
bool is_derivation(const LieAlgebra& lie, const Endomorphism& d);
/// Leibniz rule D(x.y) = D(x).y + x.D(y) on all basis pairs.
bool is_derivation(const ProductTable& p, const Endomorphism& d);

BilinearForm killing_form(const LieAlgebra& lie);

/// {x : omega(x, s) = 0 for all s in S}. Throws MathError for degenerate omega.
Subspace orthogonal(const BilinearForm& omega, const Subspace& s);

bool is_isotropic(const BilinearForm& omega, const Subspace& s);

/// One-dimensional ideals: common eigenvectors of all ad(e_i) with rational
/// eigenvalues. A joint eigenspace of dimension > 1 contributes its echelon
/// basis lines. Sorted by pivot, then coordinatewise.
std::vector<Subspace> ideal_lines(const LieAlgebra& lie);

/// Coefficients of det(tI - A), lowest degree first.
std::vector<Scalar> characteristic_polynomial(const Matrix& a);
/// Distinct rational roots, ascending.
std::vector<Scalar> rational_roots(const std::vector<Scalar>& poly);

/// Structure constants of the same algebra in the basis given by the columns of b.
LieAlgebra change_basis(const LieAlgebra& lie, const Matrix& b);

/// Whether omega = d(alpha) for some one-form alpha, d(alpha)(x,y) = -alpha([x,y]).
std::optional<Vector> exact_primitive(const LieAlgebra& lie, const BilinearForm& omega);

}  // namespace snla
