#pragma once

#include "snla/symplectic.hpp"

#include <optional>
#include <vector>

namespace snla {

/// Left-invariant connection at the identity: nabla_{e_i} e_j = sum_k gamma(i,j,k) e_k.
struct Connection {
  Tensor3 gamma;

  std::size_t dim() const { return gamma.dim(); }
  /// Matrix of y -> nabla_x y.
  Matrix along(const Vector& x) const { return gamma.left(x); }
  Matrix along(std::size_t i) const { return gamma.left(unit_vector(dim(), i)); }
  Vector apply(const Vector& x, const Vector& y) const { return gamma.apply(x, y); }
  friend bool operator==(const Connection&, const Connection&) = default;
};

/// nabla_x y = x.y. Refuses non-left-symmetric products; torsion-freeness and
/// flatness are re-verified.
Connection affine_connection(const ProductTable& p);

/// T(x,y) = nabla_x y - nabla_y x - [x,y]
Tensor3 torsion(const Connection& c, const LieAlgebra& lie);
bool is_torsion_free(const Connection& c, const LieAlgebra& lie);

/// omega(nabla_x y, z) + omega(y, nabla_x z) = 0 on all basis triples.
bool is_parallel(const Connection& c, const BilinearForm& omega);

/// nabla + (N(x,y) + N(y,x))/3, where omega(N(x,y), z) = -omega(nabla_x y, z) - omega(y, nabla_x z).
Connection symplectize(const Connection& c, const LieAlgebra& lie, const BilinearForm& omega);

/// nabla_x y = (ad_x y - ad_x^* y)/3 with the symplectic adjoint.
Connection symplectic_connection(const LieAlgebra& lie, const BilinearForm& omega);

/// K(x,y) = [nabla_x, nabla_y] - nabla_[x,y], stored per basis pair.
class Curvature {
 public:
  Curvature(std::size_t n, std::vector<Matrix> blocks) : n_(n), blocks_(std::move(blocks)) {}
  std::size_t dim() const { return n_; }
  const Matrix& at(std::size_t i, std::size_t j) const { return blocks_[i * n_ + j]; }
  bool is_zero() const;

 private:
  std::size_t n_;
  std::vector<Matrix> blocks_;
};

Curvature curvature(const Connection& c, const LieAlgebra& lie);
bool is_flat(const Connection& c, const LieAlgebra& lie);

/// ric(x,y) = tr(z -> K(x,z) y)
BilinearForm ricci(const Connection& c, const LieAlgebra& lie);

struct CompletenessReport {
  bool complete = false;        ///< every R_x nilpotent
  bool nilpotent = false;
  bool agreement = false;       ///< complete == nilpotent
  bool bi_invariant = false;    ///< associated product associative

  /// L_x o ad_x = ad_x o L_x = 0 for every basis x.
  bool left_ad_vanishes = false;
  /// R_x^k = ad_x^k + (-1)^k L_x^k for basis x and 1 <= k <= dim.
  bool printed_power_identity = false;
  /// R_x^k = L_x^k + (-1)^k ad_x^k for basis x and 1 <= k <= dim.
  bool corrected_power_identity = false;
  /// First failing (basis index, k) of the printed identity.
  std::optional<std::pair<std::size_t, std::size_t>> printed_witness;
};

/// Throws MathError when (lie, omega) is not an SNLA.
CompletenessReport completeness_and_biinvariance(const LieAlgebra& lie, const BilinearForm& omega);

}  // namespace snla
