#pragma once

#include "snla/lie_algebra.hpp"

#include <string>
#include <vector>

namespace snla {

/// Bilinear product given by multiplication constants a(i,j,k) = coefficient
/// of e_k in e_i . e_j. No identity is assumed; classify() decides them.
class ProductTable {
 public:
  ProductTable() = default;
  explicit ProductTable(Tensor3 constants) : a_(std::move(constants)) {}
  static ProductTable zero(std::size_t n) { return ProductTable(Tensor3(n)); }
  /// (i, j, out) entries, 0-based, ordered pairs; repeated pairs accumulate.
  static ProductTable from_entries(std::size_t n,
                                   const std::vector<std::tuple<std::size_t, std::size_t, Vector>>& entries);

  std::size_t dim() const { return a_.dim(); }
  const Tensor3& constants() const { return a_; }
  Vector product_basis(std::size_t i, std::size_t j) const { return a_.slot(i, j); }

  friend bool operator==(const ProductTable&, const ProductTable&) = default;

 private:
  Tensor3 a_;
};

Vector multiply(const ProductTable& p, const Vector& x, const Vector& y);
/// (x.y).z - x.(y.z)
Vector associator(const ProductTable& p, const Vector& x, const Vector& y, const Vector& z);

/// Matrix of y -> x.y
Endomorphism left_mult(const ProductTable& p, const Vector& x);
/// Matrix of y -> y.x
Endomorphism right_mult(const ProductTable& p, const Vector& x);
inline Endomorphism left_mult(const ProductTable& p, std::size_t i) { return left_mult(p, unit_vector(p.dim(), i)); }
inline Endomorphism right_mult(const ProductTable& p, std::size_t i) { return right_mult(p, unit_vector(p.dim(), i)); }

enum class Identity {
  left_symmetric,     // ass(x,y,z) = ass(y,x,z)
  right_commutative,  // (x.y).z = (x.z).y
  left_commutative,   // x.(y.z) = y.(x.z)
  associative,        // ass(x,y,z) = 0
  commutative,        // x.y = y.x
};

std::string to_string(Identity id);

struct IdentityWitness {
  Identity identity;
  std::size_t i, j, k;  // k unused for commutativity
  Vector residual;
};

struct ProductClassification {
  bool left_symmetric = false;
  bool novikov = false;
  bool associative = false;
  bool lr = false;
  bool commutative = false;
  /// At most kMaxWitnesses per failed identity, in basis-triple order.
  std::vector<IdentityWitness> witnesses;

  static constexpr std::size_t kMaxWitnesses = 10;

  std::vector<IdentityWitness> witnesses_for(Identity id) const;
};

/// Decides every identity on all basis triples.
ProductClassification classify(const ProductTable& p);

/// [x,y] = x.y - y.x. Throws MathError when p is not left-symmetric.
LieAlgebra commutator_algebra(const ProductTable& p);

/// All right multiplications nilpotent. Only decided for Novikov products,
/// where nilpotency on a basis implies it everywhere; throws MathError otherwise.
bool is_complete_novikov(const ProductTable& p);

}  // namespace snla
