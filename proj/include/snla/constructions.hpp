#pragma once

#include "snla/symplectic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace snla {

/// A covector on g, evaluated by the dot product with its coefficients.
struct OneForm {
  Vector coefficients;

  std::size_t dim() const { return coefficients.size(); }
  Scalar operator()(const Vector& x) const { return dot(coefficients, x); }
  friend bool operator==(const OneForm&, const OneForm&) = default;
};

/// Data of a central symplectic oxidation: derivation phi, one-form lambda
/// with omega_{phi,phi}(x,y) = -lambda([x,y]), and optionally the element zeta
/// with lambda = omega(zeta, .).
struct OxidationData {
  Endomorphism phi;
  OneForm lambda;
  std::optional<Vector> zeta;
  std::string xi_label = "xi";
  std::string h_label = "h";
};

/// A symplectic Lie algebra.
struct SymplecticPair {
  LieAlgebra lie;
  BilinearForm omega;
};

// ---- cotangent -------------------------------------------------------------

struct CotangentResult {
  LieAlgebra lie;           ///< basis (eps^1..eps^n, e_1..e_n)
  BilinearForm omega;       ///< omega((a,x),(b,y)) = b(x) - a(y)
  ProductTable expected;    ///< (a,x).(b,y) = (-ad_x^t b + r_y^t a, x.y)
};

/// h* x_l h for a left-symmetric h. Throws MathError for non-left-symmetric input.
CotangentResult cotangent(const ProductTable& h);

// ---- derivation products ---------------------------------------------------

/// x * y = x.D(y) on a commutative associative algebra with derivation D.
ProductTable derivation_product(const ProductTable& algebra, const Endomorphism& d);

/// e_i.e_j.D^2(e_k) = 0 on all basis triples.
bool check_square_condition(const ProductTable& algebra, const Endomorphism& d);

// ---- reduction -------------------------------------------------------------

struct Reduction {
  LieAlgebra lie;
  BilinearForm omega;
  Subspace ideal;
  Subspace orthogonal;
  /// n x q: column a is the representative in g of the a-th reduced basis vector.
  Matrix lift;
  /// q x n: coordinates in the reduced basis; defined on the orthogonal, kills the ideal.
  Matrix projection;
};

/// The quotient ideal^perp / ideal with the induced bracket and form.
/// Refuses non-ideals and non-isotropic subspaces with a witness.
Reduction reduce(const LieAlgebra& lie, const BilinearForm& omega, const Subspace& ideal);

// ---- oxidation -------------------------------------------------------------

/// omega_phi(x,y) = omega(phi x, y) + omega(x, phi y)
BilinearForm omega_phi(const BilinearForm& omega, const Endomorphism& phi);
/// omega_{phi,phi}(x,y) = omega_phi(phi x, y) + omega_phi(x, phi y)
BilinearForm omega_phi_phi(const BilinearForm& omega, const Endomorphism& phi);

/// Some lambda with omega_{phi,phi}(e_i,e_j) = -lambda([e_i,e_j]) (free variables
/// zero), or nullopt when the obstruction does not vanish.
std::optional<OneForm> solve_oxidation_form(const LieAlgebra& lie, const BilinearForm& omega,
                                            const Endomorphism& phi);

/// Whether lambda solves the defining system omega_{phi,phi}(x,y) = -lambda([x,y]).
bool solves_oxidation_system(const LieAlgebra& lie, const BilinearForm& omega, const Endomorphism& phi,
                             const OneForm& lambda);

/// Basis (xi, e_1..e_n, h):
///   [x,y] -> [x,y] + omega_phi(x,y) h,  [xi,x] = phi(x) + lambda(x) h,  Omega(xi,h) = 1.
SymplecticPair oxidize(const LieAlgebra& lie, const BilinearForm& omega, const OxidationData& data);

/// Audit of the sign attached to the candidate one-form x -> omega(-zeta, x)
/// for a pair (phi, zeta) with ad_zeta = phi^2 and phi phi* = 0.
struct ZetaCandidateAudit {
  bool hypotheses_hold = false;
  OneForm candidate;                 ///< x -> omega(-zeta, x)
  bool solves_defining_sign = false; ///< omega_{phi,phi}(x,y) = -candidate([x,y])
  bool solves_opposite_sign = false; ///< omega_{phi,phi}(x,y) = +candidate([x,y])
  bool zeta_form_solves = false;     ///< x -> omega(zeta, x) solves the defining system
};

ZetaCandidateAudit audit_zeta_candidate(const LieAlgebra& lie, const BilinearForm& omega, const Endomorphism& phi,
                                        const Vector& zeta);

struct ConditionCheck {
  std::string name;
  bool holds = true;
  /// Basis index of the first failing x, when the condition is quantified over x.
  std::optional<std::size_t> witness;
};

/// Sufficient conditions for the oxidation of an SNLA along (phi, lambda =
/// omega(zeta, .)) to be an SNLA, checked next to a direct SNLA check of the
/// actual oxidation.
struct OxidationConditionsReport {
  ConditionCheck phi_left;            ///< phi o L_x = ad_x o phi*
  ConditionCheck left_variant;        ///< L_x = ad_x o phi*   (proof-line reading)
  ConditionCheck right_phi_star;      ///< R_x o phi* = L_{phi*(x)}
  ConditionCheck right_commutes;      ///< R_x o (phi+phi*) = (phi+phi*) o R_x
  ConditionCheck phi_phi_star;        ///< phi o phi* = 0
  ConditionCheck ad_zeta;             ///< ad_zeta = phi^2
  ConditionCheck zeta_in_kernel;      ///< phi(zeta) = 0

  bool conditions_hold = false;       ///< all of the above except left_variant
  bool obstruction_vanishes = false;  ///< lambda = omega(zeta, .) solves the defining system
  std::optional<bool> oxidation_is_snla;
  /// conditions_hold while the oxidation fails to be an SNLA (or is not even a Lie algebra).
  bool divergence = false;

  std::vector<ConditionCheck> checks() const;
};

/// Throws MathError when (lie, omega) is not an SNLA or phi is not a derivation.
OxidationConditionsReport oxidation_conditions(const LieAlgebra& lie, const BilinearForm& omega,
                                               const Endomorphism& phi, const Vector& zeta);

struct OxidationDecomposition {
  Reduction reduced;
  OxidationData data;
  Vector h;
  Vector xi;
  /// Columns (xi, lifts of the reduced basis, h).
  Matrix adapted_basis;
};

/// Writes an SNLA with non-trivial center as the central oxidation of its
/// reduction by the first central echelon line: phi = ad_xi on the quotient,
/// lambda(x) = omega(xi, [xi, x]). Throws MathError when the center is trivial.
OxidationDecomposition oxidation_decompose(const LieAlgebra& lie, const BilinearForm& omega);

/// Successive reductions down to dimension 0. Each step uses the first line
/// from ideal_lines(); when there is none, the derived algebra.
struct ReductionChain {
  std::vector<SymplecticPair> stages;  ///< stages.front() is the input, stages.back() has dim 0
  std::vector<Subspace> ideals;        ///< ideals[k] reduces stages[k] to stages[k+1]
};

ReductionChain reduce_completely(const LieAlgebra& lie, const BilinearForm& omega);

/// (L, omega) rewritten in the given basis (columns).
SymplecticPair in_basis(const LieAlgebra& lie, const BilinearForm& omega, const Matrix& basis);

// ---- irreducible family ----------------------------------------------------

/// Basis (f_1, fbar_1, ..., f_h, fbar_h, e_{1,1}, e_{2,1}, ..., e_{1,m}, e_{2,m}):
///   [f_i, e_{1,k}] = -lam(i,k) e_{2,k},  [f_i, e_{2,k}] = lam(i,k) e_{1,k}
/// and likewise for fbar_i with lambar; omega = sum f^i ^ fbar^i + sum e^{1,k} ^ e^{2,k}.
SymplecticPair irreducible_family(std::size_t h, std::size_t m, const Matrix& lambda, const Matrix& lambda_bar);

}  // namespace snla
