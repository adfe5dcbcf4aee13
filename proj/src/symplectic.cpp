#include "snla/symplectic.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace snla {

namespace {

// Independent post-check of the solved table. u[i][j][k] = omega(e_i.e_j, e_k); omega is skew, so
// omega(e_i, e_k.e_j) = -u[k][j][i]. Returns the classification so callers need not recompute it.
ProductClassification verify_associated(const LieAlgebra& lie, const BilinearForm& omega, const ProductTable& p) {
  const std::size_t n = lie.dim();
  const Matrix wt = omega.matrix().transpose();
  std::vector<std::vector<Vector>> u(n, std::vector<Vector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) u[i][j] = wt * p.product_basis(i, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (p.product_basis(i, j) - p.product_basis(j, i) != lie.bracket_basis(i, j))
        throw std::logic_error("associated_product: x.y - y.x != [x,y]");
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& xy_z = u[i][j][k];
        if (xy_z != -u[k][j][i]) throw std::logic_error("associated_product: omega(x.y,z) != omega(x,z.y)");
        if (xy_z + u[j][k][i] + u[k][i][j] != 0) throw std::logic_error("associated_product: cyclic identity fails");
      }
    }
  ProductClassification c = classify(p);
  if (!c.left_symmetric) throw std::logic_error("associated_product: result is not left-symmetric");
  return c;
}

std::pair<ProductTable, ProductClassification> solve_associated(const LieAlgebra& lie, const BilinearForm& omega) {
  const std::size_t n = lie.dim();
  JacobiReport jac = check_jacobi(lie);
  if (!jac.ok) throw MathError("associated_product: refused, jacobi identity fails");
  SymplecticReport sym = is_symplectic(lie, omega);
  if (!sym.ok()) throw MathError("associated_product: refused, form fails axiom '" + sym.failure() + "'");

  // sum_m p_m W(m,k) = -omega(e_j, [e_i, e_k])  <=>  W^T p = rhs
  const Matrix& w = omega.matrix();
  Matrix wt_inv = *inverse(w.transpose());
  Tensor3 a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector rhs(n);
      for (std::size_t k = 0; k < n; ++k) rhs[k] = -omega(unit_vector(n, j), lie.bracket_basis(i, k));
      a.set_slot(i, j, wt_inv * rhs);
    }
  ProductTable p(std::move(a));
  ProductClassification c = verify_associated(lie, omega, p);
  return {std::move(p), std::move(c)};
}

}  // namespace

ProductTable associated_product(const LieAlgebra& lie, const BilinearForm& omega) {
  return solve_associated(lie, omega).first;
}

bool SnlaReport::consistent() const {
  if (!theorem1_consistent) return false;
  for (const auto& f : {derived_isotropic, two_step_solvable, lr_iff_two_step, right_mult_of_brackets_vanishes,
                        nilpotency_bound})
    if (f.has_value() && !*f) return false;
  return true;
}

SnlaReport snla_report(const LieAlgebra& lie, const BilinearForm& omega) {
  auto [p, classification] = solve_associated(lie, omega);
  SnlaReport r;
  r.classification = std::move(classification);
  r.is_snla = r.classification.novikov;
  r.theorem1_consistent = r.classification.novikov == r.classification.associative;
  r.dim = lie.dim();

  Subspace derived = derived_subalgebra(lie);
  r.derived_dim = derived.dim();
  r.nilpotency_step = nilpotency_step(lie);
  r.solvability_step = solvability_step(lie);

  if (!r.is_snla) return r;

  r.derived_isotropic = is_isotropic(omega, derived);
  r.two_step_solvable = bracket_span(lie, derived, derived).is_zero();
  bool two_step_nilpotent = r.nilpotency_step.has_value() && *r.nilpotency_step <= 2;
  r.lr_iff_two_step = r.classification.lr == two_step_nilpotent;

  bool vanishes = true;
  for (std::size_t i = 0; i < lie.dim() && vanishes; ++i)
    for (std::size_t j = i + 1; j < lie.dim(); ++j)
      if (!right_mult(p, lie.bracket_basis(i, j)).matrix().is_zero()) {
        vanishes = false;
        break;
      }
  r.right_mult_of_brackets_vanishes = vanishes;

  if (r.nilpotency_step) {
    std::size_t p_step = *r.nilpotency_step;
    // dim D(g) + 1 <= dim/2 + 1  <=>  2 dim D(g) <= dim
    r.nilpotency_bound = p_step <= r.derived_dim + 1 && 2 * r.derived_dim <= r.dim;
  }
  return r;
}

}  // namespace snla
