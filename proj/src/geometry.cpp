#include "snla/geometry.hpp"

#include <stdexcept>

namespace snla {

namespace {

void require_sizes(const Connection& c, std::size_t n, const char* who) {
  if (c.dim() != n) throw InputError(std::string(who) + ": size mismatch");
}

}  // namespace

Connection affine_connection(const ProductTable& p) {
  LieAlgebra lie = commutator_algebra(p);
  Connection c{p.constants()};
  if (!is_torsion_free(c, lie)) throw std::logic_error("affine_connection: torsion does not vanish");
  if (!is_flat(c, lie)) throw std::logic_error("affine_connection: curvature does not vanish");
  return c;
}

Tensor3 torsion(const Connection& c, const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  require_sizes(c, n, "torsion");
  Tensor3 t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t.set_slot(i, j, c.gamma.slot(i, j) - c.gamma.slot(j, i) - lie.bracket_basis(i, j));
  return t;
}

bool is_torsion_free(const Connection& c, const LieAlgebra& lie) { return torsion(c, lie) == Tensor3(lie.dim()); }

bool is_parallel(const Connection& c, const BilinearForm& omega) {
  const std::size_t n = omega.dim();
  require_sizes(c, n, "is_parallel");
  for (std::size_t i = 0; i < n; ++i) {
    Matrix g = c.along(i);
    // omega(G y, z) + omega(y, G z) = y^T (G^T W + W G) z
    if (!(g.transpose() * omega.matrix() + omega.matrix() * g).is_zero()) return false;
  }
  return true;
}

Connection symplectize(const Connection& c, const LieAlgebra& lie, const BilinearForm& omega) {
  const std::size_t n = lie.dim();
  require_sizes(c, n, "symplectize");
  if (!is_torsion_free(c, lie)) throw MathError("symplectize: connection has torsion");
  std::optional<Matrix> wt_inv = inverse(omega.matrix().transpose());
  if (!wt_inv) throw MathError("symplectize: form is degenerate");

  Tensor3 nt(n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix g = c.along(i);
    // rhs(y, z) = -omega(G y, z) - omega(y, G z); N(x, y) = W^{-T} rhs(y, .)
    Matrix rhs = -(g.transpose() * omega.matrix() + omega.matrix() * g);
    for (std::size_t j = 0; j < n; ++j) nt.set_slot(i, j, *wt_inv * rhs.row(j));
  }
  Tensor3 out = c.gamma;
  const Scalar third(1, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.set_slot(i, j, out.slot(i, j) + third * (nt.slot(i, j) + nt.slot(j, i)));

  Connection result{std::move(out)};
  if (!is_torsion_free(result, lie)) throw std::logic_error("symplectize: result has torsion");
  if (!is_parallel(result, omega)) throw std::logic_error("symplectize: result is not parallel");
  return result;
}

Connection symplectic_connection(const LieAlgebra& lie, const BilinearForm& omega) {
  const std::size_t n = lie.dim();
  Tensor3 g(n);
  const Scalar third(1, 3);
  for (std::size_t i = 0; i < n; ++i) {
    Endomorphism a = ad(lie, i);
    Matrix m = third * (a.matrix() - symplectic_adjoint(omega, a).matrix());
    for (std::size_t j = 0; j < n; ++j) g.set_slot(i, j, m.column(j));
  }
  Connection c{std::move(g)};
  if (!is_torsion_free(c, lie)) throw std::logic_error("symplectic_connection: torsion does not vanish");
  if (!is_parallel(c, omega)) throw std::logic_error("symplectic_connection: form is not parallel");
  return c;
}

bool Curvature::is_zero() const {
  for (const auto& m : blocks_)
    if (!m.is_zero()) return false;
  return true;
}

Curvature curvature(const Connection& c, const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  require_sizes(c, n, "curvature");
  std::vector<Matrix> g;
  for (std::size_t i = 0; i < n; ++i) g.push_back(c.along(i));
  std::vector<Matrix> blocks;
  blocks.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      blocks.push_back(commutator(g[i], g[j]) - c.along(lie.bracket_basis(i, j)));
  return Curvature(n, std::move(blocks));
}

bool is_flat(const Connection& c, const LieAlgebra& lie) { return curvature(c, lie).is_zero(); }

BilinearForm ricci(const Connection& c, const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  Curvature k = curvature(c, lie);
  Matrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t z = 0; z < n; ++z) r(i, j) += k.at(i, z)(z, j);
  return BilinearForm(std::move(r));
}

CompletenessReport completeness_and_biinvariance(const LieAlgebra& lie, const BilinearForm& omega) {
  SnlaReport rep = snla_report(lie, omega);
  if (!rep.is_snla) throw MathError("completeness_and_biinvariance: not an SNLA");
  ProductTable p = associated_product(lie, omega);
  const std::size_t n = lie.dim();

  CompletenessReport r;
  r.complete = is_complete_novikov(p);
  r.nilpotent = rep.nilpotency_step.has_value();
  r.agreement = r.complete == r.nilpotent;
  r.bi_invariant = rep.classification.associative;

  r.left_ad_vanishes = true;
  r.printed_power_identity = true;
  r.corrected_power_identity = true;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix l = left_mult(p, i).matrix(), rm = right_mult(p, i).matrix(), a = ad(lie, i).matrix();
    if (!(l * a).is_zero() || !(a * l).is_zero()) r.left_ad_vanishes = false;
    Matrix lk = Matrix::identity(n), rk = lk, ak = lk;
    for (std::size_t k = 1; k <= n; ++k) {
      lk = lk * l;
      rk = rk * rm;
      ak = ak * a;
      Scalar sign = k % 2 == 0 ? 1 : -1;
      if (rk != ak + sign * lk) {
        if (r.printed_power_identity) r.printed_witness = std::pair{i, k};
        r.printed_power_identity = false;
      }
      if (rk != lk + sign * ak) r.corrected_power_identity = false;
    }
  }
  return r;
}

}  // namespace snla
