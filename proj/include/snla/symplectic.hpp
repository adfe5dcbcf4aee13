#pragma once

#include "snla/product_table.hpp"

#include <optional>

namespace snla {

/// The left-symmetric product of a symplectic Lie algebra, defined by
/// omega(x.y, z) = -omega(y, [x, z]).
///
/// Refuses non-symplectic input with a MathError naming the failing axiom.
/// The result is re-verified: x.y - y.x = [x,y], omega(x.y,z) = omega(x,z.y),
/// the cyclic identity omega(x.y,z) + omega(y.z,x) + omega(z.x,y) = 0, and
/// left-symmetry. Any failure there is a bug and throws std::logic_error.
ProductTable associated_product(const LieAlgebra& lie, const BilinearForm& omega);

struct SnlaReport {
  ProductClassification classification;
  bool is_snla = false;
  /// novikov == associative for the associated product; reported for every input.
  bool theorem1_consistent = false;

  std::size_t dim = 0;
  std::size_t derived_dim = 0;
  std::optional<std::size_t> nilpotency_step;
  std::optional<std::size_t> solvability_step;

  // Filled only when is_snla.
  std::optional<bool> derived_isotropic;
  std::optional<bool> two_step_solvable;
  std::optional<bool> lr_iff_two_step;
  /// R_[x,y] = 0 on all basis pairs.
  std::optional<bool> right_mult_of_brackets_vanishes;
  /// p <= dim D(g) + 1 <= dim/2 + 1, only for nilpotent SNLAs.
  std::optional<bool> nilpotency_bound;

  /// Every filled sub-check holds.
  bool consistent() const;
};

SnlaReport snla_report(const LieAlgebra& lie, const BilinearForm& omega);

}  // namespace snla
