#include "snla/constructions.hpp"

#include <stdexcept>

namespace snla {

namespace {

std::string idx(std::size_t i) { return std::to_string(i + 1); }

void require_dim(std::size_t got, std::size_t want, const char* what) {
  if (got != want)
    throw InputError(std::string(what) + ": expected dimension " + std::to_string(want) + ", got " +
                     std::to_string(got));
}

void require_derivation(const LieAlgebra& lie, const Endomorphism& phi, const char* who) {
  require_dim(phi.dim(), lie.dim(), who);
  if (!is_derivation(lie, phi)) throw MathError(std::string(who) + ": phi is not a derivation");
}

}  // namespace

// ---- cotangent -------------------------------------------------------------

CotangentResult cotangent(const ProductTable& h) {
  LieAlgebra base = commutator_algebra(h);  // refuses non-left-symmetric input
  const std::size_t n = h.dim();
  const std::size_t dim = 2 * n;
  auto eps = [](std::size_t a) { return a; };
  auto e = [n](std::size_t i) { return n + i; };

  Tensor3 c(dim);
  Tensor3 prod(dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        c(e(i), e(j), e(k)) = base.constants()(i, j, k);
        prod(e(i), e(j), e(k)) = h.constants()(i, j, k);
      }
      // [e_i, eps^b] = -sum_c a_{ic}^b eps^c, i.e. the dual of left multiplication.
      for (std::size_t b = 0; b < n; ++b) {
        Scalar v = -h.constants()(i, j, b);
        c(e(i), eps(b), eps(j)) += v;
        c(eps(b), e(i), eps(j)) -= v;
        // e_i . eps^b = -ad_{e_i}^t eps^b,  eps^b . e_i = r_{e_i}^t eps^b
        prod(e(i), eps(b), eps(j)) = -base.constants()(i, j, b);
        prod(eps(b), e(i), eps(j)) = h.constants()(j, i, b);
      }
    }

  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) labels.push_back("eps" + idx(a));
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + idx(i));

  Matrix w(dim, dim);
  for (std::size_t i = 0; i < n; ++i) {
    w(eps(i), e(i)) = -1;
    w(e(i), eps(i)) = 1;
  }
  return {LieAlgebra(std::move(c), std::move(labels)), BilinearForm(std::move(w)), ProductTable(std::move(prod))};
}

// ---- derivation products ---------------------------------------------------

namespace {

void require_commutative_associative(const ProductTable& a, const Endomorphism& d, const char* who) {
  require_dim(d.dim(), a.dim(), who);
  ProductClassification cls = classify(a);
  if (!cls.commutative) throw MathError(std::string(who) + ": algebra is not commutative");
  if (!cls.associative) throw MathError(std::string(who) + ": algebra is not associative");
  if (!is_derivation(a, d)) throw MathError(std::string(who) + ": D is not a derivation");
}

}  // namespace

ProductTable derivation_product(const ProductTable& algebra, const Endomorphism& d) {
  require_commutative_associative(algebra, d, "derivation_product");
  const std::size_t n = algebra.dim();
  Tensor3 t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t.set_slot(i, j, multiply(algebra, unit_vector(n, i), d(unit_vector(n, j))));
  ProductTable out(std::move(t));
  if (!classify(out).novikov) throw std::logic_error("derivation_product: result is not Novikov");
  return out;
}

bool check_square_condition(const ProductTable& algebra, const Endomorphism& d) {
  require_commutative_associative(algebra, d, "check_square_condition");
  const std::size_t n = algebra.dim();
  Endomorphism d2 = d * d;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector ij = algebra.product_basis(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(multiply(algebra, ij, d2(unit_vector(n, k))))) return false;
    }
  return true;
}

// ---- reduction -------------------------------------------------------------

Reduction reduce(const LieAlgebra& lie, const BilinearForm& omega, const Subspace& ideal) {
  const std::size_t n = lie.dim();
  require_dim(omega.dim(), n, "reduce: form");
  require_dim(ideal.ambient_dim(), n, "reduce: subspace");

  const auto& s = ideal.basis();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < s.size(); ++a)
      if (!ideal.contains(lie.bracket(unit_vector(n, i), s[a])))
        throw MathError("reduce: subspace is not an ideal, [e" + idx(i) + ", s" + idx(a) + "] lies outside");
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (omega(s[a], s[b]) != 0)
        throw MathError("reduce: subspace is not isotropic, omega(s" + idx(a) + ", s" + idx(b) + ") != 0");

  Subspace perp = orthogonal(omega, ideal);
  if (!is_subalgebra(lie, perp)) throw std::logic_error("reduce: orthogonal of an ideal is not a subalgebra");

  // Work in echelon coordinates of perp: the coordinates of x in perp are its pivot entries.
  const std::size_t r = perp.dim();
  Matrix coords(r, n);
  for (std::size_t a = 0; a < r; ++a) coords(a, perp.pivots()[a]) = 1;
  std::vector<Vector> s_coords;
  for (const auto& v : s) s_coords.push_back(*perp.coordinates(v));
  QuotientMap qm = quotient_map(r, echelonize(r, s_coords));

  const std::size_t q = r - s.size();
  Matrix lift = perp.basis_matrix() * qm.section;
  Matrix projection = qm.projection * coords;

  Tensor3 c(q);
  Matrix w(q, q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      Vector br = lie.bracket(lift.column(a), lift.column(b));
      c.set_slot(a, b, projection * br);
      w(a, b) = omega(lift.column(a), lift.column(b));
    }

  std::vector<std::string> labels;
  for (std::size_t a = 0; a < q; ++a) {
    Vector col = lift.column(a);
    std::string label = "u" + idx(a);
    for (std::size_t k = 0; k < n; ++k)
      if (col == unit_vector(n, k)) label = lie.labels()[k];
    labels.push_back(label);
  }

  Reduction out{LieAlgebra(std::move(c), std::move(labels)), BilinearForm(std::move(w)), ideal, std::move(perp),
                std::move(lift), std::move(projection)};
  if (!out.omega.is_nondegenerate()) throw std::logic_error("reduce: induced form is degenerate");
  return out;
}

ReductionChain reduce_completely(const LieAlgebra& lie, const BilinearForm& omega) {
  ReductionChain chain;
  chain.stages.push_back({lie, omega});
  while (chain.stages.back().lie.dim() > 0) {
    const SymplecticPair& cur = chain.stages.back();
    std::vector<Subspace> lines = ideal_lines(cur.lie);
    Subspace ideal = lines.empty() ? derived_subalgebra(cur.lie) : lines.front();
    if (ideal.is_zero())
      throw MathError("reduce_completely: no rational ideal line and trivial derived algebra");
    Reduction red = reduce(cur.lie, cur.omega, ideal);
    chain.ideals.push_back(std::move(ideal));
    chain.stages.push_back({std::move(red.lie), std::move(red.omega)});
  }
  return chain;
}

// ---- oxidation -------------------------------------------------------------

BilinearForm omega_phi(const BilinearForm& omega, const Endomorphism& phi) {
  require_dim(phi.dim(), omega.dim(), "omega_phi");
  const Matrix& w = omega.matrix();
  return BilinearForm(phi.matrix().transpose() * w + w * phi.matrix());
}

BilinearForm omega_phi_phi(const BilinearForm& omega, const Endomorphism& phi) {
  return omega_phi(omega_phi(omega, phi), phi);
}

bool solves_oxidation_system(const LieAlgebra& lie, const BilinearForm& omega, const Endomorphism& phi,
                             const OneForm& lambda) {
  const std::size_t n = lie.dim();
  require_dim(lambda.dim(), n, "oxidation one-form");
  BilinearForm opp = omega_phi_phi(omega, phi);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (opp.at(i, j) != -lambda(lie.bracket_basis(i, j))) return false;
  return true;
}

std::optional<OneForm> solve_oxidation_form(const LieAlgebra& lie, const BilinearForm& omega,
                                            const Endomorphism& phi) {
  const std::size_t n = lie.dim();
  require_derivation(lie, phi, "solve_oxidation_form");
  BilinearForm opp = omega_phi_phi(omega, phi);
  std::vector<Vector> rows;
  Vector rhs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      rows.push_back(lie.bracket_basis(i, j));
      rhs.push_back(-opp.at(i, j));
    }
  if (rows.empty()) return OneForm{zero_vector(n)};
  std::optional<Vector> sol = solve(Matrix::from_rows(rows, n), rhs);
  if (!sol) return std::nullopt;
  return OneForm{std::move(*sol)};
}

SymplecticPair oxidize(const LieAlgebra& lie, const BilinearForm& omega, const OxidationData& data) {
  const std::size_t n = lie.dim();
  require_dim(omega.dim(), n, "oxidize: form");
  require_derivation(lie, data.phi, "oxidize");
  if (!solves_oxidation_system(lie, omega, data.phi, data.lambda))
    throw MathError("oxidize: omega_{phi,phi}(x,y) = -lambda([x,y]) fails");

  const std::size_t dim = n + 2;
  const std::size_t xi = 0, h = n + 1;
  auto e = [](std::size_t i) { return i + 1; };
  BilinearForm wphi = omega_phi(omega, data.phi);

  Tensor3 c(dim);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) c(e(i), e(j), e(k)) = lie.constants()(i, j, k);
      c(e(i), e(j), h) = wphi.at(i, j);
    }
    Vector img = data.phi(unit_vector(n, i));
    for (std::size_t k = 0; k < n; ++k) {
      c(xi, e(i), e(k)) = img[k];
      c(e(i), xi, e(k)) = -img[k];
    }
    c(xi, e(i), h) = data.lambda.coefficients[i];
    c(e(i), xi, h) = -data.lambda.coefficients[i];
  }

  Matrix w(dim, dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w(e(i), e(j)) = omega.at(i, j);
  w(xi, h) = 1;
  w(h, xi) = -1;

  std::vector<std::string> labels{data.xi_label};
  labels.insert(labels.end(), lie.labels().begin(), lie.labels().end());
  labels.push_back(data.h_label);

  SymplecticPair out{LieAlgebra(std::move(c), std::move(labels)), BilinearForm(std::move(w))};
  SymplecticReport rep = is_symplectic(out.lie, out.omega);
  if (!rep.ok()) throw MathError("oxidize: result fails axiom '" + rep.failure() + "'");
  return out;
}

ZetaCandidateAudit audit_zeta_candidate(const LieAlgebra& lie, const BilinearForm& omega, const Endomorphism& phi,
                                        const Vector& zeta) {
  const std::size_t n = lie.dim();
  require_dim(zeta.size(), n, "audit_zeta_candidate: zeta");
  require_derivation(lie, phi, "audit_zeta_candidate");
  ZetaCandidateAudit out;
  Endomorphism star = symplectic_adjoint(omega, phi);
  out.hypotheses_hold = ad(lie, zeta) == phi * phi && (phi * star).matrix().is_zero();

  Vector cand(n), plus(n);
  for (std::size_t k = 0; k < n; ++k) {
    plus[k] = omega(zeta, unit_vector(n, k));
    cand[k] = -plus[k];
  }
  out.candidate = OneForm{cand};
  out.solves_defining_sign = solves_oxidation_system(lie, omega, phi, out.candidate);
  out.solves_opposite_sign = solves_oxidation_system(lie, omega, phi, OneForm{-cand});
  out.zeta_form_solves = solves_oxidation_system(lie, omega, phi, OneForm{plus});
  return out;
}

std::vector<ConditionCheck> OxidationConditionsReport::checks() const {
  return {phi_left, left_variant, right_phi_star, right_commutes, phi_phi_star, ad_zeta, zeta_in_kernel};
}

OxidationConditionsReport oxidation_conditions(const LieAlgebra& lie, const BilinearForm& omega,
                                               const Endomorphism& phi, const Vector& zeta) {
  const std::size_t n = lie.dim();
  require_dim(zeta.size(), n, "oxidation_conditions: zeta");
  require_derivation(lie, phi, "oxidation_conditions");
  if (!snla_report(lie, omega).is_snla) throw MathError("oxidation_conditions: base is not an SNLA");

  ProductTable p = associated_product(lie, omega);
  Endomorphism star = symplectic_adjoint(omega, phi);
  Endomorphism sum = phi + star;

  OxidationConditionsReport r;
  r.phi_left.name = "phi o L_x = ad_x o phi*";
  r.left_variant.name = "L_x = ad_x o phi*";
  r.right_phi_star.name = "R_x o phi* = L_{phi*(x)}";
  r.right_commutes.name = "R_x o (phi + phi*) = (phi + phi*) o R_x";
  r.phi_phi_star.name = "phi o phi* = 0";
  r.ad_zeta.name = "ad_zeta = phi^2";
  r.zeta_in_kernel.name = "phi(zeta) = 0";

  auto fail = [](ConditionCheck& c, std::size_t i) {
    if (c.holds) c.witness = i;
    c.holds = false;
  };
  for (std::size_t i = 0; i < n; ++i) {
    Endomorphism l = left_mult(p, i), rm = right_mult(p, i), adx = ad(lie, i);
    if (phi * l != adx * star) fail(r.phi_left, i);
    if (l != adx * star) fail(r.left_variant, i);
    if (rm * star != left_mult(p, star(unit_vector(n, i)))) fail(r.right_phi_star, i);
    if (rm * sum != sum * rm) fail(r.right_commutes, i);
  }
  r.phi_phi_star.holds = (phi * star).matrix().is_zero();
  r.ad_zeta.holds = ad(lie, zeta) == phi * phi;
  r.zeta_in_kernel.holds = is_zero(phi(zeta));

  r.conditions_hold = r.phi_left.holds && r.right_phi_star.holds && r.right_commutes.holds &&
                      r.phi_phi_star.holds && r.ad_zeta.holds && r.zeta_in_kernel.holds;

  Vector lam(n);
  for (std::size_t k = 0; k < n; ++k) lam[k] = omega(zeta, unit_vector(n, k));
  OxidationData data{phi, OneForm{lam}, zeta};
  r.obstruction_vanishes = solves_oxidation_system(lie, omega, phi, data.lambda);
  if (r.obstruction_vanishes) {
    SymplecticPair ox = oxidize(lie, omega, data);
    r.oxidation_is_snla = snla_report(ox.lie, ox.omega).is_snla;
  }
  r.divergence = r.conditions_hold && !r.oxidation_is_snla.value_or(false);
  return r;
}

SymplecticPair in_basis(const LieAlgebra& lie, const BilinearForm& omega, const Matrix& basis) {
  return {change_basis(lie, basis), BilinearForm(basis.transpose() * omega.matrix() * basis)};
}

OxidationDecomposition oxidation_decompose(const LieAlgebra& lie, const BilinearForm& omega) {
  const std::size_t n = lie.dim();
  Subspace z = center(lie);
  if (z.is_zero()) throw MathError("oxidation_decompose: center is trivial");
  Vector h = z.basis().front();

  // omega(xi, h) = xi^T (W h) = 1
  Vector wh = omega.matrix() * h;
  std::optional<Vector> xi_sol = solve(Matrix::from_rows({wh}, n), Vector{Scalar(1)});
  if (!xi_sol) throw MathError("oxidation_decompose: form is degenerate on the center");
  Vector xi = std::move(*xi_sol);

  Reduction red = reduce(lie, omega, echelonize(n, std::span<const Vector>(&h, 1)));
  const std::size_t q = red.lie.dim();

  // Shift the lifts into the orthogonal of xi; their classes are unchanged.
  Matrix u(n, q);
  for (std::size_t a = 0; a < q; ++a) {
    Vector s = red.lift.column(a);
    u.set_column(a, s - omega(xi, s) * h);
  }

  Matrix phi(q, q);
  Vector lam(q);
  for (std::size_t b = 0; b < q; ++b) {
    Vector br = lie.bracket(xi, u.column(b));
    phi.set_column(b, red.projection * br);
    lam[b] = omega(xi, br);
  }
  std::optional<Vector> zeta = solve(red.omega.matrix().transpose(), lam);

  std::vector<Vector> cols{xi};
  for (std::size_t a = 0; a < q; ++a) cols.push_back(u.column(a));
  cols.push_back(h);
  Matrix basis = Matrix::from_columns(cols, n);

  OxidationData data{Endomorphism(std::move(phi)), OneForm{std::move(lam)}, std::move(zeta)};
  return {std::move(red), std::move(data), std::move(h), std::move(xi), std::move(basis)};
}

// ---- irreducible family ----------------------------------------------------

SymplecticPair irreducible_family(std::size_t h, std::size_t m, const Matrix& lambda, const Matrix& lambda_bar) {
  if (lambda.rows() != h || lambda.cols() != m || lambda_bar.rows() != h || lambda_bar.cols() != m)
    throw InputError("irreducible_family: parameter matrices must be " + std::to_string(h) + " x " +
                     std::to_string(m));
  const std::size_t dim = 2 * h + 2 * m;
  auto f = [](std::size_t i) { return 2 * i; };
  auto fbar = [](std::size_t i) { return 2 * i + 1; };
  auto e1 = [h](std::size_t k) { return 2 * h + 2 * k; };
  auto e2 = [h](std::size_t k) { return 2 * h + 2 * k + 1; };

  std::vector<std::tuple<std::size_t, std::size_t, Vector>> br;
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t k = 0; k < m; ++k)
      for (auto [gen, lam] : {std::pair{f(i), lambda(i, k)}, std::pair{fbar(i), lambda_bar(i, k)}}) {
        if (lam == 0) continue;
        br.emplace_back(gen, e1(k), Scalar(-lam) * unit_vector(dim, e2(k)));
        br.emplace_back(gen, e2(k), lam * unit_vector(dim, e1(k)));
      }

  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> terms;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < h; ++i) {
    terms.emplace_back(f(i), fbar(i), 1);
    labels.push_back("f" + idx(i));
    labels.push_back("fbar" + idx(i));
  }
  for (std::size_t k = 0; k < m; ++k) {
    terms.emplace_back(e1(k), e2(k), 1);
    labels.push_back("e1_" + idx(k));
    labels.push_back("e2_" + idx(k));
  }

  SymplecticPair out{LieAlgebra(LieAlgebra::skew_constants(dim, br), std::move(labels)),
                     BilinearForm::two_form(dim, terms)};
  SymplecticReport rep = is_symplectic(out.lie, out.omega);
  if (!rep.ok()) throw std::logic_error("irreducible_family: result fails axiom '" + rep.failure() + "'");
  return out;
}

}  // namespace snla
