#include "support.hpp"

#include <doctest.h>

using namespace snla;
using namespace snla::test;

TEST_CASE("cotangent of the one-dimensional unital algebra is aff(R)") {
  ProductTable k = ProductTable::from_entries(1, {{0, 0, vec({1})}});
  CotangentResult c = cotangent(k);
  // basis (eps, e): [e, eps] = -eps
  CHECK(c.lie.bracket_basis(1, 0) == vec({-1, 0}));
  CHECK(c.omega.at(0, 1) == -1);
  CHECK(is_symplectic(c.lie, c.omega).ok());
  CHECK(associated_product(c.lie, c.omega) == c.expected);
  CHECK(snla_report(c.lie, c.omega).is_snla);
}

TEST_CASE("cotangent of an abelian base is abelian with the canonical pairing") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CotangentResult c = cotangent(ProductTable::zero(n));
    CHECK(c.lie == LieAlgebra::abelian(2 * n));
    CHECK(c.omega.is_nondegenerate());
    CHECK(snla_report(c.lie, c.omega).is_snla);
  }
}

TEST_CASE("cotangent product formula matches the associated product on left-symmetric bases") {
  for (const auto& name : catalog::list()) {
    for (const auto& b : catalog::default_samples(name)) {
      catalog::Entry entry = catalog::build(name, b);
      if (!classify(entry.printed).left_symmetric) continue;
      CotangentResult c = cotangent(entry.printed);
      CHECK(associated_product(c.lie, c.omega) == c.expected);
    }
  }
}

TEST_CASE("cotangent refuses non-left-symmetric bases") {
  ProductTable p = ProductTable::from_entries(2, {{0, 1, vec({1, 0})}, {1, 1, vec({0, 1})}});
  if (!classify(p).left_symmetric) CHECK_THROWS_AS(cotangent(p), MathError);
  LieAlgebra sl2(LieAlgebra::skew_constants(
      3, {{0, 1, vec({0, 0, 1})}, {2, 0, vec({2, 0, 0})}, {2, 1, vec({0, -2, 0})}}));
  CHECK_THROWS_AS(cotangent(ProductTable(sl2.constants())), MathError);
}

TEST_CASE("reduction of L6_25 along its central line") {
  catalog::Entry entry = catalog::build("L6_25");
  Subspace line = echelonize(6, std::vector<Vector>{e(6, 5)});
  Reduction r = reduce(*entry.lie, *entry.omega, line);
  CHECK(r.lie.dim() == 4);
  CHECK(r.lie == LieAlgebra::abelian(4));
  CHECK(r.orthogonal.dim() == 5);
  CHECK(r.projection * r.lift == Matrix::identity(4));
  CHECK(r.omega.is_nondegenerate());
  // omega-bar is the restriction of omega to the lifts.
  CHECK(r.lift.transpose() * entry.omega->matrix() * r.lift == r.omega.matrix());
}

TEST_CASE("reduction of aff(R) along its ideal line is trivial") {
  auto [lie, omega] = aff2();
  Reduction r = reduce(lie, omega, echelonize(2, std::vector<Vector>{e(2, 1)}));
  CHECK(r.lie.dim() == 0);
}

TEST_CASE("reduction refuses non-ideals and non-isotropic ideals") {
  auto [lie, omega] = aff2();
  try {
    reduce(lie, omega, echelonize(2, std::vector<Vector>{e(2, 0)}));
    FAIL("expected refusal");
  } catch (const MathError& err) {
    CHECK(std::string(err.what()).find("ideal") != std::string::npos);
  }
  try {
    reduce(LieAlgebra::abelian(2), darboux(1), Subspace::whole(2));
    FAIL("expected refusal");
  } catch (const MathError& err) {
    CHECK(std::string(err.what()).find("isotropic") != std::string::npos);
  }
}

TEST_CASE("reduced brackets are the projected brackets of lifts") {
  for (const auto& entry : catalog_snlas()) {
    for (const auto& line : ideal_lines(*entry.lie)) {
      if (!is_isotropic(*entry.omega, line)) continue;
      Reduction r = reduce(*entry.lie, *entry.omega, line);
      const std::size_t m = r.lie.dim();
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
          CHECK(r.projection * entry.lie->bracket(r.lift.column(a), r.lift.column(b)) == r.lie.bracket_basis(a, b));
    }
  }
}

TEST_CASE("oxidation form equations") {
  BilinearForm omega = darboux(1);
  Endomorphism nil(Matrix{{0, 1}, {0, 0}});
  CHECK(omega_phi(omega, nil).matrix().is_zero());
  auto lambda = solve_oxidation_form(LieAlgebra::abelian(2), omega, nil);
  REQUIRE(lambda.has_value());
  CHECK(solves_oxidation_system(LieAlgebra::abelian(2), omega, nil, *lambda));

  // phi = diag(1, 0): omega_phi = omega_{phi,phi} = e^{12}, which no lambda cancels on an abelian base.
  Endomorphism p(Matrix{{1, 0}, {0, 0}});
  CHECK(omega_phi(omega, p) == omega);
  CHECK(omega_phi_phi(omega, p) == omega);
  CHECK_FALSE(solve_oxidation_form(LieAlgebra::abelian(2), omega, p).has_value());
}

TEST_CASE("oxidation of an abelian plane") {
  OxidationData data;
  data.phi = Endomorphism(Matrix{{0, 1}, {0, 0}});
  data.lambda = OneForm{vec({1, 0})};
  SymplecticPair g = oxidize(LieAlgebra::abelian(2), darboux(1), data);
  // basis (xi, e1, e2, h)
  CHECK(g.lie.dim() == 4);
  CHECK(g.omega.at(0, 3) == 1);
  CHECK(g.lie.bracket_basis(0, 2) == vec({0, 1, 0, 0}));
  CHECK(g.lie.bracket_basis(0, 1) == vec({0, 0, 0, 1}));
  // [e2, e2] stays 0 and [e1, e2] picks up omega_phi(e1, e2) h = 0.
  CHECK(is_zero(g.lie.bracket_basis(1, 2)));
  CHECK(is_symplectic(g.lie, g.omega).ok());
  CHECK(g.lie.labels().front() == "xi");
  CHECK(g.lie.labels().back() == "h");
}

TEST_CASE("oxidation refuses bad data") {
  OxidationData bad_lambda;
  bad_lambda.phi = Endomorphism::identity(2);
  bad_lambda.lambda = OneForm{vec({0, 0})};
  CHECK_THROWS_AS(oxidize(LieAlgebra::abelian(2), darboux(1), bad_lambda), MathError);

  catalog::Entry d = catalog::build("d4_1");
  OxidationData nd;
  nd.phi = Endomorphism::identity(4);
  nd.lambda = OneForm{zero_vector(4)};
  CHECK_THROWS_AS(oxidize(*d.lie, *d.omega, nd), MathError);
}

TEST_CASE("random abelian oxidations are symplectic and satisfy the associativity criterion") {
  Rng rng;
  for (int t = 0; t < 30; ++t) {
    auto ox = random_abelian_oxidation(rng, 1 + rng.index(2), t % 2);
    CHECK(solves_oxidation_system(ox.base, ox.omega, ox.data.phi, ox.data.lambda));
    SymplecticPair g = oxidize(ox.base, ox.omega, ox.data);
    CHECK(check_jacobi(g.lie).ok);
    CHECK(is_symplectic(g.lie, g.omega).ok());
    SnlaReport r = snla_report(g.lie, g.omega);
    CHECK(r.theorem1_consistent);
  }
}

TEST_CASE("decompose then oxidize reproduces L6_23.v1") {
  catalog::Entry entry = catalog::build("L6_23.v1");
  OxidationDecomposition d = oxidation_decompose(*entry.lie, *entry.omega);
  CHECK(d.reduced.lie.dim() == 4);
  CHECK(center(*entry.lie).contains(d.h));
  CHECK((*entry.omega)(d.xi, d.h) == 1);
  SymplecticPair adapted = in_basis(*entry.lie, *entry.omega, d.adapted_basis);
  SymplecticPair rebuilt = oxidize(d.reduced.lie, d.reduced.omega, d.data);
  CHECK(adapted.lie == rebuilt.lie);
  CHECK(adapted.omega == rebuilt.omega);
  REQUIRE(d.data.zeta.has_value());
  ZetaCandidateAudit audit = audit_zeta_candidate(d.reduced.lie, d.reduced.omega, d.data.phi, *d.data.zeta);
  CHECK(audit.zeta_form_solves);
}

TEST_CASE("decompose refuses a trivial center") {
  auto [lie, omega] = aff2();
  CHECK_THROWS_AS(oxidation_decompose(lie, omega), MathError);
}

TEST_CASE("conditions report on a decomposition") {
  catalog::Entry entry = catalog::build("L6_23.v1");
  OxidationDecomposition d = oxidation_decompose(*entry.lie, *entry.omega);
  OxidationConditionsReport r = oxidation_conditions(d.reduced.lie, d.reduced.omega, d.data.phi, *d.data.zeta);
  CHECK(r.obstruction_vanishes);
  REQUIRE(r.oxidation_is_snla.has_value());
  CHECK(*r.oxidation_is_snla);
  CHECK(r.divergence == (r.conditions_hold && !*r.oxidation_is_snla));
  CHECK(r.checks().size() == 7);
  CHECK_THROWS_AS(oxidation_conditions(*catalog::build("d4_1").lie, *catalog::build("d4_1").omega,
                                       Endomorphism::identity(4), zero_vector(4)),
                  MathError);
}

TEST_CASE("complete reduction of catalog SNLAs") {
  for (const auto& entry : catalog_snlas()) {
    ReductionChain chain = reduce_completely(*entry.lie, *entry.omega);
    REQUIRE_FALSE(chain.stages.empty());
    CHECK(chain.stages.back().lie.dim() == 0);
    CHECK(chain.ideals.size() + 1 == chain.stages.size());
    for (const auto& stage : chain.stages)
      if (stage.lie.dim() > 0) CHECK(snla_report(stage.lie, stage.omega).is_snla);
  }
}

TEST_CASE("irreducible family") {
  SymplecticPair zero = irreducible_family(1, 1, Matrix(1, 1), Matrix(1, 1));
  CHECK(zero.lie == LieAlgebra::abelian(4));
  CHECK(snla_report(zero.lie, zero.omega).is_snla);

  SymplecticPair g = irreducible_family(1, 1, Matrix{{1}}, Matrix{{0}});
  CHECK(g.lie.labels() == std::vector<std::string>{"f1", "fbar1", "e1_1", "e2_1"});
  CHECK(g.lie.bracket_basis(0, 2) == vec({0, 0, 0, -1}));
  CHECK(g.lie.bracket_basis(0, 3) == vec({0, 0, 1, 0}));
  CHECK(is_symplectic(g.lie, g.omega).ok());
  SnlaReport r = snla_report(g.lie, g.omega);
  CHECK_FALSE(r.is_snla);
  CHECK(r.theorem1_consistent);
  CHECK_FALSE(r.classification.witnesses_for(Identity::right_commutative).empty());
}

TEST_CASE("in_basis with the identity is a no-op") {
  catalog::Entry entry = catalog::build("rh3");
  SymplecticPair p = in_basis(*entry.lie, *entry.omega, Matrix::identity(4));
  CHECK(p.lie == *entry.lie);
  CHECK(p.omega == *entry.omega);
}
