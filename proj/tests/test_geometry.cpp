#include "support.hpp"

#include <doctest.h>

using namespace snla;
using namespace snla::test;

TEST_CASE("affine connection of aff(R)") {
  auto [lie, omega] = aff2();
  Connection c = affine_connection(associated_product(lie, omega));
  CHECK(c.gamma(0, 0, 0) == -1);
  CHECK(c.gamma(1, 0, 1) == -1);
  CHECK(c.gamma(0, 1, 0) == 0);
  CHECK(c.gamma(1, 1, 1) == 0);
  CHECK(is_torsion_free(c, lie));
  CHECK(is_flat(c, lie));
  CHECK(is_parallel(c, omega) == false);
}

TEST_CASE("affine connection refuses non-left-symmetric products") {
  ProductTable p = ProductTable::from_entries(2, {{0, 1, vec({1, 0})}, {1, 1, vec({0, 1})}, {0, 0, vec({0, 1})}});
  if (!classify(p).left_symmetric) CHECK_THROWS_AS(affine_connection(p), MathError);
}

TEST_CASE("symplectic connection of aff(R)") {
  auto [lie, omega] = aff2();
  Connection c = symplectic_connection(lie, omega);
  CHECK(c.along(0) == Matrix{{q(-1, 3), 0}, {0, q(1, 3)}});
  CHECK(c.along(1) == Matrix{{0, 0}, {q(-2, 3), 0}});
  CHECK(is_torsion_free(c, lie));
  CHECK(is_parallel(c, omega));

  Curvature k = curvature(c, lie);
  CHECK(k.at(0, 1) * e(2, 0) == vec({0, q(2, 9)}));
  CHECK_FALSE(k.is_zero());
  BilinearForm ric = ricci(c, lie);
  CHECK(ric.at(0, 0) == q(2, 9));
  CHECK(ric.matrix() == q(2, 9) * killing_form(lie).matrix());
}

TEST_CASE("symplectization of a non-parallel flat connection on the plane") {
  LieAlgebra lie = LieAlgebra::abelian(2);
  BilinearForm omega = darboux(1);
  Tensor3 g(2);
  g(0, 0, 0) = 1;  // nabla_{e1} e1 = e1
  Connection c{g};
  REQUIRE(is_torsion_free(c, lie));
  REQUIRE_FALSE(is_parallel(c, omega));
  Connection s = symplectize(c, lie, omega);
  CHECK(s.along(0) == Matrix{{q(1, 3), 0}, {0, q(-1, 3)}});
  CHECK(s.along(1) == Matrix{{0, 0}, {q(-1, 3), 0}});
  CHECK(is_parallel(s, omega));
  CHECK(is_torsion_free(s, lie));
}

TEST_CASE("symplectization recovers the symplectic connection from the affine one") {
  for (const auto& entry : catalog_snlas()) {
    Connection affine = affine_connection(entry.product);
    CHECK(symplectize(affine, *entry.lie, *entry.omega) == symplectic_connection(*entry.lie, *entry.omega));
  }
}

TEST_CASE("symplectic connection is one third of ad plus product") {
  // nabla_x y = (ad_x y + x.y)/3 since L_x = -ad_x^* for the associated product.
  for (const auto& entry : catalog_snlas()) {
    Connection c = symplectic_connection(*entry.lie, *entry.omega);
    const std::size_t n = entry.lie->dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        CHECK(c.gamma.slot(i, j) == q(1, 3) * (entry.lie->bracket_basis(i, j) + entry.product.product_basis(i, j)));
  }
}

TEST_CASE("Heisenberg product x.y = [x,y]/2") {
  LieAlgebra h = heisenberg3();
  Tensor3 t(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t.set_slot(i, j, q(1, 2) * h.bracket_basis(i, j));
  ProductTable half(t);
  REQUIRE(classify(half).left_symmetric);
  Connection nabla = affine_connection(half);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Vector symplectic_form = q(1, 3) * (h.bracket_basis(i, j) + half.product_basis(i, j));
      CHECK(symplectic_form == nabla.gamma.slot(i, j));
      CHECK(symplectic_form == q(1, 2) * h.bracket_basis(i, j));
    }
}

TEST_CASE("completeness of aff(R) and an abelian plane") {
  auto [lie, omega] = aff2();
  CompletenessReport r = completeness_and_biinvariance(lie, omega);
  CHECK_FALSE(r.complete);
  CHECK_FALSE(r.nilpotent);
  CHECK(r.agreement);
  CHECK(r.bi_invariant);
  CHECK(r.left_ad_vanishes);
  CHECK(r.corrected_power_identity);
  CHECK_FALSE(r.printed_power_identity);
  REQUIRE(r.printed_witness.has_value());
  CHECK(r.printed_witness->second % 2 == 1);

  CompletenessReport a = completeness_and_biinvariance(LieAlgebra::abelian(2), darboux(1));
  CHECK(a.complete);
  CHECK(a.nilpotent);
  CHECK(a.printed_power_identity);
}

TEST_CASE("completeness refuses non-SNLA pairs") {
  catalog::Entry d = catalog::build("d4_1");
  Matrix w = d.omega->matrix();
  w(1, 3) += 1;
  w(3, 1) -= 1;
  CHECK_THROWS_AS(completeness_and_biinvariance(*d.lie, BilinearForm(w)), MathError);
}

TEST_CASE("right multiplication powers relate to left and adjoint powers") {
  for (const auto& entry : catalog_snlas()) {
    const std::size_t n = entry.lie->dim();
    for (std::size_t i = 0; i < n; ++i) {
      Matrix r = right_mult(entry.product, i).matrix();
      Matrix l = left_mult(entry.product, i).matrix();
      Matrix a = ad(*entry.lie, i).matrix();
      for (std::size_t k = 1; k <= n; ++k) {
        Matrix sign_ad = (k % 2 == 0) ? a.power(k) : Matrix(-a.power(k));
        CHECK(r.power(k) == l.power(k) + sign_ad);
      }
    }
  }
}
