#include "support.hpp"

#include <doctest.h>

using namespace snla;
using namespace snla::test;

namespace {

// [e1,e2] = e1, [e2,e3] = e2: antisymmetric but not Jacobi.
Tensor3 broken_constants() {
  return LieAlgebra::skew_constants(3, {{0, 1, vec({1, 0, 0})}, {1, 2, vec({0, 1, 0})}});
}

}  // namespace

TEST_CASE("Jacobi violations are refused with the offending triple") {
  CHECK_THROWS_AS(LieAlgebra{broken_constants()}, MathError);
  JacobiReport r = check_jacobi(broken_constants());
  CHECK_FALSE(r.ok);
  REQUIRE(r.violating_triples.size() == 1);
  const auto& v = r.violating_triples.front();
  CHECK(v.i == 0);
  CHECK(v.j == 1);
  CHECK(v.k == 2);
  CHECK(v.residual == vec({-1, 0, 0}));
  CHECK(check_jacobi(heisenberg3()).ok);
}

TEST_CASE("antisymmetry is enforced even for raw constants") {
  Tensor3 t(2);
  t(0, 1, 1) = 1;
  CHECK_THROWS_AS(LieAlgebra::raw(t), MathError);
  t(0, 0, 0) = 1;
  t(1, 0, 1) = -1;
  CHECK_THROWS_AS(LieAlgebra::raw(t), MathError);
}

TEST_CASE("symplectic report names the failing axiom") {
  auto [lie, omega] = aff2();
  CHECK(is_symplectic(lie, omega).ok());

  SymplecticReport degenerate = is_symplectic(lie, BilinearForm(Matrix(2, 2)));
  CHECK_FALSE(degenerate.nondegenerate);
  CHECK(degenerate.failure() == "nondegenerate");

  SymplecticReport nonskew = is_symplectic(lie, BilinearForm(Matrix{{1, 1}, {-1, 0}}));
  CHECK_FALSE(nonskew.skew);

  // h3 + R with e^{12} + e^{34}: omega([e1,e2], e4) = 1 breaks the cocycle identity.
  LieAlgebra h4(LieAlgebra::skew_constants(4, {{0, 1, vec({0, 0, 1, 0})}}));
  SymplecticReport c = is_symplectic(h4, BilinearForm::two_form(4, {{0, 1, 1}, {2, 3, 1}}));
  CHECK(c.skew);
  CHECK(c.nondegenerate);
  CHECK_FALSE(c.cocycle);
  REQUIRE(c.cocycle_witness.has_value());
  CHECK(*c.cocycle_witness == std::tuple<std::size_t, std::size_t, std::size_t>{0, 1, 3});

  CHECK_FALSE(is_symplectic(heisenberg3(), BilinearForm(Matrix(3, 3))).even_dim);
}

TEST_CASE("series, steps and center of small algebras") {
  LieAlgebra h = heisenberg3();
  auto lcs = lower_central_series(h);
  REQUIRE(lcs.size() == 3);
  CHECK(lcs[0].dim() == 3);
  CHECK(lcs[1] == echelonize(3, std::vector<Vector>{e(3, 2)}));
  CHECK(lcs[2].is_zero());
  CHECK(nilpotency_step(h) == 2);
  CHECK(solvability_step(h) == 2);
  CHECK(center(h) == echelonize(3, std::vector<Vector>{e(3, 2)}));

  auto [aff, omega] = aff2();
  CHECK_FALSE(nilpotency_step(aff).has_value());
  CHECK(solvability_step(aff) == 2);
  CHECK(center(aff).is_zero());
  CHECK(nilpotency_step(LieAlgebra::abelian(4)) == 1);
  CHECK(derived_subalgebra(LieAlgebra::abelian(4)).is_zero());

  // sl2 is not solvable.
  LieAlgebra sl2(LieAlgebra::skew_constants(
      3, {{0, 1, vec({0, 0, 1})}, {2, 0, vec({2, 0, 0})}, {2, 1, vec({0, -2, 0})}}));
  CHECK_FALSE(solvability_step(sl2).has_value());
}

TEST_CASE("ideals and subalgebras") {
  auto [aff, omega] = aff2();
  Subspace line2 = echelonize(2, std::vector<Vector>{e(2, 1)});
  Subspace line1 = echelonize(2, std::vector<Vector>{e(2, 0)});
  CHECK(is_ideal(aff, line2));
  CHECK_FALSE(is_ideal(aff, line1));
  CHECK(is_subalgebra(aff, line1));
  CHECK(orthogonal(omega, line2) == line2);
  CHECK(is_isotropic(omega, line2));
  CHECK_FALSE(is_isotropic(omega, Subspace::whole(2)));
}

TEST_CASE("ideal lines are common eigenvectors") {
  auto [aff, omega] = aff2();
  auto lines = ideal_lines(aff);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0].basis()[0] == e(2, 1));

  auto hl = ideal_lines(heisenberg3());
  REQUIRE(hl.size() == 1);
  CHECK(hl[0].basis()[0] == e(3, 2));

  // Abelian: every coordinate line.
  auto al = ideal_lines(LieAlgebra::abelian(3));
  REQUIRE(al.size() == 3);
  CHECK(al[0].basis()[0] == e(3, 0));
  CHECK(al[2].basis()[0] == e(3, 2));
}

TEST_CASE("every reported ideal line is an ideal on catalog algebras") {
  for (const auto& entry : catalog_snlas()) {
    for (const auto& line : ideal_lines(*entry.lie)) {
      CHECK(line.dim() == 1);
      CHECK(is_ideal(*entry.lie, line));
    }
  }
}

TEST_CASE("symplectic adjoint satisfies omega(f x, y) = omega(x, f* y)") {
  Rng rng;
  BilinearForm omega = darboux(2);
  for (int t = 0; t < 20; ++t) {
    Endomorphism f(rng.matrix(4, 4));
    Endomorphism fs = symplectic_adjoint(omega, f);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) CHECK(omega(f(e(4, i)), e(4, j)) == omega(e(4, i), fs(e(4, j))));
  }
  CHECK_THROWS_AS(symplectic_adjoint(BilinearForm(Matrix(2, 2)), Endomorphism::identity(2)), MathError);
}

TEST_CASE("derivations") {
  LieAlgebra h = heisenberg3();
  for (std::size_t i = 0; i < 3; ++i) CHECK(is_derivation(h, ad(h, i)));
  CHECK_FALSE(is_derivation(h, Endomorphism::identity(3)));
  // diag(1, 1, 2) scales the Heisenberg grading.
  CHECK(is_derivation(h, Endomorphism(Matrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 2}})));
}

TEST_CASE("Killing form of aff(R)") {
  auto [aff, omega] = aff2();
  BilinearForm k = killing_form(aff);
  CHECK(k.matrix() == Matrix{{1, 0}, {0, 0}});
  CHECK(killing_form(heisenberg3()).matrix().is_zero());
}

TEST_CASE("characteristic polynomial and rational roots") {
  CHECK(characteristic_polynomial(Matrix{{1, 2}, {3, 4}}) == std::vector<Scalar>{-2, -5, 1});
  CHECK(rational_roots({q(-1, 2), q(-1, 2), 1}) == std::vector<Scalar>{q(-1, 2), 1});
  // t^2 - 2 has no rational roots.
  CHECK(rational_roots({-2, 0, 1}).empty());
  CHECK(rational_roots({0, 0, 1}) == std::vector<Scalar>{0});
}

TEST_CASE("characteristic polynomial evaluates to det(tI - A)") {
  Rng rng;
  for (int t = 0; t < 20; ++t) {
    Matrix a = rng.matrix(3, 3);
    auto poly = characteristic_polynomial(a);
    REQUIRE(poly.size() == 4);
    for (long x = -2; x <= 2; ++x) {
      Scalar value = 0, pow = 1;
      for (const auto& c : poly) {
        value += c * pow;
        pow *= x;
      }
      CHECK(value == cofactor_det(Scalar(x) * Matrix::identity(3) - a));
    }
  }
}

TEST_CASE("change of basis transports brackets") {
  Rng rng;
  LieAlgebra h = heisenberg3();
  for (int t = 0; t < 10; ++t) {
    Matrix b = rng.matrix(3, 3);
    if (determinant(b) == 0) continue;
    LieAlgebra g = change_basis(h, b);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        CHECK(b * g.bracket_basis(i, j) == h.bracket(b.column(i), b.column(j)));
  }
}

TEST_CASE("exact primitives") {
  auto [aff, omega] = aff2();
  auto alpha = exact_primitive(aff, omega);
  REQUIRE(alpha.has_value());
  // d(alpha)(e1, e2) = -alpha([e1, e2]) = -alpha(e2)
  CHECK(-(*alpha)[1] == omega.at(0, 1));
  CHECK_FALSE(exact_primitive(LieAlgebra::abelian(2), darboux(1)).has_value());
}
