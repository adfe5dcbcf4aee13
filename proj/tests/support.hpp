#pragma once

// Shared fixtures and independent oracles for the test binaries.

#include "snla/catalog.hpp"
#include "snla/constructions.hpp"
#include "snla/geometry.hpp"

#include <random>
#include <string>
#include <vector>

namespace snla::test {

inline Scalar q(long p, long r = 1) {
  Scalar s(p, r);
  s.canonicalize();
  return s;
}

inline Vector vec(std::initializer_list<Scalar> xs) { return Vector(xs); }

inline Vector e(std::size_t n, std::size_t i) { return unit_vector(n, i); }

/// aff(R): [e1,e2] = e2, omega = e^{12}.
inline SymplecticPair aff2() {
  LieAlgebra lie(LieAlgebra::skew_constants(2, {{0, 1, vec({0, 1})}}));
  return {lie, BilinearForm::two_form(2, {{0, 1, 1}})};
}

/// 3-dim Heisenberg [e1,e2] = e3.
inline LieAlgebra heisenberg3() {
  return LieAlgebra(LieAlgebra::skew_constants(3, {{0, 1, vec({0, 0, 1})}}));
}

/// Standard form sum e^{i, i+k} on dimension 2k.
inline BilinearForm darboux(std::size_t k) {
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> terms;
  for (std::size_t i = 0; i < k; ++i) terms.emplace_back(i, i + k, Scalar(1));
  return BilinearForm::two_form(2 * k, terms);
}

/// Small random rationals for property tests; a fixed seed keeps runs reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 20241015) : gen_(seed) {}

  Scalar scalar(int range = 4) {
    std::uniform_int_distribution<int> num(-range, range), den(1, 3);
    return q(num(gen_), den(gen_));
  }
  Scalar nonzero(int range = 4) {
    for (;;) {
      Scalar s = scalar(range);
      if (s != 0) return s;
    }
  }
  Matrix matrix(std::size_t r, std::size_t c, int range = 4) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = scalar(range);
    return m;
  }
  Matrix symmetric(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = scalar();
    return m;
  }
  Vector vector(std::size_t n) {
    Vector v(n);
    for (auto& x : v) x = scalar();
    return v;
  }
  bool coin() { return std::uniform_int_distribution<int>(0, 1)(gen_) == 1; }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen_); }

 private:
  std::mt19937_64 gen_;
};

/// Determinant by cofactor expansion, independent of the elimination code.
inline Scalar cofactor_det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Scalar total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t cc = 0, k = 0; cc < n; ++cc)
        if (cc != c) minor(r - 1, k++) = m(r, cc);
    Scalar term = m(0, c) * cofactor_det(minor);
    total += (c % 2 == 0) ? term : Scalar(-term);
  }
  return total;
}

/// Defining identity of the associated product, checked on every basis triple.
inline bool satisfies_defining_identity(const LieAlgebra& lie, const BilinearForm& omega, const ProductTable& p) {
  const std::size_t n = lie.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar lhs = omega(p.product_basis(i, j), e(n, k));
        Scalar rhs = -omega(e(n, j), lie.bracket_basis(i, k));
        if (lhs != rhs) return false;
      }
  return true;
}

/// Direct Novikov and associativity checks from the raw constants.
inline bool oracle_associative(const ProductTable& p) {
  const std::size_t n = p.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(associator(p, e(n, i), e(n, j), e(n, k)))) return false;
  return true;
}

inline bool oracle_novikov(const ProductTable& p) {
  const std::size_t n = p.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector x = e(n, i), y = e(n, j), z = e(n, k);
        if (associator(p, x, y, z) != associator(p, y, x, z)) return false;
        if (multiply(p, multiply(p, x, y), z) != multiply(p, multiply(p, x, z), y)) return false;
      }
  return true;
}

/// A random valid oxidation of an abelian base of dimension 2k.
/// Family 0: phi = W^{-1} S with S symmetric, so omega_phi = 0.
/// Family 1: phi maps the second Lagrangian into the first and kills the first,
/// so phi^2 = 0 and omega_{phi,phi} = 2 omega(phi x, phi y) = 0.
/// In both cases any lambda solves the system since all brackets vanish.
struct AbelianOxidation {
  LieAlgebra base;
  BilinearForm omega;
  OxidationData data;
};

inline AbelianOxidation random_abelian_oxidation(Rng& rng, std::size_t k, int family) {
  const std::size_t n = 2 * k;
  BilinearForm omega = darboux(k);
  Matrix phi(n, n);
  if (family == 0) {
    phi = *inverse(omega.matrix()) * rng.symmetric(n);
  } else {
    Matrix b = rng.matrix(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) phi(r, k + c) = b(r, c);
  }
  OxidationData data;
  data.phi = Endomorphism(phi);
  data.lambda = OneForm{rng.vector(n)};
  return {LieAlgebra::abelian(n), omega, data};
}

/// Catalog entries carrying a symplectic pair, at their default samples.
inline std::vector<catalog::Entry> catalog_snlas() {
  std::vector<catalog::Entry> out;
  for (auto& entry : catalog::build_all())
    if (entry.lie && entry.omega) out.push_back(std::move(entry));
  return out;
}

}  // namespace snla::test
