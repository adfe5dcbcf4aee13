#include "snla/lie_algebra.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace snla {

namespace {

std::string idx3(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
}

void require_dim(const Vector& v, std::size_t n, const char* what) {
  if (v.size() != n)
    throw InputError(std::string(what) + ": vector of length " + std::to_string(v.size()) + " in dimension " +
                     std::to_string(n));
}

void check_antisymmetric(const Tensor3& c) {
  const std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (c(i, j, k) != -c(j, i, k))
          throw MathError("structure constants are not antisymmetric at " + idx3(i, j, k));
}

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Scalar evaluate(const std::vector<Scalar>& poly, const Scalar& t) {
  Scalar acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * t + *it;
  return acc;
}

}  // namespace

Endomorphism::Endomorphism(Matrix m) : m_(std::move(m)) {
  if (!m_.is_square()) throw InputError("endomorphism matrix must be square");
}

BilinearForm::BilinearForm(Matrix m) : m_(std::move(m)) {
  if (!m_.is_square()) throw InputError("bilinear form matrix must be square");
  Matrix t = m_.transpose();
  if (t == m_)
    kind_ = FormKind::symmetric;
  else if (t == -m_)
    kind_ = FormKind::skew;
  else
    kind_ = FormKind::none;
  // The zero form is both; report it as skew so symplectic checks fail on degeneracy only.
  if (m_.is_zero()) kind_ = FormKind::skew;
}

BilinearForm BilinearForm::two_form(std::size_t n,
                                    const std::vector<std::tuple<std::size_t, std::size_t, Scalar>>& terms) {
  Matrix m(n, n);
  for (const auto& [i, j, c] : terms) {
    if (i >= n || j >= n || i == j) throw InputError("two_form: bad index pair");
    m(i, j) += c;
    m(j, i) -= c;
  }
  return BilinearForm(std::move(m));
}

bool BilinearForm::is_nondegenerate() const { return determinant(m_) != 0; }

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i + 1));
  return out;
}

LieAlgebra::LieAlgebra(Tensor3 constants, std::vector<std::string> labels, Unchecked)
    : c_(std::move(constants)), labels_(std::move(labels)) {
  if (labels_.empty()) labels_ = default_labels(c_.dim());
  if (labels_.size() != c_.dim()) throw InputError("label count does not match dimension");
  check_antisymmetric(c_);
}

LieAlgebra::LieAlgebra(Tensor3 constants, std::vector<std::string> labels)
    : LieAlgebra(std::move(constants), std::move(labels), Unchecked{}) {
  JacobiReport j = check_jacobi(c_);
  if (!j.ok) {
    const auto& w = j.violating_triples.front();
    throw MathError("jacobi identity fails at " + idx3(w.i, w.j, w.k) + " with residual " +
                    to_string(w.residual));
  }
}

LieAlgebra LieAlgebra::raw(Tensor3 constants, std::vector<std::string> labels) {
  return LieAlgebra(std::move(constants), std::move(labels), Unchecked{});
}

Tensor3 LieAlgebra::skew_constants(std::size_t n,
                                   const std::vector<std::tuple<std::size_t, std::size_t, Vector>>& brackets) {
  Tensor3 c(n);
  for (const auto& [i, j, out] : brackets) {
    if (i >= n || j >= n || i == j) throw InputError("bracket entry with bad index pair");
    require_dim(out, n, "bracket entry");
    for (std::size_t k = 0; k < n; ++k) {
      c(i, j, k) += out[k];
      c(j, i, k) -= out[k];
    }
  }
  return c;
}

LieAlgebra LieAlgebra::abelian(std::size_t n) { return LieAlgebra(Tensor3(n)); }

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  require_dim(x, dim(), "bracket");
  require_dim(y, dim(), "bracket");
  return c_.apply(x, y);
}

Vector bracket(const LieAlgebra& lie, const Vector& x, const Vector& y) { return lie.bracket(x, y); }

JacobiReport check_jacobi(const Tensor3& c) {
  JacobiReport rep;
  const std::size_t n = c.dim();
  auto br = [&](const Vector& x, const Vector& y) { return c.apply(x, y); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        Vector r = br(c.slot(i, j), ek) + br(c.slot(j, k), ei) + br(c.slot(k, i), ej);
        if (!is_zero(r)) {
          rep.ok = false;
          rep.violating_triples.push_back({i, j, k, std::move(r)});
        }
      }
  return rep;
}

JacobiReport check_jacobi(const LieAlgebra& lie) { return check_jacobi(lie.constants()); }

std::string SymplecticReport::failure() const {
  if (!skew) return "skew";
  if (!even_dim) return "even_dim";
  if (!nondegenerate) return "nondegenerate";
  if (!cocycle) return "cocycle";
  return {};
}

SymplecticReport is_symplectic(const LieAlgebra& lie, const BilinearForm& omega) {
  const std::size_t n = lie.dim();
  if (omega.dim() != n)
    throw InputError("form of size " + std::to_string(omega.dim()) + " on algebra of dimension " +
                     std::to_string(n));
  SymplecticReport rep;
  rep.skew = omega.kind() == FormKind::skew;
  rep.even_dim = n % 2 == 0;
  rep.nondegenerate = omega.is_nondegenerate();
  rep.cocycle = true;
  const Matrix& w = omega.matrix();
  auto om = [&](const Vector& x, std::size_t k) {
    Scalar s = 0;
    for (std::size_t m = 0; m < n; ++m)
      if (x[m] != 0) s += x[m] * w(m, k);
    return s;
  };
  for (std::size_t i = 0; i < n && rep.cocycle; ++i)
    for (std::size_t j = i + 1; j < n && rep.cocycle; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Scalar s = om(lie.bracket_basis(i, j), k) + om(lie.bracket_basis(j, k), i) + om(lie.bracket_basis(k, i), j);
        if (s != 0) {
          rep.cocycle = false;
          rep.cocycle_witness = std::make_tuple(i, j, k);
          break;
        }
      }
  return rep;
}

Endomorphism ad(const LieAlgebra& lie, const Vector& x) {
  require_dim(x, lie.dim(), "ad");
  return Endomorphism(lie.constants().left(x));
}

Subspace bracket_span(const LieAlgebra& lie, const Subspace& a, const Subspace& b) {
  std::vector<Vector> gens;
  for (const auto& u : a.basis())
    for (const auto& v : b.basis()) gens.push_back(lie.bracket(u, v));
  return echelonize(lie.dim(), gens);
}

Subspace derived_subalgebra(const LieAlgebra& lie) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < lie.dim(); ++i)
    for (std::size_t j = i + 1; j < lie.dim(); ++j) gens.push_back(lie.bracket_basis(i, j));
  return echelonize(lie.dim(), gens);
}

namespace {

std::vector<Subspace> iterate_series(const LieAlgebra& lie, const std::function<Subspace(const Subspace&)>& next) {
  std::vector<Subspace> series{Subspace::whole(lie.dim())};
  while (true) {
    Subspace s = next(series.back());
    if (s == series.back()) break;
    series.push_back(std::move(s));
  }
  return series;
}

std::optional<std::size_t> first_zero(const std::vector<Subspace>& series) {
  for (std::size_t k = 0; k < series.size(); ++k)
    if (series[k].is_zero()) return k;
  return std::nullopt;
}

}  // namespace

std::vector<Subspace> lower_central_series(const LieAlgebra& lie) {
  Subspace g = Subspace::whole(lie.dim());
  return iterate_series(lie, [&](const Subspace& c) { return bracket_span(lie, g, c); });
}

std::vector<Subspace> derived_series(const LieAlgebra& lie) {
  return iterate_series(lie, [&](const Subspace& d) { return bracket_span(lie, d, d); });
}

std::optional<std::size_t> nilpotency_step(const LieAlgebra& lie) { return first_zero(lower_central_series(lie)); }

std::optional<std::size_t> solvability_step(const LieAlgebra& lie) { return first_zero(derived_series(lie)); }

Subspace center(const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  Matrix stacked(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix a = ad(lie, i).matrix();
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(i * n + r, c) = a(r, c);
  }
  return kernel(stacked);
}

bool is_ideal(const LieAlgebra& lie, const Subspace& s) {
  for (std::size_t i = 0; i < lie.dim(); ++i)
    for (const auto& v : s.basis())
      if (!s.contains(lie.bracket(unit_vector(lie.dim(), i), v))) return false;
  return true;
}

bool is_subalgebra(const LieAlgebra& lie, const Subspace& s) {
  for (const auto& u : s.basis())
    for (const auto& v : s.basis())
      if (!s.contains(lie.bracket(u, v))) return false;
  return true;
}

Endomorphism symplectic_adjoint(const BilinearForm& omega, const Endomorphism& f) {
  if (f.dim() != omega.dim()) throw InputError("symplectic_adjoint: size mismatch");
  auto winv = inverse(omega.matrix());
  if (!winv) throw MathError("symplectic_adjoint: form is degenerate");
  return Endomorphism(*winv * f.matrix().transpose() * omega.matrix());
}

bool is_derivation(const LieAlgebra& lie, const Endomorphism& d) {
  const std::size_t n = lie.dim();
  if (d.dim() != n) throw InputError("is_derivation: size mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector ei = unit_vector(n, i), ej = unit_vector(n, j);
      if (d(lie.bracket_basis(i, j)) != lie.bracket(d(ei), ej) + lie.bracket(ei, d(ej))) return false;
    }
  return true;
}

BilinearForm killing_form(const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(ad(lie, i).matrix());
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) k(i, j) = (ads[i] * ads[j]).trace();
  return BilinearForm(std::move(k));
}

Subspace orthogonal(const BilinearForm& omega, const Subspace& s) {
  if (s.ambient_dim() != omega.dim()) throw InputError("orthogonal: size mismatch");
  if (!omega.is_nondegenerate()) throw MathError("orthogonal: form is degenerate");
  // Row r: x -> omega(x, s_r) = (W s_r) . x
  std::vector<Vector> rows;
  for (const auto& v : s.basis()) rows.push_back(omega.matrix() * v);
  if (rows.empty()) return Subspace::whole(omega.dim());
  return kernel(Matrix::from_rows(rows, omega.dim()));
}

bool is_isotropic(const BilinearForm& omega, const Subspace& s) {
  for (const auto& u : s.basis())
    for (const auto& v : s.basis())
      if (omega(u, v) != 0) return false;
  return true;
}

std::vector<Scalar> characteristic_polynomial(const Matrix& a) {
  if (!a.is_square()) throw InputError("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  std::vector<Scalar> c(n + 1, Scalar(0));
  c[n] = 1;
  Matrix m(n, n);
  const Matrix id = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * id;
    c[n - k] = -(a * m).trace() / Scalar(static_cast<long>(k));
  }
  return c;
}

std::vector<Scalar> rational_roots(const std::vector<Scalar>& poly) {
  std::vector<Scalar> roots;
  std::size_t low = 0;
  while (low < poly.size() && poly[low] == 0) ++low;
  if (low == poly.size()) throw InputError("rational_roots: zero polynomial");
  if (low > 0) roots.push_back(0);

  std::vector<Scalar> p(poly.begin() + static_cast<std::ptrdiff_t>(low), poly.end());
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  if (p.size() > 1) {
    mpz_class denom_lcm = 1;
    for (const auto& s : p) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), s.get_den_mpz_t());
    mpz_class a0 = Scalar(p.front() * denom_lcm).get_num();
    mpz_class an = Scalar(p.back() * denom_lcm).get_num();
    for (const auto& num : divisors(a0))
      for (const auto& den : divisors(an))
        for (int sign : {1, -1}) {
          Scalar t(mpz_class(sign * num), den);
          t.canonicalize();
          if (evaluate(p, t) == 0) roots.push_back(t);
        }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<Subspace> ideal_lines(const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  std::vector<Subspace> spaces{Subspace::whole(n)};
  for (std::size_t i = 0; i < n && !spaces.empty(); ++i) {
    Matrix a = ad(lie, i).matrix();
    std::vector<Scalar> eig = rational_roots(characteristic_polynomial(a));
    std::vector<Subspace> next;
    for (const auto& w : spaces)
      for (const auto& mu : eig) {
        Subspace joint = intersection(w, kernel(a - mu * Matrix::identity(n)));
        if (!joint.is_zero()) next.push_back(std::move(joint));
      }
    spaces = std::move(next);
  }
  std::vector<Vector> lines;
  for (const auto& w : spaces)
    for (const auto& v : w.basis()) lines.push_back(v);
  std::sort(lines.begin(), lines.end(), pivot_less);
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());

  std::vector<Subspace> out;
  for (const auto& v : lines) out.push_back(echelonize(n, std::span<const Vector>(&v, 1)));
  return out;
}

LieAlgebra change_basis(const LieAlgebra& lie, const Matrix& b) {
  const std::size_t n = lie.dim();
  if (b.rows() != n || b.cols() != n) throw InputError("change_basis: size mismatch");
  auto binv = inverse(b);
  if (!binv) throw MathError("change_basis: basis matrix is singular");
  Tensor3 c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c.set_slot(i, j, *binv * lie.bracket(b.column(i), b.column(j)));
  return LieAlgebra(std::move(c));
}

std::optional<Vector> exact_primitive(const LieAlgebra& lie, const BilinearForm& omega) {
  const std::size_t n = lie.dim();
  std::vector<Vector> rows;
  Vector rhs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      rows.push_back(lie.bracket_basis(i, j));
      rhs.push_back(-omega.at(i, j));
    }
  if (rows.empty()) return zero_vector(n);
  return solve(Matrix::from_rows(rows, n), rhs);
}

}  // namespace snla
