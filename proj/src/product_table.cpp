#include "snla/product_table.hpp"

#include <algorithm>
#include <utility>

namespace snla {

ProductTable ProductTable::from_entries(std::size_t n,
                                        const std::vector<std::tuple<std::size_t, std::size_t, Vector>>& entries) {
  Tensor3 a(n);
  for (const auto& [i, j, out] : entries) {
    if (i >= n || j >= n) throw InputError("product entry index out of range");
    if (out.size() != n) throw InputError("product entry has wrong output length");
    for (std::size_t k = 0; k < n; ++k) a(i, j, k) += out[k];
  }
  return ProductTable(std::move(a));
}

Vector multiply(const ProductTable& p, const Vector& x, const Vector& y) {
  if (x.size() != p.dim() || y.size() != p.dim()) throw InputError("multiply: dimension mismatch");
  return p.constants().apply(x, y);
}

Vector associator(const ProductTable& p, const Vector& x, const Vector& y, const Vector& z) {
  return multiply(p, multiply(p, x, y), z) - multiply(p, x, multiply(p, y, z));
}

Endomorphism left_mult(const ProductTable& p, const Vector& x) {
  if (x.size() != p.dim()) throw InputError("left_mult: dimension mismatch");
  return Endomorphism(p.constants().left(x));
}

Endomorphism right_mult(const ProductTable& p, const Vector& x) {
  if (x.size() != p.dim()) throw InputError("right_mult: dimension mismatch");
  return Endomorphism(p.constants().right(x));
}

std::string to_string(Identity id) {
  switch (id) {
    case Identity::left_symmetric: return "left_symmetric";
    case Identity::right_commutative: return "right_commutative";
    case Identity::left_commutative: return "left_commutative";
    case Identity::associative: return "associative";
    case Identity::commutative: return "commutative";
  }
  return "?";
}

std::vector<IdentityWitness> ProductClassification::witnesses_for(Identity id) const {
  std::vector<IdentityWitness> out;
  std::copy_if(witnesses.begin(), witnesses.end(), std::back_inserter(out),
               [id](const IdentityWitness& w) { return w.identity == id; });
  return out;
}

namespace {

struct IdentityScan {
  Identity id;
  bool holds = true;
  std::size_t recorded = 0;

  // residual is a callable so it is only evaluated for recorded witnesses
  template <class Residual>
  void fail(std::vector<IdentityWitness>& sink, std::size_t i, std::size_t j, std::size_t k, Residual residual) {
    holds = false;
    if (recorded < ProductClassification::kMaxWitnesses) {
      sink.push_back({id, i, j, k, residual()});
      ++recorded;
    }
  }
};

}  // namespace

ProductClassification classify(const ProductTable& p) {
  const std::size_t n = p.dim();
  ProductClassification out;

  // outer[(i,j,k)] = (e_i.e_j).e_k and inner[(i,j,k)] = e_i.(e_j.e_k); every identity is a
  // comparison between entries of these two tables.
  const Tensor3& a = p.constants();
  // Sparse slots: nz[i * n + j] lists the nonzero (k, a(i,j,k)).
  std::vector<std::vector<std::pair<std::size_t, const Scalar*>>> nz(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (a(i, j, k) != 0) nz[i * n + j].emplace_back(k, &a(i, j, k));
  Scalar t;
  // x.e_k if right, else e_k.x
  auto times_basis = [&](const Vector& x, std::size_t k, bool right) {
    Vector out(n);
    for (std::size_t m = 0; m < n; ++m) {
      if (x[m] == 0) continue;
      for (const auto& [c, v] : nz[right ? m * n + k : k * n + m]) {
        mpq_mul(t.get_mpq_t(), x[m].get_mpq_t(), v->get_mpq_t());
        out[c] += t;
      }
    }
    return out;
  };

  std::vector<Vector> outer(n * n * n), inner(n * n * n);
  auto at = [n](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector ij = a.slot(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        outer[at(i, j, k)] = times_basis(ij, k, true);
        inner[at(k, i, j)] = times_basis(ij, k, false);
      }
    }

  IdentityScan ls{Identity::left_symmetric}, rc{Identity::right_commutative}, lc{Identity::left_commutative},
      as{Identity::associative}, co{Identity::commutative};
  std::vector<IdentityWitness> w_ls, w_rc, w_lc, w_as, w_co;

  // Associators are compared as a + d == b + c so residuals are only built on failure.
  auto same_difference = [](const Vector& a, const Vector& b, const Vector& c, const Vector& d, Scalar& l,
                            Scalar& r) {
    for (std::size_t t = 0; t < a.size(); ++t) {
      mpq_add(l.get_mpq_t(), a[t].get_mpq_t(), d[t].get_mpq_t());
      mpq_add(r.get_mpq_t(), b[t].get_mpq_t(), c[t].get_mpq_t());
      if (l != r) return false;
    }
    return true;
  };
  Scalar l, r;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i < j && a.slot(i, j) != a.slot(j, i)) co.fail(w_co, i, j, 0, [&] { return a.slot(i, j) - a.slot(j, i); });
      for (std::size_t k = 0; k < n; ++k) {
        const Vector& xy_z = outer[at(i, j, k)];
        const Vector& x_yz = inner[at(i, j, k)];
        const Vector& yx_z = outer[at(j, i, k)];
        const Vector& y_xz = inner[at(j, i, k)];
        if (xy_z != x_yz) as.fail(w_as, i, j, k, [&] { return xy_z - x_yz; });
        if (!same_difference(xy_z, x_yz, yx_z, y_xz, l, r)) ls.fail(w_ls, i, j, k, [&] { return (xy_z - x_yz) - (yx_z - y_xz); });
        if (xy_z != outer[at(i, k, j)]) rc.fail(w_rc, i, j, k, [&] { return xy_z - outer[at(i, k, j)]; });
        if (x_yz != y_xz) lc.fail(w_lc, i, j, k, [&] { return x_yz - y_xz; });
      }
    }

  out.left_symmetric = ls.holds;
  out.novikov = ls.holds && rc.holds;
  out.associative = as.holds;
  out.lr = lc.holds && rc.holds;
  out.commutative = co.holds;
  for (auto* w : {&w_ls, &w_rc, &w_lc, &w_as, &w_co})
    out.witnesses.insert(out.witnesses.end(), w->begin(), w->end());
  return out;
}

LieAlgebra commutator_algebra(const ProductTable& p) {
  ProductClassification cls = classify(p);
  if (!cls.left_symmetric) {
    const auto w = cls.witnesses_for(Identity::left_symmetric).front();
    throw MathError("commutator_algebra: product is not left-symmetric at (" + std::to_string(w.i + 1) + "," +
                    std::to_string(w.j + 1) + "," + std::to_string(w.k + 1) + ")");
  }
  const std::size_t n = p.dim();
  Tensor3 c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c.set_slot(i, j, p.product_basis(i, j) - p.product_basis(j, i));
  return LieAlgebra(std::move(c));
}

bool is_complete_novikov(const ProductTable& p) {
  if (!classify(p).novikov) throw MathError("is_complete_novikov: product is not Novikov");
  for (std::size_t i = 0; i < p.dim(); ++i)
    if (!is_nilpotent(right_mult(p, i).matrix())) return false;
  return true;
}

bool is_derivation(const ProductTable& p, const Endomorphism& d) {
  const std::size_t n = p.dim();
  if (d.dim() != n) throw InputError("is_derivation: size mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector ei = unit_vector(n, i), ej = unit_vector(n, j);
      if (d(p.product_basis(i, j)) != multiply(p, d(ei), ej) + multiply(p, ei, d(ej))) return false;
    }
  return true;
}

}  // namespace snla
