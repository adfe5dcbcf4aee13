#include "snla/catalog.hpp"

#include "snla/constructions.hpp"

#include <algorithm>
#include <functional>

namespace snla::catalog {

std::string to_string(Kind k) {
  switch (k) {
    case Kind::four_dim: return "four_dim";
    case Kind::six_dim_nilpotent: return "six_dim_nilpotent";
    case Kind::novikov_associative: return "novikov_associative";
  }
  return "?";
}

std::string Entry::display_name() const {
  if (parameters.empty()) return name;
  std::string out = name + "[";
  bool first = true;
  for (const auto& [k, v] : parameters) {
    if (!first) out += ",";
    out += k + "=" + snla::to_string(v);
    first = false;
  }
  return out + "]";
}

namespace {

// 1-based table builder.
struct Table {
  explicit Table(std::size_t dim) : n(dim) {}

  std::size_t n;
  std::vector<std::tuple<std::size_t, std::size_t, Vector>> products;
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> form;

  Table& p(std::size_t i, std::size_t j, std::initializer_list<std::pair<std::size_t, Scalar>> out) {
    Vector v = zero_vector(n);
    for (const auto& [k, c] : out) v.at(k - 1) += c;
    products.emplace_back(i - 1, j - 1, std::move(v));
    return *this;
  }
  Table& w(std::size_t i, std::size_t j, Scalar c) {
    form.emplace_back(i - 1, j - 1, std::move(c));
    return *this;
  }
};

struct Definition {
  std::string name;
  std::string row;
  Kind kind;
  std::vector<ParameterSpec> params;
  std::function<Table(const Bindings&)> make;
  Expected expected;
};

Expected snla_flags(std::optional<std::size_t> step, bool lr, bool frobenius) {
  Expected e;
  e.snla = true;
  e.nilpotency_step = step;
  e.lr = lr;
  e.frobenius = frobenius;
  return e;
}

const std::vector<Definition>& definitions() {
  static const std::vector<Definition> defs = [] {
    const std::vector<ParameterSpec> lam{{"lambda", {Scalar(0), Scalar(1)}}};
    const std::vector<ParameterSpec> a_param{{"a", {}}};
    const Expected two_step = snla_flags(2, true, false);
    std::vector<Definition> d;

    d.push_back({"rh3", "rh3", Kind::four_dim, {}, [](const Bindings&) {
                   Table t(4);
                   t.p(1, 2, {{3, 1}}).p(2, 2, {{4, -1}});
                   t.w(1, 4, 1).w(2, 3, 1);
                   return t;
                 },
                 snla_flags(2, true, false)});
    d.push_back({"rr3_0", "rr3_0", Kind::four_dim, {}, [](const Bindings&) {
                   Table t(4);
                   t.p(1, 1, {{1, -1}}).p(2, 1, {{2, -1}});
                   t.w(1, 2, 1).w(3, 4, 1);
                   return t;
                 },
                 snla_flags(std::nullopt, false, false)});
    d.push_back({"d4_1", "d4_1", Kind::four_dim, {}, [](const Bindings&) {
                   Table t(4);
                   t.p(1, 2, {{3, 1}}).p(1, 4, {{1, -1}}).p(2, 4, {{2, -1}});
                   t.p(3, 4, {{3, -1}}).p(4, 2, {{2, -1}}).p(4, 4, {{4, -1}});
                   t.w(1, 2, 1).w(3, 4, -1);
                   return t;
                 },
                 snla_flags(std::nullopt, false, true)});
    d.push_back({"r2prime", "r2prime", Kind::four_dim, {}, [](const Bindings&) {
                   Table t(4);
                   t.p(1, 1, {{1, -1}}).p(1, 2, {{2, -1}}).p(2, 1, {{2, -1}}).p(2, 2, {{1, 1}});
                   t.p(3, 1, {{3, -1}}).p(3, 2, {{4, -1}}).p(4, 1, {{4, -1}}).p(4, 2, {{3, 1}});
                   t.w(1, 4, 1).w(2, 3, 1);
                   return t;
                 },
                 snla_flags(std::nullopt, false, true)});

    d.push_back({"L6_18.v1", "L6_18.v1", Kind::six_dim_nilpotent, lam, [](const Bindings& b) {
                   const Scalar l = b.at("lambda");
                   Table t(6);
                   t.p(1, 2, {{4, l / (l - 1)}}).p(1, 3, {{5, (l - 1) / l}});
                   t.p(2, 1, {{4, 1 / (l - 1)}}).p(2, 3, {{6, 1 - l}});
                   t.p(3, 1, {{5, -1 / l}}).p(3, 2, {{6, -l}});
                   t.w(1, 6, 1).w(2, 5, l).w(3, 4, l - 1);
                   return t;
                 },
                 two_step});
    d.push_back({"L6_18.v2", "L6_18.v2", Kind::six_dim_nilpotent, lam, [](const Bindings& b) {
                   const Scalar l = b.at("lambda");
                   const Scalar q = l * l + 1;
                   Table t(6);
                   t.p(1, 1, {{4, -1 / (2 * l)}}).p(1, 2, {{4, Scalar(1, 2)}}).p(2, 1, {{4, Scalar(-1, 2)}});
                   t.p(2, 2, {{4, -1 / (2 * l)}});
                   t.p(1, 3, {{5, 2 * l * l / q}, {6, -2 * l / q}});
                   t.p(2, 3, {{5, 2 * l / q}, {6, 2 * l * l / q}});
                   t.p(3, 1, {{5, (l * l - 1) / q}, {6, -2 * l / q}});
                   t.p(3, 2, {{5, 2 * l / q}, {6, (l * l - 1) / q}});
                   t.w(1, 5, 1).w(1, 6, l).w(2, 5, -l).w(2, 6, 1).w(3, 4, -2 * l);
                   return t;
                 },
                 two_step});
    d.push_back({"L6_18.v3", "L6_18.v3", Kind::six_dim_nilpotent, {}, [](const Bindings&) {
                   Table t(6);
                   t.p(1, 2, {{4, -1}, {5, -2}}).p(1, 3, {{5, -1}});
                   t.p(2, 1, {{4, -2}, {5, -2}}).p(2, 2, {{6, Scalar(1, 2)}});
                   t.p(2, 3, {{6, Scalar(1, 2)}}).p(3, 1, {{5, -2}}).p(3, 2, {{6, Scalar(-1, 2)}});
                   t.w(3, 5, 1).w(1, 6, -1).w(2, 5, 1).w(3, 4, 2);
                   return t;
                 },
                 two_step});
    for (int s : {1, -1}) {
      d.push_back({s > 0 ? "L6_21.plus" : "L6_21.minus", s > 0 ? "L6_21.plus" : "L6_21.minus",
                   Kind::six_dim_nilpotent, {}, [s](const Bindings&) {
                     Table t(6);
                     t.p(1, 1, {{3, 1}}).p(1, 3, {{5, -1}}).p(2, 1, {{4, -1}});
                     t.p(2, 3, {{6, 1}}).p(3, 1, {{5, -1}}).p(4, 1, {{6, -1}});
                     t.w(1, 6, s).w(2, 5, s).w(3, 4, -s);
                     return t;
                   },
                   snla_flags(3, false, false)});
    }
    d.push_back({"L6_23.v1", "L6_23.v1", Kind::six_dim_nilpotent, {}, [](const Bindings&) {
                   Table t(6);
                   t.p(1, 1, {{4, 1}}).p(1, 2, {{5, 1}}).p(2, 2, {{6, -1}}).p(3, 1, {{6, -1}});
                   t.w(1, 6, 1).w(2, 5, 1).w(3, 4, 1);
                   return t;
                 },
                 two_step});
    for (int s : {1, -1}) {
      d.push_back({s > 0 ? "L6_23.v2.plus" : "L6_23.v2.minus", "L6_23.v2", Kind::six_dim_nilpotent, {},
                   [s](const Bindings&) {
                     Table t(6);
                     t.p(1, 2, {{5, 1}}).p(1, 3, {{6, 1}}).p(2, 3, {{4, s}}).p(3, 2, {{4, s}});
                     t.w(1, 4, 1).w(2, 6, s).w(3, 5, s);
                     return t;
                   },
                   two_step});
    }
    d.push_back({"L6_25", "L6_25", Kind::six_dim_nilpotent, {}, [](const Bindings&) {
                   Table t(6);
                   t.p(1, 1, {{5, 1}}).p(2, 1, {{6, -1}});
                   t.w(1, 6, 1).w(2, 4, 1).w(3, 5, -1);
                   return t;
                 },
                 two_step});

    Expected nov_assoc;
    auto three = [&d, &nov_assoc](std::string name, std::vector<ParameterSpec> ps, std::function<Table(const Bindings&)> f) {
      std::string row = name;
      d.push_back({std::move(name), std::move(row), Kind::novikov_associative, std::move(ps), std::move(f), nov_assoc});
    };
    three("A_3_2", {}, [](const Bindings&) {
      Table t(3);
      t.p(1, 1, {{2, 1}});
      return t;
    });
    three("A_3_3", {}, [](const Bindings&) {
      Table t(3);
      t.p(1, 1, {{2, 1}}).p(1, 2, {{3, 1}}).p(2, 1, {{3, 1}});
      return t;
    });
    three("A_3_4", {}, [](const Bindings&) {
      Table t(3);
      t.p(1, 1, {{3, 1}}).p(2, 2, {{3, 1}});
      return t;
    });
    three("A_3_5", {}, [](const Bindings&) {
      Table t(3);
      t.p(1, 1, {{3, -1}}).p(2, 2, {{3, 1}});
      return t;
    });
    three("g_3_1", a_param, [](const Bindings& b) {
      const Scalar a = b.at("a");
      Table t(3);
      t.p(1, 1, {{2, 1}}).p(1, 2, {{3, a + 1}}).p(2, 1, {{3, a}});
      return t;
    });
    three("g_3_2", a_param, [](const Bindings& b) {
      const Scalar a = b.at("a");
      Table t(3);
      t.p(1, 1, {{3, a}}).p(1, 2, {{3, 1}}).p(2, 2, {{3, 1}});
      return t;
    });
    three("g_3_3", {}, [](const Bindings&) {
      Table t(3);
      t.p(1, 2, {{3, Scalar(1, 2)}}).p(2, 1, {{3, Scalar(-1, 2)}});
      return t;
    });
    return d;
  }();
  return defs;
}

const Definition& find(const std::string& name) {
  for (const auto& d : definitions())
    if (d.name == name) return d;
  throw InputError("unknown catalog entry '" + name + "'");
}

const std::vector<Scalar>& sample_values() {
  static const std::vector<Scalar> v{Scalar(-2), Scalar(-1, 2), Scalar(1, 2), Scalar(2), Scalar(3)};
  return v;
}

bool excluded(const ParameterSpec& p, const Scalar& v) {
  return std::find(p.excluded.begin(), p.excluded.end(), v) != p.excluded.end();
}

std::vector<Scalar> samples_for(const ParameterSpec& p) {
  std::vector<Scalar> out;
  for (const auto& v : sample_values())
    if (!excluded(p, v)) out.push_back(v);
  return out;
}

// x.y - y.x without assuming left-symmetry; Jacobi is checked separately.
Tensor3 commutator_constants(const ProductTable& p) {
  const std::size_t n = p.dim();
  Tensor3 c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c.set_slot(i, j, p.product_basis(i, j) - p.product_basis(j, i));
  return c;
}

}  // namespace

std::vector<std::string> list() {
  std::vector<std::string> out;
  for (const auto& d : definitions()) out.push_back(d.name);
  return out;
}

std::vector<ParameterSpec> parameters(const std::string& name) { return find(name).params; }

std::vector<Bindings> default_samples(const std::string& name) {
  const Definition& d = find(name);
  std::vector<Bindings> out{Bindings{}};
  for (const auto& p : d.params) {
    std::vector<Bindings> next;
    for (const auto& b : out)
      for (const auto& v : samples_for(p)) {
        Bindings nb = b;
        nb[p.name] = v;
        next.push_back(std::move(nb));
      }
    out = std::move(next);
  }
  return out;
}

const std::vector<std::string>& known_errata() {
  static const std::vector<std::string> names{"L6_18.v3", "L6_23.v2.plus", "L6_23.v2.minus", "L6_25", "g_3_1"};
  return names;
}

Entry build(const std::string& name, const Bindings& bindings) {
  const Definition& d = find(name);
  Bindings bound;
  for (const auto& [k, v] : bindings) {
    auto it = std::find_if(d.params.begin(), d.params.end(), [&k](const ParameterSpec& p) { return p.name == k; });
    if (it == d.params.end()) throw InputError("entry '" + name + "' has no parameter '" + k + "'");
    if (excluded(*it, v)) throw InputError("parameter " + k + " = " + snla::to_string(v) + " is excluded for " + name);
    bound[k] = v;
  }
  for (const auto& p : d.params)
    if (!bound.count(p.name)) bound[p.name] = samples_for(p).front();

  Table t = d.make(bound);
  Entry e;
  e.name = d.name;
  e.row = d.row;
  e.kind = d.kind;
  e.parameters = bound;
  e.printed = ProductTable::from_entries(t.n, t.products);
  e.product = e.printed;
  e.expected = d.expected;
  if (d.kind == Kind::novikov_associative) {
    ProductClassification cls = classify(e.printed);
    if (!cls.associative) {
      const IdentityWitness w = cls.witnesses_for(Identity::associative).front();
      e.erratum = Erratum{e.printed, e.printed, {},
                          "not associative: ass(e" + std::to_string(w.i + 1) + ",e" + std::to_string(w.j + 1) +
                              ",e" + std::to_string(w.k + 1) + ") = " + snla::to_string(w.residual)};
    }
    return e;
  }

  e.lie = LieAlgebra::raw(commutator_constants(e.printed));
  e.omega = BilinearForm::two_form(t.n, t.form);
  if (!check_jacobi(*e.lie).ok || !is_symplectic(*e.lie, *e.omega).ok()) return e;

  e.product = associated_product(*e.lie, *e.omega);
  if (e.product != e.printed) {
    Erratum err{e.printed, e.product, {}, "associated product differs from the printed table"};
    for (std::size_t i = 0; i < t.n; ++i)
      for (std::size_t j = 0; j < t.n; ++j)
        if (e.printed.product_basis(i, j) != e.product.product_basis(i, j))
          err.differences.push_back({i, j, e.printed.product_basis(i, j), e.product.product_basis(i, j)});
    e.erratum = std::move(err);
  }
  return e;
}

std::vector<Entry> build_all() {
  std::vector<Entry> out;
  for (const auto& name : list())
    for (const auto& b : default_samples(name)) out.push_back(build(name, b));
  return out;
}

bool EntryVerification::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

std::string step_text(const std::optional<std::size_t>& s) {
  return s ? std::to_string(*s) : std::string("not nilpotent");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

EntryVerification verify_entry(const Entry& e) {
  EntryVerification v;
  v.entry = e.display_name();
  auto add = [&v](std::string name, bool pass, std::string detail = {}) {
    v.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  const bool listed = std::find(known_errata().begin(), known_errata().end(), e.name) != known_errata().end();
  v.erratum_recorded = e.erratum.has_value();

  if (e.kind == Kind::novikov_associative) {
    ProductClassification cls = classify(e.product);
    add("novikov", cls.novikov);
    if (cls.associative)
      add("associative", !listed, listed ? "listed as erratum but associative" : "");
    else
      add("associative", listed, e.erratum->note + (listed ? ", known erratum" : ""));
    if (!cls.left_symmetric) {
      add("cotangent_snla", false, "product is not left-symmetric");
      return v;
    }
    CotangentResult ct = cotangent(e.product);
    bool snla = snla_report(ct.lie, ct.omega).is_snla;
    // The cotangent is an SNLA exactly for Novikov associative bases.
    add("cotangent_criterion", snla == (cls.novikov && cls.associative), "cotangent SNLA " + yes_no(snla));
    add("cotangent_snla", snla || listed, "cotangent SNLA " + yes_no(snla) + (snla ? "" : ", known erratum"));
    return v;
  }

  const LieAlgebra& lie = *e.lie;
  const BilinearForm& omega = *e.omega;
  JacobiReport jac = check_jacobi(lie);
  add("jacobi", jac.ok);
  SymplecticReport sym = is_symplectic(lie, omega);
  add("symplectic", sym.ok(), sym.ok() ? "" : "fails " + sym.failure());
  if (!jac.ok || !sym.ok()) return v;

  if (!e.erratum) {
    add("round_trip", !listed, listed ? "listed as erratum but round-trips" : "");
  } else {
    add("round_trip", listed,
        std::to_string(e.erratum->differences.size()) + " slot(s) differ" + (listed ? ", known erratum" : ""));
  }

  SnlaReport rep = snla_report(lie, omega);
  if (e.expected.snla) add("snla", rep.is_snla == *e.expected.snla, "is_snla " + yes_no(rep.is_snla));
  add("novikov_iff_associative", rep.theorem1_consistent);
  if (rep.is_snla) {
    add("two_step_solvable", rep.two_step_solvable.value_or(false));
    add("derived_isotropic", rep.derived_isotropic.value_or(false));
    add("lr_iff_two_step", rep.lr_iff_two_step.value_or(false));
    add("right_mult_of_brackets_vanishes", rep.right_mult_of_brackets_vanishes.value_or(false));
    if (rep.nilpotency_bound) add("nilpotency_bound", *rep.nilpotency_bound);
  }
  if (e.expected.nilpotency_step)
    add("nilpotency_step", rep.nilpotency_step == *e.expected.nilpotency_step,
        "got " + step_text(rep.nilpotency_step) + ", expected " + step_text(*e.expected.nilpotency_step));
  if (e.expected.lr) add("lr", rep.classification.lr == *e.expected.lr, "lr " + yes_no(rep.classification.lr));
  if (e.expected.frobenius) {
    bool frob = exact_primitive(lie, omega).has_value();
    add("frobenius", frob == *e.expected.frobenius, "exact form " + yes_no(frob));
  }
  if (e.kind == Kind::six_dim_nilpotent)
    add("step_at_most_3", rep.nilpotency_step && *rep.nilpotency_step <= 3, "got " + step_text(rep.nilpotency_step));
  return v;
}

}  // namespace snla::catalog
