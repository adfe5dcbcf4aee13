#include "snla/cli.hpp"

#include "snla/catalog.hpp"
#include "snla/constructions.hpp"
#include "snla/geometry.hpp"
#include "snla/json_io.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

namespace snla::cli {

namespace {

using io::Json;

struct Ctx {
  bool json = false;
  std::ostream& out;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string fmt_vec(const Vector& v, const std::vector<std::string>& labels) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    Scalar c = v[k];
    bool neg = c < 0;
    if (neg) c = -c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (c != 1) s += to_string(c) + " ";
    s += labels[k];
  }
  return s.empty() ? "0" : s;
}

std::string fmt_form(const BilinearForm& w, const std::vector<std::string>& labels) {
  std::string s;
  for (std::size_t a = 0; a < w.dim(); ++a)
    for (std::size_t b = a + 1; b < w.dim(); ++b) {
      Scalar c = w.at(a, b);
      if (c == 0) continue;
      bool neg = c < 0;
      if (neg) c = -c;
      if (s.empty())
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      if (c != 1) s += to_string(c) + " ";
      s += labels[a] + "^" + labels[b];
    }
  return s.empty() ? "0" : s;
}

std::string fmt_step(const std::optional<std::size_t>& s, const char* none) {
  return s ? std::to_string(*s) : std::string(none);
}

void print_matrix(std::ostream& out, const Matrix& m, const std::string& indent) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << indent << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? ", " : "") << to_string(m(r, c));
    out << "]\n";
  }
}

void print_algebra(std::ostream& out, const LieAlgebra& lie, const std::optional<BilinearForm>& omega) {
  const auto& l = lie.labels();
  out << "dimension " << lie.dim() << "\n";
  bool any = false;
  for (std::size_t i = 0; i < lie.dim(); ++i)
    for (std::size_t j = i + 1; j < lie.dim(); ++j) {
      Vector v = lie.bracket_basis(i, j);
      if (is_zero(v)) continue;
      out << "  [" << l[i] << "," << l[j] << "] = " << fmt_vec(v, l) << "\n";
      any = true;
    }
  if (!any) out << "  abelian\n";
  if (omega) out << "omega = " << fmt_form(*omega, l) << "\n";
}

void print_product(std::ostream& out, const ProductTable& p, const std::vector<std::string>& l) {
  bool any = false;
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = 0; j < p.dim(); ++j) {
      Vector v = p.product_basis(i, j);
      if (is_zero(v)) continue;
      out << "  " << l[i] << "." << l[j] << " = " << fmt_vec(v, l) << "\n";
      any = true;
    }
  if (!any) out << "  zero product\n";
}

/// Witnesses of the identities in the left-symmetric / Novikov / associative chain.
void print_witnesses(std::ostream& out, const ProductClassification& c, const std::vector<std::string>& l) {
  for (const auto& w : c.witnesses) {
    if (w.identity == Identity::left_commutative || w.identity == Identity::commutative) continue;
    out << "  " << to_string(w.identity) << " fails at (" << l[w.i] << "," << l[w.j];
    if (w.identity != Identity::commutative) out << "," << l[w.k];
    out << "): residual " << fmt_vec(w.residual, l) << "\n";
  }
}

void emit(Ctx& c, const Json& j) { c.out << j.dump(2) << "\n"; }

// ---- loading ---------------------------------------------------------------

io::AlgebraFile load_symplectic(const std::string& file) {
  io::AlgebraFile af = io::algebra_from_json(io::read_json_file(file));
  if (!af.omega) throw InputError(file + ": omega: missing");
  return af;
}

/// Prints the failing axiom and returns true when the pair is not a symplectic Lie algebra.
bool refuse_non_symplectic(Ctx& c, const io::AlgebraFile& af) {
  JacobiReport jac = check_jacobi(af.lie);
  if (!jac.ok) {
    if (c.json) {
      emit(c, Json{{"jacobi", io::jacobi_report_to_json(jac)}});
    } else {
      c.out << "Jacobi identity fails\n";
      const auto& l = af.lie.labels();
      for (const auto& t : jac.violating_triples)
        c.out << "  (" << l[t.i] << "," << l[t.j] << "," << l[t.k] << "): residual " << fmt_vec(t.residual, l)
              << "\n";
    }
    return true;
  }
  SymplecticReport sym = is_symplectic(af.lie, *af.omega);
  if (!sym.ok()) {
    if (c.json) {
      emit(c, Json{{"jacobi", io::jacobi_report_to_json(jac)}, {"symplectic", io::symplectic_report_to_json(sym)}});
    } else {
      c.out << "not symplectic: " << sym.failure() << " fails\n";
      if (sym.cocycle_witness) {
        const auto& l = af.lie.labels();
        auto [a, b, d] = *sym.cocycle_witness;
        c.out << "  cocycle witness (" << l[a] << "," << l[b] << "," << l[d] << ")\n";
      }
    }
    return true;
  }
  return false;
}

LieAlgebra checked(const LieAlgebra& raw) { return LieAlgebra(raw.constants(), raw.labels()); }

// ---- commands --------------------------------------------------------------

int cmd_check(Ctx& c, const std::string& file) {
  io::AlgebraFile af = load_symplectic(file);
  if (refuse_non_symplectic(c, af)) return math_failure;
  LieAlgebra lie = checked(af.lie);
  SnlaReport r = snla_report(lie, *af.omega);
  const bool pass = r.is_snla && r.consistent();
  if (c.json) {
    emit(c, Json{{"algebra", io::algebra_to_json(lie, af.omega)}, {"report", io::snla_report_to_json(r)}});
    return pass ? ok : math_failure;
  }
  const auto& l = lie.labels();
  c.out << "SNLA: " << yes_no(r.is_snla) << "; associative: " << yes_no(r.classification.associative)
        << "; solvable step " << fmt_step(r.solvability_step, "none") << "\n";
  c.out << "dimension " << r.dim << ", derived algebra dimension " << r.derived_dim << "\n";
  c.out << "nilpotency step: " << fmt_step(r.nilpotency_step, "not nilpotent") << "\n";
  const auto& k = r.classification;
  c.out << "left-symmetric " << yes_no(k.left_symmetric) << ", novikov " << yes_no(k.novikov) << ", associative "
        << yes_no(k.associative) << ", lr " << yes_no(k.lr) << ", commutative " << yes_no(k.commutative) << "\n";
  c.out << "novikov <=> associative: " << (r.theorem1_consistent ? "holds" : "VIOLATED") << "\n";
  auto opt = [&c](const char* name, const std::optional<bool>& v) {
    if (v) c.out << name << ": " << (*v ? "holds" : "VIOLATED") << "\n";
  };
  opt("two-step solvable", r.two_step_solvable);
  opt("derived algebra isotropic", r.derived_isotropic);
  opt("lr <=> two-step nilpotent", r.lr_iff_two_step);
  opt("R_[x,y] = 0", r.right_mult_of_brackets_vanishes);
  opt("nilpotency bound", r.nilpotency_bound);
  if (!k.novikov || !k.associative) {
    c.out << "witnesses:\n";
    print_witnesses(c.out, k, l);
  }
  return pass ? ok : math_failure;
}

int cmd_product(Ctx& c, const std::string& file) {
  io::AlgebraFile af = load_symplectic(file);
  if (refuse_non_symplectic(c, af)) return math_failure;
  LieAlgebra lie = checked(af.lie);
  ProductTable p = associated_product(lie, *af.omega);
  if (c.json) {
    emit(c, io::product_to_json(p));
  } else {
    c.out << "associated product:\n";
    print_product(c.out, p, lie.labels());
  }
  return ok;
}

int cmd_curvature(Ctx& c, const std::string& file) {
  io::AlgebraFile af = load_symplectic(file);
  if (refuse_non_symplectic(c, af)) return math_failure;
  LieAlgebra lie = checked(af.lie);
  const BilinearForm& omega = *af.omega;
  const std::size_t n = lie.dim();

  Connection conn = symplectic_connection(lie, omega);
  Curvature k = curvature(conn, lie);
  BilinearForm ric = ricci(conn, lie);
  ProductTable p = associated_product(lie, omega);
  bool symplectize_matches = symplectize(affine_connection(p), lie, omega) == conn;
  SnlaReport rep = snla_report(lie, omega);

  std::vector<std::pair<std::string, bool>> checks{{"symplectize(affine) = symplectic connection", symplectize_matches}};
  std::optional<CompletenessReport> comp;
  if (rep.is_snla) {
    const Scalar c29(-2, 9);
    bool curv = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (k.at(i, j) != c29 * ad(lie, lie.bracket_basis(i, j)).matrix()) curv = false;
    checks.emplace_back("K(x,y) = -2/9 ad_[x,y]", curv);
    checks.emplace_back("ric = 2/9 Killing", ric.matrix() == Scalar(2, 9) * killing_form(lie).matrix());
    bool two_step = rep.nilpotency_step && *rep.nilpotency_step <= 2;
    checks.emplace_back("flat <=> two-step nilpotent", k.is_zero() == two_step);
    comp = completeness_and_biinvariance(lie, omega);
    checks.emplace_back("complete <=> nilpotent", comp->agreement);
    checks.emplace_back("L_x ad_x = ad_x L_x = 0", comp->left_ad_vanishes);
    checks.emplace_back("R_x^k = L_x^k + (-1)^k ad_x^k", comp->corrected_power_identity);
  }
  bool pass = true;
  for (const auto& [name, holds] : checks) pass = pass && holds;

  if (c.json) {
    Json j;
    j["connection"] = io::connection_to_json(conn);
    Json curv = Json::array();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t jj = i + 1; jj < n; ++jj)
        if (!k.at(i, jj).is_zero()) curv.push_back(Json{{"i", i + 1}, {"j", jj + 1}, {"matrix", io::to_json(k.at(i, jj))}});
    j["curvature"] = std::move(curv);
    j["flat"] = k.is_zero();
    j["ricci"] = io::to_json(ric.matrix());
    j["is_snla"] = rep.is_snla;
    j["completeness"] = comp ? io::completeness_to_json(*comp) : Json(nullptr);
    Json cj = Json::array();
    for (const auto& [name, holds] : checks) cj.push_back(Json{{"name", name}, {"holds", holds}});
    j["checks"] = std::move(cj);
    emit(c, j);
    return pass ? ok : math_failure;
  }

  const auto& l = lie.labels();
  c.out << "symplectic connection (nabla_x y = (ad_x y - ad*_x y)/3):\n";
  bool any = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = conn.gamma.slot(i, j);
      if (is_zero(v)) continue;
      c.out << "  nabla_" << l[i] << " " << l[j] << " = " << fmt_vec(v, l) << "\n";
      any = true;
    }
  if (!any) c.out << "  zero\n";
  c.out << "curvature: " << (k.is_zero() ? "flat" : "not flat") << "\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!k.at(i, j).is_zero()) {
        c.out << "  K(" << l[i] << "," << l[j] << "):\n";
        print_matrix(c.out, k.at(i, j), "    ");
      }
  c.out << "ricci:\n";
  print_matrix(c.out, ric.matrix(), "  ");
  if (comp)
    c.out << "complete: " << yes_no(comp->complete) << ", nilpotent: " << yes_no(comp->nilpotent)
          << ", bi-invariant: " << yes_no(comp->bi_invariant) << "\n";
  for (const auto& [name, holds] : checks) c.out << name << ": " << (holds ? "holds" : "VIOLATED") << "\n";
  return pass ? ok : math_failure;
}

Vector parse_ideal_vector(const std::string& text, const LieAlgebra& lie) {
  const auto& l = lie.labels();
  for (std::size_t k = 0; k < l.size(); ++k)
    if (l[k] == text) return unit_vector(lie.dim(), k);
  Vector v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) v.push_back(parse_scalar(part));
  if (v.size() != lie.dim())
    throw InputError("--ideal " + text + ": expected a basis label or " + std::to_string(lie.dim()) +
                     " comma-separated coefficients");
  return v;
}

void print_reduction(Ctx& c, const Reduction& red, const std::vector<std::string>& parent_labels) {
  c.out << "ideal:\n";
  for (const auto& v : red.ideal.basis()) c.out << "  " << fmt_vec(v, parent_labels) << "\n";
  c.out << "orthogonal dimension " << red.orthogonal.dim() << "\n";
  c.out << "reduced basis:\n";
  for (std::size_t a = 0; a < red.lie.dim(); ++a)
    c.out << "  " << red.lie.labels()[a] << " <- " << fmt_vec(red.lift.column(a), parent_labels) << "\n";
  c.out << "reduced algebra: ";
  print_algebra(c.out, red.lie, red.omega);
}

int cmd_reduce(Ctx& c, const std::string& file, const std::vector<std::string>& ideal_specs) {
  io::AlgebraFile af = load_symplectic(file);
  if (refuse_non_symplectic(c, af)) return math_failure;
  LieAlgebra lie = checked(af.lie);
  Subspace ideal;
  if (ideal_specs.empty()) {
    std::vector<Subspace> lines = ideal_lines(lie);
    ideal = lines.empty() ? derived_subalgebra(lie) : lines.front();
  } else {
    std::vector<Vector> vs;
    for (const auto& s : ideal_specs) vs.push_back(parse_ideal_vector(s, lie));
    ideal = echelonize(lie.dim(), vs);
  }
  Reduction red = reduce(lie, *af.omega, ideal);
  SnlaReport base = snla_report(lie, *af.omega);
  SnlaReport after = snla_report(red.lie, red.omega);
  // Reductions of SNLAs stay SNLAs.
  const bool pass = !base.is_snla || after.is_snla;
  if (c.json) {
    Json ib = Json::array();
    for (const auto& v : red.ideal.basis()) ib.push_back(io::to_json(v));
    emit(c, Json{{"ideal", std::move(ib)},
                 {"lift", io::to_json(red.lift)},
                 {"reduced", io::algebra_to_json(red.lie, red.omega)},
                 {"input_is_snla", base.is_snla},
                 {"reduced_is_snla", after.is_snla}});
  } else {
    print_reduction(c, red, lie.labels());
    c.out << "input SNLA: " << yes_no(base.is_snla) << "; reduced SNLA: " << yes_no(after.is_snla) << "\n";
  }
  return pass ? ok : math_failure;
}

int cmd_oxidize(Ctx& c, const std::string& file, const std::string& data_file) {
  io::AlgebraFile af = load_symplectic(file);
  if (refuse_non_symplectic(c, af)) return math_failure;
  LieAlgebra lie = checked(af.lie);
  OxidationData data = io::oxidation_data_from_json(io::read_json_file(data_file), lie.dim());
  SymplecticPair ox = oxidize(lie, *af.omega, data);
  SnlaReport r = snla_report(ox.lie, ox.omega);

  std::optional<OxidationConditionsReport> cond;
  if (data.zeta && snla_report(lie, *af.omega).is_snla) cond = oxidation_conditions(lie, *af.omega, data.phi, *data.zeta);

  if (c.json) {
    emit(c, Json{{"oxidation", io::algebra_to_json(ox.lie, ox.omega)},
                 {"is_snla", r.is_snla},
                 {"conditions", cond ? io::conditions_report_to_json(*cond) : Json(nullptr)}});
  } else {
    c.out << "oxidation: ";
    print_algebra(c.out, ox.lie, ox.omega);
    c.out << "SNLA: " << yes_no(r.is_snla) << "\n";
    if (cond) {
      for (const auto& chk : cond->checks()) c.out << "  " << chk.name << ": " << (chk.holds ? "holds" : "fails") << "\n";
      c.out << "conditions hold: " << yes_no(cond->conditions_hold)
            << "; divergence from direct check: " << yes_no(cond->divergence) << "\n";
    }
  }
  return ok;
}

int cmd_decompose(Ctx& c, const std::string& file) {
  io::AlgebraFile af = load_symplectic(file);
  if (refuse_non_symplectic(c, af)) return math_failure;
  LieAlgebra lie = checked(af.lie);
  const BilinearForm& omega = *af.omega;
  OxidationDecomposition d = oxidation_decompose(lie, omega);
  SymplecticPair ox = oxidize(d.reduced.lie, d.reduced.omega, d.data);
  SymplecticPair adapted = in_basis(lie, omega, d.adapted_basis);
  const bool round_trip = ox.lie == adapted.lie && ox.omega == adapted.omega;

  std::optional<OxidationConditionsReport> cond;
  std::optional<ZetaCandidateAudit> audit;
  if (d.data.zeta && snla_report(lie, omega).is_snla) {
    cond = oxidation_conditions(d.reduced.lie, d.reduced.omega, d.data.phi, *d.data.zeta);
    audit = audit_zeta_candidate(d.reduced.lie, d.reduced.omega, d.data.phi, *d.data.zeta);
  }

  if (c.json) {
    Json j;
    j["h"] = io::to_json(d.h);
    j["xi"] = io::to_json(d.xi);
    j["adapted_basis"] = io::to_json(d.adapted_basis);
    j["reduced"] = io::algebra_to_json(d.reduced.lie, d.reduced.omega);
    j["data"] = io::oxidation_data_to_json(d.data);
    j["round_trip"] = round_trip;
    j["conditions"] = cond ? io::conditions_report_to_json(*cond) : Json(nullptr);
    if (audit)
      j["zeta_candidate"] = Json{{"hypotheses_hold", audit->hypotheses_hold},
                                 {"minus_zeta_solves", audit->solves_defining_sign},
                                 {"zeta_solves", audit->zeta_form_solves}};
    else
      j["zeta_candidate"] = nullptr;
    emit(c, j);
    return round_trip ? ok : math_failure;
  }
  const auto& l = lie.labels();
  c.out << "h = " << fmt_vec(d.h, l) << "\nxi = " << fmt_vec(d.xi, l) << "\n";
  print_reduction(c, d.reduced, l);
  c.out << "phi:\n";
  print_matrix(c.out, d.data.phi.matrix(), "  ");
  c.out << "lambda = " << to_string(d.data.lambda.coefficients) << "\n";
  c.out << "zeta = " << (d.data.zeta ? fmt_vec(*d.data.zeta, d.reduced.lie.labels()) : std::string("none")) << "\n";
  c.out << "round trip: " << (round_trip ? "exact" : "FAILED") << "\n";
  if (cond) {
    for (const auto& chk : cond->checks()) c.out << "  " << chk.name << ": " << (chk.holds ? "holds" : "fails") << "\n";
    c.out << "conditions hold: " << yes_no(cond->conditions_hold) << "; oxidation SNLA: "
          << (cond->oxidation_is_snla ? yes_no(*cond->oxidation_is_snla) : std::string("not a Lie algebra"))
          << "; divergence: " << yes_no(cond->divergence) << "\n";
  }
  if (audit)
    c.out << "lambda = omega(-zeta, .) solves: " << yes_no(audit->solves_defining_sign)
          << "; lambda = omega(zeta, .) solves: " << yes_no(audit->zeta_form_solves) << "\n";
  return round_trip ? ok : math_failure;
}

int cmd_cotangent(Ctx& c, const std::string& file) {
  ProductTable h = io::product_from_json(io::read_json_file(file));
  ProductClassification hc = classify(h);
  CotangentResult ct = cotangent(h);
  ProductTable assoc = associated_product(ct.lie, ct.omega);
  SnlaReport r = snla_report(ct.lie, ct.omega);
  const bool matches = assoc == ct.expected;
  const bool criterion = r.is_snla == (hc.novikov && hc.associative);
  const bool pass = matches && criterion;
  if (c.json) {
    emit(c, Json{{"cotangent", io::algebra_to_json(ct.lie, ct.omega)},
                 {"product", io::product_to_json(assoc)},
                 {"expected_product_matches", matches},
                 {"base_novikov", hc.novikov},
                 {"base_associative", hc.associative},
                 {"is_snla", r.is_snla},
                 {"criterion_holds", criterion}});
    return pass ? ok : math_failure;
  }
  c.out << "cotangent: ";
  print_algebra(c.out, ct.lie, ct.omega);
  c.out << "associated product:\n";
  print_product(c.out, assoc, ct.lie.labels());
  c.out << "matches the expected product: " << yes_no(matches) << "\n";
  c.out << "base novikov " << yes_no(hc.novikov) << ", associative " << yes_no(hc.associative) << "; SNLA: "
        << yes_no(r.is_snla) << "\n";
  c.out << "SNLA <=> base novikov and associative: " << (criterion ? "holds" : "VIOLATED") << "\n";
  return pass ? ok : math_failure;
}

int cmd_irreducible(Ctx& c, std::size_t h, std::size_t m, const std::string& lam, const std::string& lambar) {
  auto parse = [h, m](const std::string& text, const char* name) {
    if (text.empty()) return Matrix(h, m);
    return io::matrix_from_json(io::parse_json(text, name), h, m, name);
  };
  Matrix l = parse(lam, "--lambda"), lb = parse(lambar, "--lambdabar");
  SymplecticPair fam = irreducible_family(h, m, l, lb);
  SnlaReport r = snla_report(fam.lie, fam.omega);
  const bool zero = l.is_zero() && lb.is_zero();
  const bool pass = r.is_snla == zero;
  if (c.json) {
    emit(c, Json{{"algebra", io::algebra_to_json(fam.lie, fam.omega)},
                 {"report", io::snla_report_to_json(r)},
                 {"snla_iff_zero_parameters", pass}});
    return pass ? ok : math_failure;
  }
  print_algebra(c.out, fam.lie, fam.omega);
  c.out << "SNLA: " << yes_no(r.is_snla) << "\n";
  if (!r.is_snla) {
    c.out << "witnesses:\n";
    print_witnesses(c.out, r.classification, fam.lie.labels());
  }
  return pass ? ok : math_failure;
}

catalog::Bindings parse_params(const std::string& text) {
  catalog::Bindings b;
  if (text.empty()) return b;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("--params: expected name=value, got '" + part + "'");
    b[part.substr(0, eq)] = parse_scalar(part.substr(eq + 1));
  }
  return b;
}

/// The given bindings restricted to the entry's parameters; default samples otherwise.
std::vector<catalog::Bindings> bindings_for(const std::string& name, const catalog::Bindings& given) {
  catalog::Bindings mine;
  for (const auto& p : catalog::parameters(name))
    if (auto it = given.find(p.name); it != given.end()) mine[p.name] = it->second;
  if (mine.empty()) return catalog::default_samples(name);
  return {mine};
}

void check_param_names(const catalog::Bindings& given) {
  for (const auto& [k, v] : given) {
    bool known = false;
    for (const auto& name : catalog::list())
      for (const auto& p : catalog::parameters(name)) known = known || p.name == k;
    if (!known) throw InputError("--params: no catalog entry has a parameter '" + k + "'");
  }
}

int cmd_catalog_list(Ctx& c) {
  Json arr = Json::array();
  for (const auto& name : catalog::list()) {
    catalog::Entry e = catalog::build(name);
    Json params = Json::array();
    for (const auto& p : catalog::parameters(name)) params.push_back(p.name);
    arr.push_back(Json{{"name", name}, {"kind", catalog::to_string(e.kind)}, {"dim", e.printed.dim()},
                       {"parameters", std::move(params)}});
    if (!c.json) {
      c.out << name << "  " << catalog::to_string(e.kind) << "  dim " << e.printed.dim();
      for (const auto& p : catalog::parameters(name)) c.out << "  " << p.name;
      c.out << "\n";
    }
  }
  if (c.json) emit(c, arr);
  return ok;
}

int cmd_catalog_show(Ctx& c, const std::string& name, const catalog::Bindings& given) {
  catalog::Entry e = catalog::build(name, given);
  if (c.json) {
    emit(c, io::entry_to_json(e));
    return ok;
  }
  std::vector<std::string> labels = e.lie ? e.lie->labels() : default_labels(e.printed.dim());
  c.out << e.display_name() << " (" << catalog::to_string(e.kind) << ")\n";
  c.out << "printed product:\n";
  print_product(c.out, e.printed, labels);
  if (e.lie) {
    c.out << "Lie algebra: ";
    print_algebra(c.out, *e.lie, e.omega);
  }
  if (e.erratum) {
    c.out << "erratum, computed product:\n";
    print_product(c.out, e.product, labels);
    for (const auto& d : e.erratum->differences)
      c.out << "  " << labels[d.i] << "." << labels[d.j] << ": printed " << fmt_vec(d.printed, labels)
            << ", computed " << fmt_vec(d.computed, labels) << "\n";
  }
  return ok;
}

int cmd_catalog_verify(Ctx& c, const catalog::Bindings& given) {
  check_param_names(given);
  Json arr = Json::array();
  bool all = true;
  std::size_t count = 0, errata = 0;
  for (const auto& name : catalog::list())
    for (const auto& b : bindings_for(name, given)) {
      catalog::EntryVerification v = catalog::verify_entry(catalog::build(name, b));
      all = all && v.ok();
      ++count;
      if (v.erratum_recorded) ++errata;
      if (c.json) {
        arr.push_back(io::verification_to_json(v));
        continue;
      }
      c.out << (v.ok() ? "ok    " : "FAIL  ") << v.entry << (v.erratum_recorded ? "  (erratum recorded)" : "") << "\n";
      for (const auto& chk : v.checks)
        if (!chk.pass) c.out << "      " << chk.name << ": " << chk.detail << "\n";
    }
  if (c.json) {
    emit(c, Json{{"entries", std::move(arr)}, {"all_ok", all}, {"errata", errata}});
  } else {
    c.out << count << " entries, " << errata << " with recorded errata, " << (all ? "all checks pass" : "FAILURES")
          << "\n";
  }
  return all ? ok : math_failure;
}

int cmd_catalog_dump(Ctx& c) {
  Json arr = Json::array();
  for (const auto& e : catalog::build_all()) {
    Json j = e.lie ? io::algebra_to_json(*e.lie, e.omega) : io::product_to_json(e.product);
    arr.push_back(Json{{"name", e.display_name()}, {"data", std::move(j)}});
  }
  emit(c, arr);
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on symplectic Lie algebras and their left-symmetric products", "snla"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  std::string file, data_file, name, params, lam, lambar;
  std::vector<std::string> ideals;
  std::size_t h = 0, m = 0;

  auto* check = app.add_subcommand("check", "Full report on a symplectic Lie algebra");
  check->add_option("file", file, "Algebra JSON")->required();
  auto* product = app.add_subcommand("product", "Associated left-symmetric product");
  product->add_option("file", file, "Algebra JSON")->required();
  auto* curv = app.add_subcommand("curvature", "Symplectic connection, curvature and Ricci");
  curv->add_option("file", file, "Algebra JSON")->required();
  auto* red = app.add_subcommand("reduce", "Symplectic reduction by an isotropic ideal");
  red->add_option("file", file, "Algebra JSON")->required();
  red->add_option("--ideal", ideals, "Spanning vector: a basis label or comma-separated coefficients");
  auto* ox = app.add_subcommand("oxidize", "Central symplectic oxidation");
  ox->add_option("file", file, "Algebra JSON")->required();
  ox->add_option("--data", data_file, "Oxidation data JSON")->required();
  auto* dec = app.add_subcommand("decompose", "Write an algebra with center as an oxidation of its reduction");
  dec->add_option("file", file, "Algebra JSON")->required();
  auto* cot = app.add_subcommand("cotangent", "Cotangent symplectic Lie algebra of a left-symmetric product");
  cot->add_option("file", file, "Product JSON")->required();
  auto* irr = app.add_subcommand("irreducible", "Irreducible family with rotation parameters");
  irr->set_help_flag("--help", "Print this help message and exit");
  irr->add_option("--h", h, "Number of f, fbar pairs")->required();
  irr->add_option("--m", m, "Number of rotation planes")->required();
  irr->add_option("--lambda", lam, "h x m nested JSON array");
  irr->add_option("--lambdabar", lambar, "h x m nested JSON array");

  auto* cat = app.add_subcommand("catalog", "Built-in tables");
  cat->require_subcommand(1);
  cat->add_option("--params", params, "Parameter bindings, e.g. lambda=1/2,a=3");
  auto* cat_list = cat->add_subcommand("list", "List entries");
  auto* cat_show = cat->add_subcommand("show", "Show one entry");
  cat_show->add_option("name", name, "Entry name")->required();
  auto* cat_verify = cat->add_subcommand("verify", "Verify every entry");
  auto* cat_dump = cat->add_subcommand("dump", "All entries at default parameters as JSON");
  for (auto* s : {cat_list, cat_show, cat_verify, cat_dump}) s->fallthrough();

  std::vector<std::string> argv_store{"snla"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  Ctx ctx{json, out};
  try {
    if (*check) return cmd_check(ctx, file);
    if (*product) return cmd_product(ctx, file);
    if (*curv) return cmd_curvature(ctx, file);
    if (*red) return cmd_reduce(ctx, file, ideals);
    if (*ox) return cmd_oxidize(ctx, file, data_file);
    if (*dec) return cmd_decompose(ctx, file);
    if (*cot) return cmd_cotangent(ctx, file);
    if (*irr) return cmd_irreducible(ctx, h, m, lam, lambar);
    if (*cat) {
      catalog::Bindings b = parse_params(params);
      if (*cat_list) return cmd_catalog_list(ctx);
      if (*cat_show) return cmd_catalog_show(ctx, name, b);
      if (*cat_verify) return cmd_catalog_verify(ctx, b);
      if (*cat_dump) return cmd_catalog_dump(ctx);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const MathError& e) {
    err << "refused: " << e.what() << "\n";
    return math_failure;
  }
  return input_error;
}

}  // namespace snla::cli
