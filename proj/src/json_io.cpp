#include "snla/json_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace snla::io {

namespace {

std::string at(const std::string& field, const std::string& key) { return field.empty() ? key : field + "." + key; }
std::string at(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }

const Json& member(const Json& j, const std::string& field, const std::string& key) {
  if (!j.is_object()) throw InputError((field.empty() ? std::string("document") : field) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(at(field, key) + ": missing");
  return *it;
}

const Json& array_at(const Json& j, const std::string& field) {
  if (!j.is_array()) throw InputError(field + ": expected an array");
  return j;
}

std::size_t index_from_json(const Json& j, std::size_t n, const std::string& field) {
  if (!j.is_number_integer()) throw InputError(field + ": expected an integer index");
  long long v = j.get<long long>();
  if (v < 1 || static_cast<unsigned long long>(v) > n)
    throw InputError(field + ": index " + std::to_string(v) + " outside 1.." + std::to_string(n));
  return static_cast<std::size_t>(v - 1);
}

std::size_t dim_from_json(const Json& j) {
  const Json& d = member(j, "", "dim");
  if (!d.is_number_integer() || d.get<long long>() < 0) throw InputError("dim: expected a non-negative integer");
  return d.get<std::size_t>();
}

/// Shared by brackets, products and connections: [{"i","j","out":[{"k","c"}]}].
std::vector<std::tuple<std::size_t, std::size_t, Vector>> entries_from_json(const Json& arr, std::size_t n,
                                                                            const std::string& field) {
  std::vector<std::tuple<std::size_t, std::size_t, Vector>> out;
  array_at(arr, field);
  for (std::size_t t = 0; t < arr.size(); ++t) {
    const std::string f = at(field, t);
    const Json& e = arr[t];
    std::size_t i = index_from_json(member(e, f, "i"), n, at(f, "i"));
    std::size_t j = index_from_json(member(e, f, "j"), n, at(f, "j"));
    const Json& o = array_at(member(e, f, "out"), at(f, "out"));
    Vector v = zero_vector(n);
    for (std::size_t s = 0; s < o.size(); ++s) {
      const std::string fo = at(at(f, "out"), s);
      std::size_t k = index_from_json(member(o[s], fo, "k"), n, at(fo, "k"));
      v[k] += scalar_from_json(member(o[s], fo, "c"), at(fo, "c"));
    }
    out.emplace_back(i, j, std::move(v));
  }
  return out;
}

Json out_to_json(const Vector& v) {
  Json out = Json::array();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) out.push_back(Json{{"k", k + 1}, {"c", to_json(v[k])}});
  return out;
}

Json tensor_entries(const Tensor3& t, bool upper_only) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = upper_only ? i + 1 : 0; j < t.dim(); ++j) {
      Vector v = t.slot(i, j);
      if (!is_zero(v)) arr.push_back(Json{{"i", i + 1}, {"j", j + 1}, {"out", out_to_json(v)}});
    }
  return arr;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  return Json(*v);
}

}  // namespace

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // The library message already carries "line L, column C".
    throw InputError(origin + ": " + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path.string());
}

Scalar scalar_from_json(const Json& j, const std::string& field) {
  try {
    if (j.is_number_integer()) return Scalar(std::to_string(j.get<long long>()));
    if (j.is_string()) return parse_scalar(j.get<std::string>());
  } catch (const InputError& e) {
    throw InputError(field + ": " + e.what());
  }
  throw InputError(field + ": expected a rational string \"p/q\" or an integer");
}

Json to_json(const Scalar& s) { return snla::to_string(s); }

Json to_json(const Vector& v) {
  Json arr = Json::array();
  for (const auto& s : v) arr.push_back(to_json(s));
  return arr;
}

Json to_json(const Matrix& m) {
  Json arr = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) arr.push_back(to_json(m.row(r)));
  return arr;
}

Vector vector_from_json(const Json& j, std::size_t n, const std::string& field) {
  array_at(j, field);
  if (j.size() != n)
    throw InputError(field + ": expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(scalar_from_json(j[i], at(field, i)));
  return v;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& field) {
  array_at(j, field);
  if (j.size() != rows)
    throw InputError(field + ": expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    Vector row = vector_from_json(j[r], cols, at(field, r));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

Matrix matrix_from_json(const Json& j, const std::string& field) {
  array_at(j, field);
  if (j.empty()) return Matrix(0, 0);
  array_at(j[0], at(field, 0));
  return matrix_from_json(j, j.size(), j[0].size(), field);
}

AlgebraFile algebra_from_json(const Json& j) {
  const std::size_t n = dim_from_json(j);
  std::vector<std::string> labels = default_labels(n);
  if (auto it = j.find("labels"); it != j.end()) {
    array_at(*it, "labels");
    if (it->size() != n) throw InputError("labels: expected " + std::to_string(n) + " labels");
    for (std::size_t i = 0; i < n; ++i) {
      if (!(*it)[i].is_string()) throw InputError(at("labels", i) + ": expected a string");
      labels[i] = (*it)[i].get<std::string>();
    }
  }

  Tensor3 c(n);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
  auto brackets = entries_from_json(member(j, "", "brackets"), n, "brackets");
  for (std::size_t t = 0; t < brackets.size(); ++t) {
    const auto& [i, jj, v] = brackets[t];
    const std::string f = at("brackets", t);
    if (i == jj) {
      if (!is_zero(v)) throw InputError(f + ": [e_i, e_i] must vanish");
      continue;
    }
    if (seen.count({i, jj})) throw InputError(f + ": pair listed twice");
    if (auto it = seen.find({jj, i}); it != seen.end()) {
      if (c.slot(jj, i) != -v) throw InputError(f + ": contradicts the skew entry " + at("brackets", it->second));
      seen[{i, jj}] = t;
      continue;
    }
    seen[{i, jj}] = t;
    c.set_slot(i, jj, v);
    c.set_slot(jj, i, -v);
  }

  AlgebraFile out{LieAlgebra::raw(std::move(c), labels), std::nullopt};
  if (auto it = j.find("omega"); it != j.end() && !it->is_null()) {
    array_at(*it, "omega");
    Matrix w(n, n);
    for (std::size_t t = 0; t < it->size(); ++t) {
      const std::string f = at("omega", t);
      const Json& e = (*it)[t];
      std::size_t a = index_from_json(member(e, f, "i"), n, at(f, "i"));
      std::size_t b = index_from_json(member(e, f, "j"), n, at(f, "j"));
      if (a == b) throw InputError(f + ": diagonal entry in a two-form");
      Scalar cval = scalar_from_json(member(e, f, "c"), at(f, "c"));
      w(a, b) += cval;
      w(b, a) -= cval;
    }
    out.omega = BilinearForm(std::move(w));
  }
  return out;
}

Json algebra_to_json(const LieAlgebra& lie, const std::optional<BilinearForm>& omega) {
  Json j;
  j["dim"] = lie.dim();
  j["labels"] = lie.labels();
  j["brackets"] = tensor_entries(lie.constants(), true);
  if (omega) {
    Json w = Json::array();
    for (std::size_t a = 0; a < omega->dim(); ++a)
      for (std::size_t b = a + 1; b < omega->dim(); ++b)
        if (omega->at(a, b) != 0) w.push_back(Json{{"i", a + 1}, {"j", b + 1}, {"c", to_json(omega->at(a, b))}});
    j["omega"] = std::move(w);
  }
  return j;
}

ProductTable product_from_json(const Json& j) {
  const std::size_t n = dim_from_json(j);
  return ProductTable::from_entries(n, entries_from_json(member(j, "", "products"), n, "products"));
}

Json product_to_json(const ProductTable& p) {
  Json j;
  j["dim"] = p.dim();
  j["products"] = tensor_entries(p.constants(), false);
  return j;
}

OxidationData oxidation_data_from_json(const Json& j, std::size_t n) {
  OxidationData d;
  d.phi = Endomorphism(matrix_from_json(member(j, "", "phi"), n, n, "phi"));
  d.lambda = OneForm{vector_from_json(member(j, "", "lambda"), n, "lambda")};
  if (auto it = j.find("zeta"); it != j.end() && !it->is_null()) d.zeta = vector_from_json(*it, n, "zeta");
  return d;
}

Json oxidation_data_to_json(const OxidationData& d) {
  Json j;
  j["phi"] = to_json(d.phi.matrix());
  j["lambda"] = to_json(d.lambda.coefficients);
  j["zeta"] = d.zeta ? to_json(*d.zeta) : Json(nullptr);
  return j;
}

Json connection_to_json(const Connection& c) {
  Json j;
  j["dim"] = c.dim();
  j["gamma"] = tensor_entries(c.gamma, false);
  return j;
}

Json classification_to_json(const ProductClassification& c) {
  Json j;
  j["left_symmetric"] = c.left_symmetric;
  j["novikov"] = c.novikov;
  j["associative"] = c.associative;
  j["lr"] = c.lr;
  j["commutative"] = c.commutative;
  Json w = Json::array();
  for (const auto& x : c.witnesses) {
    Json e;
    e["identity"] = to_string(x.identity);
    if (x.identity == Identity::commutative)
      e["pair"] = {x.i + 1, x.j + 1};
    else
      e["triple"] = {x.i + 1, x.j + 1, x.k + 1};
    e["residual"] = to_json(x.residual);
    w.push_back(std::move(e));
  }
  j["witnesses"] = std::move(w);
  return j;
}

Json snla_report_to_json(const SnlaReport& r) {
  Json j;
  j["is_snla"] = r.is_snla;
  j["novikov_iff_associative"] = r.theorem1_consistent;
  j["dim"] = r.dim;
  j["derived_dim"] = r.derived_dim;
  j["nilpotency_step"] = optional_json(r.nilpotency_step);
  j["solvability_step"] = optional_json(r.solvability_step);
  j["derived_isotropic"] = optional_json(r.derived_isotropic);
  j["two_step_solvable"] = optional_json(r.two_step_solvable);
  j["lr_iff_two_step"] = optional_json(r.lr_iff_two_step);
  j["right_mult_of_brackets_vanishes"] = optional_json(r.right_mult_of_brackets_vanishes);
  j["nilpotency_bound"] = optional_json(r.nilpotency_bound);
  j["consistent"] = r.consistent();
  j["classification"] = classification_to_json(r.classification);
  return j;
}

Json symplectic_report_to_json(const SymplecticReport& r) {
  Json j;
  j["skew"] = r.skew;
  j["nondegenerate"] = r.nondegenerate;
  j["cocycle"] = r.cocycle;
  j["even_dim"] = r.even_dim;
  if (r.cocycle_witness) {
    auto [a, b, c] = *r.cocycle_witness;
    j["cocycle_witness"] = {a + 1, b + 1, c + 1};
  } else {
    j["cocycle_witness"] = nullptr;
  }
  j["ok"] = r.ok();
  return j;
}

Json jacobi_report_to_json(const JacobiReport& r) {
  Json j;
  j["ok"] = r.ok;
  Json v = Json::array();
  for (const auto& t : r.violating_triples)
    v.push_back(Json{{"triple", {t.i + 1, t.j + 1, t.k + 1}}, {"residual", to_json(t.residual)}});
  j["violating_triples"] = std::move(v);
  return j;
}

Json conditions_report_to_json(const OxidationConditionsReport& r) {
  Json j;
  Json checks = Json::array();
  for (const auto& c : r.checks())
    checks.push_back(Json{{"name", c.name},
                          {"holds", c.holds},
                          {"witness", c.witness ? Json(*c.witness + 1) : Json(nullptr)}});
  j["conditions"] = std::move(checks);
  j["conditions_hold"] = r.conditions_hold;
  j["obstruction_vanishes"] = r.obstruction_vanishes;
  j["oxidation_is_snla"] = optional_json(r.oxidation_is_snla);
  j["divergence"] = r.divergence;
  return j;
}

Json completeness_to_json(const CompletenessReport& r) {
  Json j;
  j["complete"] = r.complete;
  j["nilpotent"] = r.nilpotent;
  j["agreement"] = r.agreement;
  j["bi_invariant"] = r.bi_invariant;
  j["left_ad_vanishes"] = r.left_ad_vanishes;
  j["printed_power_identity"] = r.printed_power_identity;
  j["corrected_power_identity"] = r.corrected_power_identity;
  if (r.printed_witness)
    j["printed_witness"] = {{"x", r.printed_witness->first + 1}, {"k", r.printed_witness->second}};
  else
    j["printed_witness"] = nullptr;
  return j;
}

Json entry_to_json(const catalog::Entry& e) {
  Json j;
  j["name"] = e.name;
  j["row"] = e.row;
  j["kind"] = catalog::to_string(e.kind);
  Json params = Json::object();
  for (const auto& [k, v] : e.parameters) params[k] = to_json(v);
  j["parameters"] = std::move(params);
  j["printed"] = product_to_json(e.printed);
  if (e.lie) j["algebra"] = algebra_to_json(*e.lie, e.omega);
  j["product"] = product_to_json(e.product);
  if (e.erratum) {
    Json diffs = Json::array();
    for (const auto& d : e.erratum->differences)
      diffs.push_back(Json{{"i", d.i + 1}, {"j", d.j + 1}, {"printed", to_json(d.printed)},
                           {"computed", to_json(d.computed)}});
    j["erratum"] = Json{{"note", e.erratum->note}, {"differences", std::move(diffs)}};
  } else {
    j["erratum"] = nullptr;
  }
  return j;
}

Json verification_to_json(const catalog::EntryVerification& v) {
  Json j;
  j["entry"] = v.entry;
  j["ok"] = v.ok();
  j["erratum_recorded"] = v.erratum_recorded;
  Json checks = Json::array();
  for (const auto& c : v.checks) checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace snla::io
