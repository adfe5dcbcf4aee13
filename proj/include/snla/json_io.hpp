#pragma once

#include "snla/catalog.hpp"
#include "snla/constructions.hpp"
#include "snla/geometry.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace snla::io {

using Json = nlohmann::ordered_json;

/// Parses a file; syntax errors become InputError with line and column.
Json read_json_file(const std::filesystem::path& path);
Json parse_json(const std::string& text, const std::string& origin);

/// Accepts "p/q" strings and integers. `field` names the location in diagnostics.
Scalar scalar_from_json(const Json& j, const std::string& field);
Json to_json(const Scalar& s);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Vector vector_from_json(const Json& j, std::size_t n, const std::string& field);
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& field);
/// Nested array of any rectangular shape; an empty array gives rows x 0 with rows = 0.
Matrix matrix_from_json(const Json& j, const std::string& field);

struct AlgebraFile {
  /// Jacobi is not checked on load.
  LieAlgebra lie;
  std::optional<BilinearForm> omega;
};

/// {"dim", "labels"?, "brackets", "omega"?}, 1-based, skew completion implicit.
AlgebraFile algebra_from_json(const Json& j);
Json algebra_to_json(const LieAlgebra& lie, const std::optional<BilinearForm>& omega);

/// {"dim", "products"}, ordered pairs.
ProductTable product_from_json(const Json& j);
Json product_to_json(const ProductTable& p);

/// {"phi", "lambda", "zeta"|null} for a base of dimension n.
OxidationData oxidation_data_from_json(const Json& j, std::size_t n);
Json oxidation_data_to_json(const OxidationData& d);

/// {"dim", "gamma": [{"i","j","out"}]}
Json connection_to_json(const Connection& c);

Json classification_to_json(const ProductClassification& c);
Json snla_report_to_json(const SnlaReport& r);
Json symplectic_report_to_json(const SymplecticReport& r);
Json jacobi_report_to_json(const JacobiReport& r);
Json conditions_report_to_json(const OxidationConditionsReport& r);
Json completeness_to_json(const CompletenessReport& r);
Json entry_to_json(const catalog::Entry& e);
Json verification_to_json(const catalog::EntryVerification& v);

}  // namespace snla::io
