#pragma once

#include "snla/symplectic.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace snla::catalog {

enum class Kind {
  four_dim,              ///< four-dimensional SNLA
  six_dim_nilpotent,     ///< six-dimensional nilpotent SNLA
  novikov_associative,   ///< three-dimensional Novikov associative algebra (no form)
};

std::string to_string(Kind k);

struct ParameterSpec {
  std::string name;
  std::vector<Scalar> excluded;
};

using Bindings = std::map<std::string, Scalar>;

struct Expected {
  std::optional<bool> snla;
  /// Present when the entry claims a nilpotency step; nullopt_t means "not nilpotent".
  std::optional<std::optional<std::size_t>> nilpotency_step;
  std::optional<bool> lr;
  std::optional<bool> frobenius;
};

struct SlotDifference {
  std::size_t i, j;
  Vector printed;
  Vector computed;
};

/// A printed table that does not survive the round trip through its own form,
/// or a printed three-dimensional table that lacks a claimed identity.
struct Erratum {
  ProductTable printed;
  ProductTable computed;
  std::vector<SlotDifference> differences;
  std::string note;
};

struct Entry {
  std::string name;
  /// Table row the entry belongs to; the sign variants of one row share it.
  std::string row;
  Kind kind = Kind::four_dim;
  Bindings parameters;
  ProductTable printed;
  /// Lie algebra and form; absent for novikov_associative entries.
  std::optional<LieAlgebra> lie;
  std::optional<BilinearForm> omega;
  /// associated_product(lie, omega) for symplectic entries, else the printed table.
  ProductTable product;
  std::optional<Erratum> erratum;
  Expected expected;

  std::string display_name() const;
};

/// All entry names in table order.
std::vector<std::string> list();

std::vector<ParameterSpec> parameters(const std::string& name);

/// Missing parameters take the first default sample. Throws InputError for
/// unknown names, unknown parameters and excluded values.
Entry build(const std::string& name, const Bindings& bindings = {});

/// {-2, -1/2, 1/2, 2, 3} minus exclusions, one binding per sample
/// (a single empty binding for parameter-free entries).
std::vector<Bindings> default_samples(const std::string& name);

/// Every entry at every default sample, in table order.
std::vector<Entry> build_all();

/// Entries whose printed tables are known not to round-trip.
const std::vector<std::string>& known_errata();

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct EntryVerification {
  std::string entry;
  std::vector<CheckResult> checks;
  bool erratum_recorded = false;

  bool ok() const;
};

/// Runs every catalog invariant on one entry. A round-trip mismatch counts as
/// a pass only when the entry is listed in known_errata(); a listed entry that
/// round-trips counts as a failure.
EntryVerification verify_entry(const Entry& e);

}  // namespace snla::catalog
