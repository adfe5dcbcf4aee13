#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace snla;
using namespace snla::test;

TEST_CASE("rr3_0 fixture") {
  catalog::Entry r = catalog::build("rr3_0");
  CHECK(r.kind == catalog::Kind::four_dim);
  CHECK(r.printed.product_basis(0, 0) == vec({-1, 0, 0, 0}));
  CHECK(r.printed.product_basis(1, 0) == vec({0, -1, 0, 0}));
  CHECK(*r.omega == BilinearForm::two_form(4, {{0, 1, 1}, {2, 3, 1}}));
  CHECK(r.product == r.printed);
  CHECK_FALSE(r.erratum.has_value());
}

TEST_CASE("L6_18.v1 at lambda = 2") {
  catalog::Entry r = catalog::build("L6_18.v1", {{"lambda", 2}});
  CHECK(r.printed.product_basis(0, 1) == vec({0, 0, 0, 2, 0, 0}));
  CHECK(r.printed.product_basis(1, 0) == vec({0, 0, 0, 1, 0, 0}));
  CHECK(r.printed.product_basis(0, 2) == vec({0, 0, 0, 0, q(1, 2), 0}));
  CHECK(*r.omega == BilinearForm::two_form(6, {{0, 5, 1}, {1, 4, 2}, {2, 3, 1}}));
  CHECK(r.display_name() == "L6_18.v1[lambda=2]");
  CHECK(r.row == "L6_18.v1");
}

TEST_CASE("g_3_3 fixture") {
  catalog::Entry g = catalog::build("g_3_3");
  CHECK(g.kind == catalog::Kind::novikov_associative);
  CHECK(g.printed.product_basis(0, 1) == vec({0, 0, q(1, 2)}));
  CHECK(g.printed.product_basis(1, 0) == vec({0, 0, q(-1, 2)}));
  CHECK_FALSE(g.omega.has_value());
}

TEST_CASE("parameter handling") {
  auto ps = catalog::parameters("L6_18.v1");
  REQUIRE(ps.size() == 1);
  CHECK(ps[0].name == "lambda");
  CHECK(ps[0].excluded == std::vector<Scalar>{0, 1});
  CHECK(catalog::default_samples("L6_18.v1").size() == 5);
  CHECK(catalog::default_samples("rh3").size() == 1);
  CHECK(catalog::default_samples("g_3_1").size() == 5);
  CHECK(catalog::parameters("g_3_1")[0].excluded.empty());

  CHECK_THROWS_AS(catalog::build("L6_18.v1", {{"lambda", 1}}), InputError);
  CHECK_THROWS_AS(catalog::build("L6_18.v1", {{"lambda", 0}}), InputError);
  CHECK_THROWS_AS(catalog::build("L6_18.v1", {{"mu", 2}}), InputError);
  CHECK_THROWS_AS(catalog::build("nope"), InputError);
  CHECK_THROWS_AS(catalog::parameters("nope"), InputError);
}

TEST_CASE("list covers all tables in order") {
  auto names = catalog::list();
  CHECK(names.size() == 20);
  CHECK(names.front() == "rh3");
  CHECK(names.back() == "g_3_3");
  CHECK(std::find(names.begin(), names.end(), "L6_21.minus") != names.end());
}

TEST_CASE("L6_25 erratum content") {
  catalog::Entry r = catalog::build("L6_25");
  REQUIRE(r.erratum.has_value());
  CHECK(r.erratum->printed.product_basis(0, 0) == vec({0, 0, 0, 0, 1, 0}));
  CHECK(r.erratum->computed.product_basis(0, 0) == vec({0, 0, 0, 1, 0, 0}));
  CHECK(r.product == r.erratum->computed);
  CHECK(r.product == associated_product(*r.lie, *r.omega));
  bool found = false;
  for (const auto& d : r.erratum->differences)
    if (d.i == 0 && d.j == 0) {
      found = true;
      CHECK(d.printed == vec({0, 0, 0, 0, 1, 0}));
      CHECK(d.computed == vec({0, 0, 0, 1, 0, 0}));
    }
  CHECK(found);
}

TEST_CASE("errata appear exactly on the registered entries") {
  const auto& known = catalog::known_errata();
  for (const auto& entry : catalog::build_all()) {
    bool listed = std::find(known.begin(), known.end(), entry.name) != known.end();
    CHECK_MESSAGE(entry.erratum.has_value() == listed, entry.display_name());
    if (entry.erratum && entry.lie) {
      CHECK_FALSE(entry.erratum->differences.empty());
      CHECK(entry.erratum->printed != entry.erratum->computed);
    }
  }
}

TEST_CASE("g_3_1 is recorded as non-associative") {
  for (const auto& b : catalog::default_samples("g_3_1")) {
    catalog::Entry g = catalog::build("g_3_1", b);
    REQUIRE(g.erratum.has_value());
    CHECK_FALSE(g.erratum->note.empty());
    ProductClassification c = classify(g.printed);
    CHECK(c.novikov);
    CHECK_FALSE(c.associative);
    CHECK(associator(g.printed, e(3, 0), e(3, 0), e(3, 0)) == vec({0, 0, -1}));
  }
}

TEST_CASE("the other three-dimensional rows are Novikov and associative") {
  for (const auto& name : {"A_3_2", "A_3_3", "A_3_4", "A_3_5", "g_3_2", "g_3_3"})
    for (const auto& b : catalog::default_samples(name)) {
      ProductClassification c = classify(catalog::build(name, b).printed);
      CHECK_MESSAGE(c.novikov, name);
      CHECK_MESSAGE(c.associative, name);
    }
}

TEST_CASE("every entry verifies") {
  for (const auto& entry : catalog::build_all()) {
    catalog::EntryVerification v = catalog::verify_entry(entry);
    for (const auto& c : v.checks) CHECK_MESSAGE(c.pass, entry.display_name() << " " << c.name << " " << c.detail);
    CHECK(v.ok());
  }
}

TEST_CASE("Frobenius flags") {
  for (const auto& name : {"d4_1", "r2prime"}) {
    catalog::Entry entry = catalog::build(name);
    CHECK_MESSAGE(exact_primitive(*entry.lie, *entry.omega).has_value(), name);
  }
}
