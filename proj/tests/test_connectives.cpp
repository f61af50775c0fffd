#include <cmath>

#include "doctest.h"
#include "fmm/connectives.hpp"
#include "fmm/error.hpp"
#include "oracles.hpp"

using namespace fmm;

TEST_CASE("unit scalar rejects values outside [0,1]") {
  CHECK(UnitScalar(0.25).value() == 0.25);
  CHECK_THROWS_AS(UnitScalar(1.5), ConfigError);
  CHECK_THROWS_AS(UnitScalar(-0.1), ConfigError);
  CHECK_THROWS_AS(UnitScalar(std::nan("")), ConfigError);
  CHECK(UnitScalar::clamped(2.0).value() == 1.0);
  CHECK(UnitScalar::clamped(-1.0).value() == 0.0);
}

TEST_CASE("builtin registry") {
  CHECK(builtin_family_names().size() == 5);
  for (const auto& name : builtin_family_names()) CHECK(builtin_family(name).name == name);
  CHECK_THROWS_AS(builtin_family("zadeh"), NotFoundError);
  CHECK_THROWS_AS(builtin_family(""), NotFoundError);
}

TEST_CASE("scalar examples") {
  const auto gaines = builtin_family("gaines");
  CHECK(gaines.implication(0.3, 0.3) == 1.0);
  CHECK(gaines.implication(0.4, 0.3) == 0.0);
  CHECK(gaines.coimplication(0.3, 0.7) == 1.0);

  const auto luk = builtin_family("lukasiewicz");
  CHECK(luk.conjunction(0.7, 0.5) == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(luk.implication(0.7, 0.5) == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(luk.implication(0.4, 0.3) == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(luk.coimplication(0.3, 0.7) == doctest::Approx(0.4).epsilon(1e-12));

  const auto godel = builtin_family("godel");
  CHECK(godel.implication(0.7, 0.5) == 0.5);
  CHECK(godel.coimplication(0.3, 0.7) == 0.7);

  const auto comp = builtin_family("compensatory_and");
  CHECK(comp.conjunction(0.5, 0.5) == doctest::Approx(std::sqrt(0.25 * 0.75)).epsilon(1e-15));
  CHECK(std::abs(comp.implication(1.0, 0.6) - 0.36) < 1e-12);
  CHECK(comp.implication(0.0, 0.2) == 1.0);
  CHECK_FALSE(comp.has_disjunctive_side());
  CHECK_FALSE(comp.conjunction_identity.has_value());
  CHECK_FALSE(comp.negation_dual);

  const auto goguen = builtin_family("goguen");
  CHECK(goguen.coimplication(0.5, 0.75) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("left identities") {
  for (const char* name : {"godel", "goguen", "lukasiewicz", "gaines"}) {
    const auto f = builtin_family(name);
    REQUIRE(f.conjunction_identity.has_value());
    REQUIRE(f.disjunction_identity.has_value());
    CHECK(*f.conjunction_identity == 1.0);
    CHECK(*f.disjunction_identity == 0.0);
    for (int i = 0; i <= 20; ++i) {
      const double x = i / 20.0;
      CHECK(f.conjunction(*f.conjunction_identity, x) == doctest::Approx(x).epsilon(1e-15));
      CHECK(f.disjunction(*f.disjunction_identity, x) == doctest::Approx(x).epsilon(1e-15));
    }
  }
}

TEST_CASE("closed forms agree with independent oracles") {
  for (const char* name : {"godel", "goguen", "lukasiewicz", "gaines", "compensatory_and"}) {
    const auto f = builtin_family(name);
    for (int i = 0; i <= 10; ++i) {
      for (int j = 0; j <= 10; ++j) {
        const double x = i / 10.0, y = j / 10.0;
        CAPTURE(name);
        CAPTURE(x);
        CAPTURE(y);
        CHECK(f.conjunction(x, y) == doctest::Approx(oracle::C(name, x, y)).epsilon(1e-12));
        CHECK(std::abs(f.implication(x, y) - oracle::I(name, x, y)) < 1e-9);
        if (f.has_disjunctive_side()) {
          CHECK(f.disjunction(x, y) == doctest::Approx(oracle::D(name, x, y)).epsilon(1e-12));
          CHECK(std::abs(f.coimplication(x, y) - oracle::J(name, x, y)) < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("closed-form residuals match a grid search of the definition") {
  // Continuous families only: the search returns the supremum, which the
  // discontinuous Gaines operators attain from one side only.
  for (const char* name : {"godel", "goguen", "lukasiewicz", "compensatory_and"}) {
    const auto f = builtin_family(name);
    for (int i = 1; i <= 9; ++i) {
      for (int j = 1; j <= 9; ++j) {
        const double x = i / 10.0, y = j / 10.0;
        CAPTURE(name);
        CAPTURE(x);
        CAPTURE(y);
        CHECK(std::abs(f.implication(x, y) - oracle::I_search(name, x, y)) < 1e-7);
        if (f.has_disjunctive_side()) CHECK(std::abs(f.coimplication(x, y) - oracle::J_search(name, x, y)) < 1e-7);
      }
    }
  }
}

TEST_CASE("bisection residuals for user-supplied operators") {
  const auto luk = builtin_family("lukasiewicz");
  CHECK(std::abs(residual_implication(luk.conjunction, UnitScalar(0.4), UnitScalar(0.3)).value() - 0.9) < 1e-9);
  CHECK(std::abs(residual_coimplication(luk.disjunction, UnitScalar(0.3), UnitScalar(0.7)).value() - 0.4) < 1e-9);
  const auto comp = builtin_family("compensatory_and");
  CHECK(std::abs(residual_implication(comp.conjunction, UnitScalar(1.0), UnitScalar(0.6)).value() - 0.36) < 1e-9);
  // A user-defined product conjunction reproduces the Goguen implication.
  BinaryOp product = [](double a, double b) { return a * b; };
  CHECK(std::abs(residual_implication(product, UnitScalar(0.8), UnitScalar(0.4)).value() - 0.5) < 1e-9);
  CHECK(residual_implication(product, UnitScalar(0.3), UnitScalar(0.4)).value() == 1.0);
  // Family overloads return the closed form.
  CHECK(residual_implication(luk, UnitScalar(0.7), UnitScalar(0.5)).value() == doctest::Approx(0.8));
  CHECK(residual_coimplication(luk, UnitScalar(0.3), UnitScalar(0.7)).value() == doctest::Approx(0.4));
}

TEST_CASE("negation duality") {
  for (const char* name : {"godel", "goguen", "lukasiewicz", "gaines"}) {
    const auto f = builtin_family(name);
    CHECK(f.negation_dual);
    for (int i = 0; i <= 10; ++i) {
      for (int j = 0; j <= 10; ++j) {
        const double x = i / 10.0, y = j / 10.0;
        CHECK(f.disjunction(x, y) ==
              doctest::Approx(1.0 - f.conjunction(1.0 - x, 1.0 - y)).epsilon(1e-12));
        CHECK(f.coimplication(x, y) ==
              doctest::Approx(1.0 - f.implication(1.0 - x, 1.0 - y)).epsilon(1e-12));
      }
    }
  }
  CHECK(standard_negation(0.25) == 0.75);
}

TEST_CASE("adjunction checks") {
  CHECK(check_adjunction(builtin_family("godel"), 11).passed);
  CHECK(check_adjunction(builtin_family("gaines"), 11).passed);
  CHECK(check_adjunction(builtin_family("godel")).passed);
  // Dyadic grid keeps the arithmetic families exact.
  CHECK(check_adjunction(builtin_family("lukasiewicz"), 5).passed);
  CHECK(check_adjunction(builtin_family("goguen"), 5).passed);

  // A conjunction paired with the wrong implication is caught.
  auto broken = builtin_family("godel");
  broken.implication = builtin_family("lukasiewicz").implication;
  const auto report = check_adjunction(broken, 11);
  CHECK_FALSE(report.passed);
  CHECK(report.side == "implication");
  CHECK_FALSE(report.describe().empty());

  CHECK_THROWS_AS(check_adjunction(builtin_family("godel"), 1), ConfigError);
}
