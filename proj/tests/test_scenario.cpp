#include <doctest.h>

#include <cmath>

#include "fent/entropy.hpp"
#include "fent/errors.hpp"
#include "fent/scenario.hpp"

using namespace fent;

namespace {

const char* kMinimal = R"({
  "name": "minimal",
  "group": {"kind": "direct_sum_z2"},
  "kappa": {"atoms": [["{1}", "1/1"]]},
  "base": {"kind": "haar_odometer"},
  "cocycle": {"kind": "constant_per_generator", "table": [["{1}", "{1}"]]},
  "nu": {"family": "constant", "epsilon": 0.6931471805599453}
})";

}  // namespace

TEST_CASE("minimal scenario loads and computes") {
  Scenario s = scenario_from_json_text(kMinimal);
  CHECK(s.name == "minimal");
  CHECK(s.group == GroupKind::DirectSumZ2);
  CHECK(s.kappa.size() == 1);
  CHECK(skew_entropy(s).total == doctest::Approx(std::log(2.0) / 3.0).epsilon(1e-12));
}

TEST_CASE("rational and decimal weights") {
  Scenario s = scenario_from_json_text(R"({
    "group": {"kind": "direct_sum_z2"},
    "kappa": {"atoms": [["{1}", "1/4"], ["{2}", 0.25], ["{1,2}", "0.5"]]},
    "base": {"kind": "haar_odometer"},
    "cocycle": {"kind": "constant_per_generator",
                "table": [["{1}", "{1}"], ["{2}", "{2}"], ["{1,2}", "{1,2}"]]},
    "nu": {"family": "zero"}
  })");
  CHECK(s.kappa.atoms()[0].weight == doctest::Approx(0.25));
  CHECK(s.kappa.atoms()[2].weight == doctest::Approx(0.5));
}

TEST_CASE("kappa enumeration reorders the atoms") {
  Scenario s = scenario_from_json_text(R"({
    "group": {"kind": "direct_sum_z2"},
    "kappa": {"atoms": [["{1}", "1/2"], ["{2}", "1/2"]],
              "enumeration": ["{2}", "{1}"]},
    "base": {"kind": "haar_odometer"},
    "cocycle": {"kind": "constant_per_generator",
                "table": [["{1}", "{1}"], ["{2}", "{2}"]]},
    "nu": {"family": "zero"}
  })");
  CHECK(s.kappa.atoms()[0].element == Element{GroupElement::single(2)});
}

TEST_CASE("validation errors") {
  SUBCASE("kappa mass not one") {
    CHECK_THROWS_WITH_AS(scenario_from_json_text(R"({
      "group": {"kind": "direct_sum_z2"},
      "kappa": {"atoms": [["{1}", "0.9"]]},
      "base": {"kind": "haar_odometer"},
      "cocycle": {"kind": "constant_per_generator", "table": [["{1}", "{1}"]]},
      "nu": {"family": "zero"}
    })"),
                         "kappa mass != 1", ValidationError);
  }
  SUBCASE("generator table over the odometer base") {
    CHECK_THROWS_AS(scenario_from_json_text(R"({
      "group": {"kind": "direct_sum_z2"},
      "kappa": {"atoms": [["{1}", "1"]]},
      "base": {"kind": "haar_odometer"},
      "cocycle": {"kind": "generator_table", "table": ["{1}", "{2}"]},
      "nu": {"family": "zero"}
    })"),
                    ValidationError);
  }
  SUBCASE("table size must match the cycle length") {
    CHECK_THROWS_AS(scenario_from_json_text(R"({
      "group": {"kind": "integers"},
      "kappa": {"atoms": [["+1", "1"]]},
      "base": {"kind": "finite_cycle", "m": 3},
      "cocycle": {"kind": "generator_table", "table": ["{1}", "{2}"]},
      "nu": {"family": "zero"}
    })"),
                    ValidationError);
  }
  SUBCASE("unreachable kappa atom") {
    CHECK_THROWS_AS(scenario_from_json_text(R"({
      "group": {"kind": "direct_sum_z2"},
      "kappa": {"atoms": [["{3}", "1"]]},
      "base": {"kind": "haar_odometer"},
      "cocycle": {"kind": "constant_per_generator", "table": [["{1}", "{1}"]]},
      "nu": {"family": "zero"}
    })"),
                    ValidationError);
  }
  SUBCASE("deformation theta outside (0,1]") {
    CHECK_THROWS_AS(scenario_from_json_text(R"({
      "group": {"kind": "direct_sum_z2"},
      "kappa": {"atoms": [["{1}", "1"]]},
      "base": {"kind": "haar_odometer"},
      "cocycle": {"kind": "constant_per_generator", "table": [["{1}", "{1}"]]},
      "nu": {"family": "zero", "deformation": {"n0": 1, "theta": 0.0}}
    })"),
                    ValidationError);
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(scenario_from_json_text("{not json"), ParseError);
  CHECK_THROWS_AS(scenario_from_json_text(R"({"group": {"kind": "nope"}})"), ParseError);
  CHECK_THROWS_AS(scenario_from_json_text(R"({
    "group": {"kind": "direct_sum_z2"},
    "kappa": {"atoms": [["{1}", "1/0"]]},
    "base": {"kind": "haar_odometer"},
    "cocycle": {"kind": "constant_per_generator", "table": [["{1}", "{1}"]]},
    "nu": {"family": "zero"}
  })"),
                  ParseError);
}

TEST_CASE("round trip through JSON text") {
  Scenario s = scenario_from_json_text(kMinimal);
  Scenario t = scenario_from_json_text(scenario_to_json_text(s));
  CHECK(t.name == s.name);
  CHECK(t.kappa.size() == s.kappa.size());
  CHECK(skew_entropy(t).total == skew_entropy(s).total);
}
