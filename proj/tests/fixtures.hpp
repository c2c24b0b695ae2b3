#ifndef FENT_TESTS_FIXTURES_HPP
#define FENT_TESTS_FIXTURES_HPP

#include <cmath>

#include "fent/realize.hpp"
#include "fent/scenario.hpp"

namespace fent::fixtures {

inline const double kLn2 = std::log(2.0);

// Haar odometer with the canonical cocycle f -> f and a single kappa atom.
inline Scenario haar_delta(const GroupElement& atom, ProductMeasureSpec nu) {
  Scenario s;
  s.name = "haar-delta";
  s.group = GroupKind::DirectSumZ2;
  s.kappa = KappaMeasure({{atom, 1.0}});
  s.base = HaarOdometer{};
  s.cocycle = ConstantPerGenerator{{{atom, atom}}};
  s.nu = std::move(nu);
  return s;
}

// Single-coordinate scenario: kappa = delta_{{1}}, eps = ln 2.
// Exact entropy (ln 2)/3; kappa_bar(1) = 1; nu_1(0) = 1/3.
inline Scenario single_coordinate() {
  return haar_delta(GroupElement::single(1), ProductMeasureSpec::constant(kLn2));
}

// kappa' = 1/2 delta_{{1}} + 1/2 delta_{{1,2}}, eps = ln 2.
// Exact entropy (ln 2)/2 (Fubini weights 1 and 1/2).
inline Scenario mixed_weights() {
  Scenario s;
  s.name = "mixed-weights";
  s.group = GroupKind::DirectSumZ2;
  GroupElement f1 = GroupElement::single(1);
  GroupElement f12{{1, 2}};
  s.kappa = KappaMeasure({{f1, 0.5}, {f12, 0.5}});
  s.base = HaarOdometer{};
  s.cocycle = ConstantPerGenerator{{{f1, f1}, {f12, f12}}};
  s.nu = ProductMeasureSpec::constant(kLn2);
  return s;
}

// FiniteCycle(2) over the integers with w(0) = {1}, w(1) = {2},
// kappa = {+1: 1/2, +2: 1/2}. kappa_0 = {{1}: 1/2, {1,2}: 1/2}.
inline Scenario finite_cycle(ProductMeasureSpec nu = ProductMeasureSpec::constant(kLn2)) {
  Scenario s;
  s.name = "finite-cycle-2";
  s.group = GroupKind::Integers;
  s.kappa = KappaMeasure({{std::int64_t{1}, 0.5}, {std::int64_t{2}, 0.5}});
  s.base = FiniteCycle{2};
  s.cocycle = GeneratorTable{{GroupElement::single(1), GroupElement::single(2)}};
  s.nu = std::move(nu);
  return s;
}

}  // namespace fent::fixtures

#endif
