#ifndef FENT_SCENARIO_HPP
#define FENT_SCENARIO_HPP

#include <string>

#include "fent/actions.hpp"
#include "fent/product_measure.hpp"

namespace fent {

// The assembled tuple every command operates on: acting group, kappa,
// base system, cocycle into the Cantor group, and fiber product measure.
struct Scenario {
  std::string name;
  std::string description;
  GroupKind group = GroupKind::DirectSumZ2;
  KappaMeasure kappa;
  BaseSystem base = HaarOdometer{};
  CocycleSpec cocycle = ConstantPerGenerator{};
  ProductMeasureSpec nu;
};

// Throws ValidationError naming the violated invariant.
void validate_scenario(const Scenario& s);

// Parse + validate. Throws ParseError or ValidationError.
Scenario load_scenario(const std::string& path);
Scenario scenario_from_json_text(const std::string& text);
std::string scenario_to_json_text(const Scenario& s);

}  // namespace fent

#endif
