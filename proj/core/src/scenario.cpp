#include "fent/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fent/errors.hpp"

namespace fent {

namespace {

using nlohmann::json;

double parse_weight(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (!j.is_string()) throw ParseError("kappa weight must be a number or a string");
  std::string s = j.get<std::string>();
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      double num = std::stod(s.substr(0, slash));
      double den = std::stod(s.substr(slash + 1));
      if (den == 0.0) throw ParseError("kappa weight with zero denominator: " + s);
      return num / den;
    }
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("bad kappa weight \"" + s + "\"");
  }
}

GroupKind parse_group_kind(const std::string& kind) {
  if (kind == "integers") return GroupKind::Integers;
  if (kind == "direct_sum_z2") return GroupKind::DirectSumZ2;
  throw ParseError("unknown group kind \"" + kind + "\"");
}

ProductMeasureSpec parse_nu(const json& j) {
  std::string family = j.at("family").get<std::string>();
  ProductMeasureSpec spec;
  if (family == "zero") {
    spec = ProductMeasureSpec::zero();
  } else if (family == "constant") {
    spec = ProductMeasureSpec::constant(j.at("epsilon").get<double>());
  } else if (family == "power") {
    spec = ProductMeasureSpec::power(j.at("c").get<double>(), j.at("a").get<double>());
  } else {
    throw ParseError("unknown nu family \"" + family + "\"");
  }
  if (j.contains("overrides")) {
    for (const auto& [key, value] : j.at("overrides").items()) {
      int n = std::stoi(key);
      if (!value.is_array() || value.size() != 2)
        throw ParseError("nu override at " + key + " must be a pair [p0, p1]");
      try {
        spec = spec.with_override(n, value[0].get<double>(), value[1].get<double>());
      } catch (const std::domain_error& e) {
        throw ValidationError(std::string("nu override at ") + key + ": " + e.what());
      }
    }
  }
  if (j.contains("deformation")) {
    const auto& d = j.at("deformation");
    try {
      spec = spec.with_deformation(d.at("n0").get<int>(), d.at("theta").get<double>());
    } catch (const std::domain_error& e) {
      throw ValidationError(std::string("nu deformation: ") + e.what());
    }
  }
  return spec;
}

}  // namespace

void validate_scenario(const Scenario& s) {
  const auto* cycle = std::get_if<FiniteCycle>(&s.base);
  if (cycle) {
    if (cycle->m < 1) throw ValidationError("finite_cycle requires m >= 1");
    if (s.group != GroupKind::Integers)
      throw ValidationError("cocycle/base mismatch: finite_cycle base needs the integers");
  }
  if (const auto* table = std::get_if<GeneratorTable>(&s.cocycle)) {
    if (!cycle)
      throw ValidationError("cocycle/base mismatch: generator_table needs a finite_cycle base");
    if (static_cast<int>(table->w.size()) != cycle->m)
      throw ValidationError("generator_table size must equal the cycle length m");
  }
  for (const auto& atom : s.kappa.atoms()) {
    // Atom kind must match the declared group.
    bool is_int = std::holds_alternative<std::int64_t>(atom.element);
    if (is_int != (s.group == GroupKind::Integers))
      throw ValidationError("kappa atom " + element_to_string(atom.element) +
                            " is not an element of the declared group");
    try {
      evaluate_cocycle(s.cocycle, s.base, atom.element);
    } catch (const UnreachableElementError& e) {
      throw ValidationError("kappa atom " + element_to_string(atom.element) +
                            " not reachable through the cocycle: " + e.what());
    }
  }
}

Scenario scenario_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("scenario JSON: ") + e.what());
  }
  Scenario s;
  try {
    s.name = j.value("name", "");
    s.description = j.value("description", "");
    s.group = parse_group_kind(j.at("group").at("kind").get<std::string>());

    std::vector<KappaAtom> atoms;
    for (const auto& entry : j.at("kappa").at("atoms")) {
      if (!entry.is_array() || entry.size() != 2)
        throw ParseError("kappa atom must be a [label, weight] pair");
      atoms.push_back({parse_element(s.group, entry[0].get<std::string>()),
                       parse_weight(entry[1])});
    }
    if (j.at("kappa").contains("enumeration")) {
      std::vector<KappaAtom> ordered;
      for (const auto& label : j.at("kappa").at("enumeration")) {
        Element e = parse_element(s.group, label.get<std::string>());
        auto it = std::find_if(atoms.begin(), atoms.end(),
                               [&](const KappaAtom& a) { return a.element == e; });
        if (it == atoms.end())
          throw ValidationError("kappa enumeration names unknown atom " +
                                element_to_string(e));
        ordered.push_back(*it);
      }
      if (ordered.size() != atoms.size())
        throw ValidationError("kappa enumeration must cover exactly the atoms");
      atoms = std::move(ordered);
    }
    s.kappa = KappaMeasure(std::move(atoms));

    std::string base_kind = j.at("base").at("kind").get<std::string>();
    if (base_kind == "finite_cycle") {
      s.base = FiniteCycle{j.at("base").at("m").get<int>()};
    } else if (base_kind == "haar_odometer") {
      s.base = HaarOdometer{};
    } else {
      throw ParseError("unknown base kind \"" + base_kind + "\"");
    }

    std::string cocycle_kind = j.at("cocycle").at("kind").get<std::string>();
    if (cocycle_kind == "constant_per_generator") {
      ConstantPerGenerator c;
      for (const auto& entry : j.at("cocycle").at("table")) {
        if (!entry.is_array() || entry.size() != 2)
          throw ParseError("constant_per_generator table entries are [generator, value] pairs");
        c.labels.emplace_back(parse_element(s.group, entry[0].get<std::string>()),
                              GroupElement::parse(entry[1].get<std::string>()));
      }
      s.cocycle = std::move(c);
    } else if (cocycle_kind == "generator_table") {
      GeneratorTable c;
      for (const auto& entry : j.at("cocycle").at("table"))
        c.w.push_back(GroupElement::parse(entry.get<std::string>()));
      s.cocycle = std::move(c);
    } else {
      throw ParseError("unknown cocycle kind \"" + cocycle_kind + "\"");
    }

    s.nu = parse_nu(j.at("nu"));
  } catch (const json::exception& e) {
    throw ParseError(std::string("scenario field: ") + e.what());
  }
  validate_scenario(s);
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return scenario_from_json_text(buffer.str());
}

std::string scenario_to_json_text(const Scenario& s) {
  json j;
  if (!s.name.empty()) j["name"] = s.name;
  if (!s.description.empty()) j["description"] = s.description;
  j["group"]["kind"] = s.group == GroupKind::Integers ? "integers" : "direct_sum_z2";
  json atoms = json::array();
  for (const auto& a : s.kappa.atoms())
    atoms.push_back({element_to_string(a.element), a.weight});
  j["kappa"]["atoms"] = atoms;
  if (const auto* cycle = std::get_if<FiniteCycle>(&s.base)) {
    j["base"] = {{"kind", "finite_cycle"}, {"m", cycle->m}};
  } else {
    j["base"] = {{"kind", "haar_odometer"}};
  }
  if (const auto* c = std::get_if<ConstantPerGenerator>(&s.cocycle)) {
    j["cocycle"]["kind"] = "constant_per_generator";
    json table = json::array();
    for (const auto& [gen, label] : c->labels)
      table.push_back({element_to_string(gen), label.to_string()});
    j["cocycle"]["table"] = table;
  } else {
    const auto& t = std::get<GeneratorTable>(s.cocycle);
    j["cocycle"]["kind"] = "generator_table";
    json table = json::array();
    for (const auto& v : t.w) table.push_back(v.to_string());
    j["cocycle"]["table"] = table;
  }
  json nu;
  if (std::holds_alternative<ZeroFamily>(s.nu.family())) {
    nu["family"] = "zero";
  } else if (const auto* c = std::get_if<ConstantFamily>(&s.nu.family())) {
    nu["family"] = "constant";
    nu["epsilon"] = c->eps;
  } else {
    const auto& p = std::get<PowerFamily>(s.nu.family());
    nu["family"] = "power";
    nu["c"] = p.c;
    nu["a"] = p.a;
  }
  for (const auto& [n, d] : s.nu.overrides())
    nu["overrides"][std::to_string(n)] = {d.p0, d.p1};
  if (s.nu.deformation())
    nu["deformation"] = {{"n0", s.nu.deformation()->n0},
                         {"theta", s.nu.deformation()->theta}};
  j["nu"] = nu;
  return j.dump(2);
}

}  // namespace fent
