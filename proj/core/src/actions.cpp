#include "fent/actions.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <sstream>

#include "fent/errors.hpp"

namespace fent {

Element group_identity(GroupKind kind) {
  if (kind == GroupKind::Integers) return std::int64_t{0};
  return GroupElement::identity();
}

Element group_add(const Element& a, const Element& b) {
  if (a.index() != b.index())
    throw std::invalid_argument("group_add: mixed element kinds");
  if (const auto* ia = std::get_if<std::int64_t>(&a))
    return *ia + std::get<std::int64_t>(b);
  return std::get<GroupElement>(a) + std::get<GroupElement>(b);
}

Element group_inverse(const Element& a) {
  if (const auto* ia = std::get_if<std::int64_t>(&a)) return -*ia;
  return std::get<GroupElement>(a);  // involution
}

bool is_identity(const Element& a) {
  if (const auto* ia = std::get_if<std::int64_t>(&a)) return *ia == 0;
  return std::get<GroupElement>(a).is_identity();
}

std::string element_to_string(const Element& a) {
  if (const auto* ia = std::get_if<std::int64_t>(&a)) {
    std::ostringstream os;
    if (*ia >= 0) os << '+';
    os << *ia;
    return os.str();
  }
  return std::get<GroupElement>(a).to_string();
}

Element parse_element(GroupKind kind, const std::string& text) {
  if (kind == GroupKind::DirectSumZ2) return GroupElement::parse(text);
  try {
    std::size_t pos = 0;
    long long v = std::stoll(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return std::int64_t{v};
  } catch (const std::exception&) {
    throw ParseError("integer element expected, got \"" + text + "\"");
  }
}

KappaMeasure::KappaMeasure(std::vector<KappaAtom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw ValidationError("kappa has no atoms");
  double mass = 0.0;
  for (const auto& a : atoms_) {
    if (!(a.weight > 0.0))
      throw ValidationError("kappa weight not strictly positive at atom " +
                            element_to_string(a.element));
    mass += a.weight;
  }
  if (std::abs(mass - 1.0) > 1e-12) throw ValidationError("kappa mass != 1");
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    for (std::size_t j = i + 1; j < atoms_.size(); ++j)
      if (atoms_[i].element == atoms_[j].element)
        throw ValidationError("kappa atom repeated: " +
                              element_to_string(atoms_[i].element));
}

namespace {

// alpha(R^k x, x) over the finite cycle: telescope the generator table.
GroupElement telescope_cycle(const GeneratorTable& table, int m, std::int64_t k,
                             int x) {
  auto mod = [m](std::int64_t v) {
    std::int64_t r = v % m;
    return static_cast<int>(r < 0 ? r + m : r);
  };
  GroupElement acc;
  if (k >= 0) {
    for (std::int64_t j = 0; j < k; ++j) acc += table.w[mod(x + j)];
  } else {
    for (std::int64_t j = 1; j <= -k; ++j) acc += table.w[mod(x - j)];
  }
  return acc;
}

struct ElementLess {
  bool operator()(const Element& a, const Element& b) const {
    if (a.index() != b.index()) return a.index() < b.index();
    if (const auto* ia = std::get_if<std::int64_t>(&a))
      return *ia < std::get<std::int64_t>(b);
    return std::get<GroupElement>(a) < std::get<GroupElement>(b);
  }
};

// Shortest-word value of a constant cocycle: BFS over +/- generators.
// Declared generators are found at depth 1, so they always return their
// declared label.
GroupElement constant_cocycle_value(const ConstantPerGenerator& c,
                                    const Element& g) {
  if (is_identity(g)) return GroupElement::identity();
  if (c.labels.empty())
    throw UnreachableElementError("constant cocycle has no generators");
  std::map<Element, GroupElement, ElementLess> seen;
  std::deque<Element> queue;
  Element start = std::holds_alternative<std::int64_t>(c.labels.front().first)
                      ? Element{std::int64_t{0}}
                      : Element{GroupElement::identity()};
  seen.emplace(start, GroupElement::identity());
  queue.push_back(start);
  constexpr std::size_t kNodeCap = 200000;
  while (!queue.empty() && seen.size() < kNodeCap) {
    Element cur = queue.front();
    queue.pop_front();
    const GroupElement& val = seen.at(cur);
    for (const auto& [gen, label] : c.labels) {
      for (const Element& step : {gen, group_inverse(gen)}) {
        Element next = group_add(step, cur);
        if (seen.count(next)) continue;
        GroupElement nval = val + label;  // inverse generator carries the same label
        seen.emplace(next, nval);
        if (next == g) return nval;
        queue.push_back(next);
      }
    }
  }
  throw UnreachableElementError("element " + element_to_string(g) +
                                " is not a word in the declared generators");
}

}  // namespace

GroupElement evaluate_cocycle(const CocycleSpec& c, const BaseSystem& base,
                              const Element& g, int x) {
  if (is_identity(g)) return GroupElement::identity();
  if (const auto* table = std::get_if<GeneratorTable>(&c)) {
    const auto* cycle = std::get_if<FiniteCycle>(&base);
    if (!cycle) throw ValidationError("cocycle/base mismatch");
    return telescope_cycle(*table, cycle->m, std::get<std::int64_t>(g), x);
  }
  return constant_cocycle_value(std::get<ConstantPerGenerator>(c), g);
}

std::map<GroupElement, double> pushforward_kappa(const CocycleSpec& c,
                                                 const BaseSystem& base,
                                                 const KappaMeasure& kappa,
                                                 int x) {
  std::map<GroupElement, double> out;
  for (const auto& atom : kappa.atoms())
    out[evaluate_cocycle(c, base, atom.element, x)] += atom.weight;
  return out;
}

namespace {

GroupElement project_value(const GroupElement& f, const std::vector<int>& coords) {
  std::vector<int> support;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (f.contains(coords[i])) support.push_back(static_cast<int>(i) + 1);
  return GroupElement{std::move(support)};
}

}  // namespace

CocycleSpec project_cocycle(const CocycleSpec& c, const std::vector<int>& coords) {
  if (!std::is_sorted(coords.begin(), coords.end()) ||
      std::adjacent_find(coords.begin(), coords.end()) != coords.end())
    throw std::invalid_argument("project_cocycle: coords must be strictly increasing");
  if (const auto* cpg = std::get_if<ConstantPerGenerator>(&c)) {
    ConstantPerGenerator out = *cpg;
    for (auto& [gen, label] : out.labels) label = project_value(label, coords);
    return out;
  }
  GeneratorTable out = std::get<GeneratorTable>(c);
  for (auto& v : out.w) v = project_value(v, coords);
  return out;
}

std::vector<NormBudgetRow> norm_budget_report(const CocycleSpec& c,
                                              const BaseSystem& base,
                                              const KappaMeasure& kappa,
                                              const std::vector<long long>& l) {
  std::vector<NormBudgetRow> rows;
  const auto* cycle = std::get_if<FiniteCycle>(&base);
  bool constant = std::holds_alternative<ConstantPerGenerator>(c);
  if (!cycle && !constant)
    throw ValidationError("norm_budget_report needs a finite base or a constant cocycle");
  for (std::size_t n = 0; n < kappa.size(); ++n) {
    const auto& atom = kappa.atoms()[n];
    double integral = 0.0;
    if (constant) {
      integral = evaluate_cocycle(c, base, atom.element).norm();
    } else {
      for (int x = 0; x < cycle->m; ++x)
        integral += evaluate_cocycle(c, base, atom.element, x).norm();
      integral /= cycle->m;
    }
    long long ln = n < l.size() ? l[n] : (l.empty() ? 0 : l.back());
    rows.push_back({atom.element, atom.weight, integral, ln,
                    integral <= static_cast<double>(ln) + 1.0});
  }
  return rows;
}

GeneratingVerdict check_generating(GroupKind /*group*/, const KappaMeasure& kappa,
                                   int depth) {
  if (depth < 1) throw std::invalid_argument("check_generating: depth must be >= 1");
  std::set<Element, ElementLess> closure;
  std::vector<Element> frontier;
  for (const auto& a : kappa.atoms()) {
    closure.insert(a.element);
    frontier.push_back(a.element);
  }
  constexpr std::size_t kNodeCap = 500000;
  for (int len = 2; len <= depth && closure.size() < kNodeCap; ++len) {
    std::vector<Element> next;
    for (const auto& w : frontier) {
      for (const auto& a : kappa.atoms()) {
        Element e = group_add(a.element, w);
        if (closure.insert(e).second) next.push_back(e);
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  for (const auto& a : kappa.atoms())
    if (!closure.count(group_inverse(a.element)))
      return GeneratingVerdict::FailsWithinDepth;
  return GeneratingVerdict::GeneratesDeclaredSubgroup;
}

}  // namespace fent
