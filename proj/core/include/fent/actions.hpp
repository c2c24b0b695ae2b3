#ifndef FENT_ACTIONS_HPP
#define FENT_ACTIONS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "fent/group_element.hpp"

namespace fent {

// The two computable acting groups: the integers, and the direct sum of
// Z/2Z copies (the Cantor group acting on itself).
enum class GroupKind { Integers, DirectSumZ2 };

using Element = std::variant<std::int64_t, GroupElement>;

Element group_identity(GroupKind kind);
Element group_add(const Element& a, const Element& b);
Element group_inverse(const Element& a);
bool is_identity(const Element& a);
std::string element_to_string(const Element& a);
Element parse_element(GroupKind kind, const std::string& text);

// Finite-support probability on the acting group, with an explicit
// enumeration g_1, g_2, ... of its atoms.
struct KappaAtom {
  Element element;
  double weight = 0.0;
};

class KappaMeasure {
 public:
  KappaMeasure() = default;
  // Atoms in enumeration order; weights strictly positive, summing to 1
  // within 1e-12, elements distinct.
  explicit KappaMeasure(std::vector<KappaAtom> atoms);

  const std::vector<KappaAtom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

 private:
  std::vector<KappaAtom> atoms_;
};

// Integers rotating a finite cycle {0..m-1} with uniform measure.
struct FiniteCycle {
  int m = 1;
};
// The Cantor group translating the full product space with Haar measure.
struct HaarOdometer {};
using BaseSystem = std::variant<FiniteCycle, HaarOdometer>;

// Cocycle into the Cantor group F, declared either by one label per
// generator (extended along words by the cocycle identity) or, over a finite
// cycle, by a full table w with alpha(Rx, x) = w(x).
struct ConstantPerGenerator {
  std::vector<std::pair<Element, GroupElement>> labels;
};
struct GeneratorTable {
  std::vector<GroupElement> w;  // indexed by base state 0..m-1
};
using CocycleSpec = std::variant<ConstantPerGenerator, GeneratorTable>;

// alpha(T_g x, x), telescoped along the orbit segment from x to gx.
// x is the base state for FiniteCycle and is ignored for constant cocycles.
// Throws UnreachableElementError if g is not a word in the declared
// generators (constant cocycles only; a generator table reaches all of Z).
GroupElement evaluate_cocycle(const CocycleSpec& c, const BaseSystem& base,
                              const Element& g, int x = 0);

// Pushforward kappa_x of kappa under g -> alpha(T_g x, x); total mass 1.
std::map<GroupElement, double> pushforward_kappa(const CocycleSpec& c,
                                                 const BaseSystem& base,
                                                 const KappaMeasure& kappa,
                                                 int x = 0);

// Quotient by the kernel {f | f(M_n) = 0 for all n}: every value is
// restricted to the coordinates M_1 < M_2 < ... and relabeled M_n -> n.
CocycleSpec project_cocycle(const CocycleSpec& c, const std::vector<int>& coords);

struct NormBudgetRow {
  Element atom;
  double weight = 0.0;
  double norm_integral = 0.0;  // exact value of int ||alpha(T_{g_n} x, x)|| dmu
  long long l = 0;
  bool within_budget = false;  // norm_integral <= l + 1
};
// Exact per-atom orbit-norm integrals against the slow-growth sequence l.
// Requires a finite base or a constant cocycle (both make the integral exact).
std::vector<NormBudgetRow> norm_budget_report(const CocycleSpec& c,
                                              const BaseSystem& base,
                                              const KappaMeasure& kappa,
                                              const std::vector<long long>& l);

enum class GeneratingVerdict { GeneratesDeclaredSubgroup, FailsWithinDepth };

// Breadth-first semigroup closure of supp kappa up to the given word length.
// Certifies subgroup generation when the closure contains the inverse of
// every generator; otherwise the question stays undecided at this depth.
GeneratingVerdict check_generating(GroupKind group, const KappaMeasure& kappa,
                                   int depth);

}  // namespace fent

#endif
