#ifndef FENT_REALIZE_HPP
#define FENT_REALIZE_HPP

#include <variant>
#include <vector>

#include "fent/entropy.hpp"
#include "fent/scenario.hpp"

namespace fent {

// Slow-growth sequence l_n = floor((n-1)/period): nondecreasing, steps in
// {0,1}, unbounded, with the kappa-weighted sum of (l_n + 1) kept strictly
// under the budget.
struct BudgetSequences {
  long long period = 1;
  std::vector<long long> prefix;  // explicit leading values, for reporting
  double weighted_sum = 0.0;      // sum_n kappa(g_n) (l_n + 1), exact
  long long l(long long n) const { return (n - 1) / period; }
};

// Weight models for the budget construction: the finite atom weights of a
// KappaMeasure, or the geometric family kappa_n = (1-r) r^(n-1), whose
// weighted sums have closed forms.
struct FiniteWeights {
  std::vector<double> w;
};
struct GeometricWeights {
  double ratio = 0.5;
};
using WeightSequence = std::variant<FiniteWeights, GeometricWeights>;

struct RealizationResult {
  double theta_star = 1.0;
  double achieved_entropy = 0.0;
  int iterations = 0;
  double bracket_width = 0.0;
};

enum class TypeFlag { III_1, III_lambda };

// Marks the theta-deformation at coordinate n0: nu_{n0} becomes
// theta * nu_{n0} + (1-theta) * (point mass at 1). theta in (0,1].
ProductMeasureSpec deform(const ProductMeasureSpec& spec, int n0, double theta);

// Exact value of int kappa_x({f | f(n0) != 0}) dmu(x); positivity is what
// makes realization through n0 possible.
double kappa_bar(const Scenario& s, int n0);

// h(nu) - h(nu^theta) = kappa_bar * (Phi(p) - Phi(theta p)) with
// p = nu_{n0}(0). Matches the exact entropy difference to 1e-12.
double entropy_shift(const Scenario& s, int n0, double theta);

// Solves h(theta) = target on the strictly decreasing entropy curve by
// bisection after geometric bracket extension toward 0. Throws
// UnreachableTargetError if target < h(1), NoMassError if kappa_bar = 0.
RealizationResult realize_target(const Scenario& s, int n0, double target,
                                 double tol = 1e-9, int max_iterations = 200);

// Smallest-period slow-growth sequence meeting the budget; throws
// InfeasibleError when no admissible sequence exists (budget <= total mass).
BudgetSequences build_budget(const WeightSequence& weights, double budget);
BudgetSequences build_budget(const KappaMeasure& kappa, double budget);

// Assembles a scenario whose exact skew entropy lies in (0, 2*eps] and whose
// classification matches the requested type: Haar-odometer base, constant
// cocycle with one-coordinate labels at heights l_n + 1, and the matching
// epsilon family.
Scenario build_small_entropy_scenario(GroupKind group, const KappaMeasure& kappa,
                                      double eps, TypeFlag flag,
                                      double budget = 2.0);

}  // namespace fent

#endif
