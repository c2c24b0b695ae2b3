#include "fent/realize.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fent/errors.hpp"
#include "fent/phi.hpp"

namespace fent {

ProductMeasureSpec deform(const ProductMeasureSpec& spec, int n0, double theta) {
  if (!(theta > 0.0 && theta <= 1.0))
    throw std::domain_error("deform: theta must lie in (0,1]");
  return spec.with_deformation(n0, theta);
}

double kappa_bar(const Scenario& s, int n0) {
  if (n0 < 1) throw std::domain_error("kappa_bar: coordinate indices are 1-based");
  double total = 0.0;
  for (const auto& [mu_weight, kappa_x] : enumerate_fiber_measures(s))
    for (const auto& [f, mass] : kappa_x)
      if (f.contains(n0)) total += mu_weight * mass;
  return total;
}

double entropy_shift(const Scenario& s, int n0, double theta) {
  if (!(theta > 0.0 && theta <= 1.0))
    throw std::domain_error("entropy_shift: theta must lie in (0,1]");
  double p = s.nu.coordinate_distribution(n0).p0;
  return kappa_bar(s, n0) * (phi(p) - phi(theta * p));
}

RealizationResult realize_target(const Scenario& s, int n0, double target,
                                 double tol, int max_iterations) {
  if (!(tol > 0.0)) throw std::domain_error("realize_target: tol must be positive");
  double kb = kappa_bar(s, n0);
  if (kb <= 0.0) {
    std::ostringstream os;
    os << "NoMass: the cocycle is trivial through coordinate " << n0;
    throw NoMassError(os.str());
  }
  double h1 = skew_entropy(s).total;
  double p = s.nu.coordinate_distribution(n0).p0;
  auto h = [&](double theta) { return h1 + kb * (phi(theta * p) - phi(p)); };

  if (target < h1 - tol) {
    std::ostringstream os;
    os << "Unreachable: target " << target << " below the undeformed entropy " << h1
       << "; the deformation only raises entropy";
    throw UnreachableTargetError(os.str());
  }

  RealizationResult result;
  if (target <= h1) {
    result.theta_star = 1.0;
    result.achieved_entropy = h1;
    return result;
  }

  // h is strictly decreasing in theta and diverges as theta -> 0, so a
  // bracket [lo, 1] with h(lo) >= target always exists.
  double lo = 1.0, hi = 1.0;
  int iters = 0;
  while (h(lo) < target) {
    hi = lo;
    lo *= 0.5;
    if (++iters > 2000) throw std::runtime_error("realize_target: bracketing failed");
  }
  double flo = h(lo);
  if (std::abs(flo - target) <= tol) {
    result.theta_star = lo;
    result.achieved_entropy = flo;
    result.iterations = iters;
    result.bracket_width = hi - lo;
    return result;
  }
  double mid = lo, fmid = flo;
  while (iters < max_iterations) {
    mid = 0.5 * (lo + hi);
    fmid = h(mid);
    ++iters;
    if (std::abs(fmid - target) <= tol) break;
    if (fmid > target)
      lo = mid;
    else
      hi = mid;
  }
  result.theta_star = mid;
  result.achieved_entropy = fmid;
  result.iterations = iters;
  result.bracket_width = hi - lo;
  return result;
}

namespace {

double weighted_sum_for_period(const FiniteWeights& fw, long long k) {
  double sum = 0.0;
  for (std::size_t i = 0; i < fw.w.size(); ++i) {
    long long n = static_cast<long long>(i) + 1;
    sum += fw.w[i] * static_cast<double>((n - 1) / k + 1);
  }
  return sum;
}

// sum_n (1-r) r^(n-1) (floor((n-1)/k) + 1) = 1 / (1 - r^k).
double weighted_sum_for_period(const GeometricWeights& gw, long long k) {
  return 1.0 / (1.0 - std::pow(gw.ratio, static_cast<double>(k)));
}

}  // namespace

BudgetSequences build_budget(const WeightSequence& weights, double budget) {
  long long limit;     // largest period worth trying
  double total_mass;   // infimum of the weighted sum over all periods
  if (const auto* fw = std::get_if<FiniteWeights>(&weights)) {
    if (fw->w.empty()) throw std::invalid_argument("build_budget: empty weights");
    limit = static_cast<long long>(fw->w.size());
    total_mass = 0.0;
    for (double w : fw->w) total_mass += w;
  } else {
    const auto& gw = std::get<GeometricWeights>(weights);
    if (!(gw.ratio > 0.0 && gw.ratio < 1.0))
      throw std::invalid_argument("build_budget: geometric ratio must lie in (0,1)");
    limit = 1;
    while (weighted_sum_for_period(gw, limit) >= budget && limit < 4096) limit *= 2;
    total_mass = 1.0;
  }
  for (long long k = 1; k <= limit; ++k) {
    double sum = std::visit([&](const auto& w) { return weighted_sum_for_period(w, k); },
                            weights);
    if (sum < budget) {
      BudgetSequences out;
      out.period = k;
      out.weighted_sum = sum;
      long long prefix_len = std::max<long long>(
          limit, std::holds_alternative<GeometricWeights>(weights) ? 32 : limit);
      for (long long n = 1; n <= prefix_len; ++n) out.prefix.push_back(out.l(n));
      return out;
    }
  }
  std::ostringstream os;
  os << "Infeasible: every admissible sequence has weighted sum >= " << total_mass
     << ", which does not fall under budget " << budget;
  throw InfeasibleError(os.str());
}

BudgetSequences build_budget(const KappaMeasure& kappa, double budget) {
  FiniteWeights fw;
  for (const auto& a : kappa.atoms()) fw.w.push_back(a.weight);
  return build_budget(WeightSequence{std::move(fw)}, budget);
}

Scenario build_small_entropy_scenario(GroupKind group, const KappaMeasure& kappa,
                                      double eps, TypeFlag flag, double budget) {
  if (!(eps > 0.0)) throw std::domain_error("build_small_entropy_scenario: eps must be > 0");
  bool has_nontrivial_atom = false;
  for (const auto& a : kappa.atoms())
    if (!is_identity(a.element)) has_nontrivial_atom = true;
  if (!has_nontrivial_atom)
    throw ValidationError("kappa is the point mass at the identity; entropy would vanish");

  BudgetSequences budget_seq = build_budget(kappa, budget);

  Scenario s;
  s.group = group;
  s.kappa = kappa;
  s.base = HaarOdometer{};
  ConstantPerGenerator cocycle;
  for (std::size_t i = 0; i < kappa.atoms().size(); ++i) {
    const auto& atom = kappa.atoms()[i];
    // Identity atoms must carry the identity label; every other atom gets a
    // single-coordinate label at height l_n + 1, within the norm budget.
    GroupElement label =
        is_identity(atom.element)
            ? GroupElement::identity()
            : GroupElement::single(static_cast<int>(budget_seq.l(
                                       static_cast<long long>(i) + 1)) + 1);
    cocycle.labels.emplace_back(atom.element, label);
  }
  s.cocycle = std::move(cocycle);
  s.nu = flag == TypeFlag::III_lambda ? ProductMeasureSpec::constant(eps)
                                      : ProductMeasureSpec::power(eps, 0.5);
  std::ostringstream name;
  name << "small-entropy-" << (flag == TypeFlag::III_lambda ? "iiilambda" : "iii1");
  s.name = name.str();
  std::ostringstream desc;
  desc << "constructed scenario, eps=" << eps << ", budget=" << budget
       << ", weighted sum=" << budget_seq.weighted_sum;
  s.description = desc.str();
  return s;
}

}  // namespace fent
