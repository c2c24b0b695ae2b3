#ifndef FENT_ENTROPY_HPP
#define FENT_ENTROPY_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "fent/group_element.hpp"
#include "fent/product_measure.hpp"
#include "fent/scenario.hpp"

namespace fent {

// Finite-support (sub-)probability on the Cantor group F.
using FiberMeasure = std::map<GroupElement, double>;

struct EntropyBreakdown {
  double base_term = 0.0;
  double fiber_integral = 0.0;
  double total = 0.0;
  std::map<int, double> per_coordinate;  // sums to fiber_integral
};

struct McEstimate {
  double mean = 0.0;
  double stderror = 0.0;  // sample sd / sqrt(samples)
  long long samples = 0;
  std::uint64_t seed = 0;
};

// Entropy of the fiber translation action under xi, as the direct sum
// over atoms of per-coordinate weights. Sub-probabilities are accepted so
// partial sums can be exercised.
double exact_entropy(const FiberMeasure& xi, const ProductMeasureSpec& spec);

// Same value through the Fubini form: sum over coordinates of
// xi({f : n in N_f}) * Phi(nu_n(0)). Must agree with exact_entropy to 1e-12.
double exact_entropy_fubini(const FiberMeasure& xi, const ProductMeasureSpec& spec);

// The exact base enumeration behind the addition formula: pairs
// (mu-weight of x, kappa_x). A single pair for constant cocycles.
std::vector<std::pair<double, FiberMeasure>> enumerate_fiber_measures(const Scenario& s);

// Exact entropy of the skew product via the addition formula:
// base term (0 for the measure-preserving bases here) plus the exact
// mu-average of the fiber entropies.
EntropyBreakdown skew_entropy(const Scenario& s);

// Monte Carlo estimate of the defining integral. The base average is taken
// exactly each sample; only the fiber point is sampled. Chunked substreams
// keep the estimate bit-identical for any worker count.
McEstimate mc_entropy(const Scenario& s, long long samples, std::uint64_t seed,
                      int workers = 1);

// Monte Carlo mean of |sum_g kappa(g) rn_g(x,y) - 1|; zero certifies
// stationarity statistically.
McEstimate stationarity_defect(const Scenario& s, long long samples,
                               std::uint64_t seed, int workers = 1);

}  // namespace fent

#endif
