#ifndef FENT_CLASSIFY_HPP
#define FENT_CLASSIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fent/product_measure.hpp"

namespace fent {

enum class KriegerLabel { II_1, III_lambda, III_1, III_0, Unknown };

struct KriegerType {
  KriegerLabel label = KriegerLabel::Unknown;
  double lambda = 0.0;    // only meaningful for III_lambda
  std::string evidence;   // which rule fired, or why none did
  std::string render() const;  // "II_1", "III_lambda(0.5)", "Unknown(<reason>)", ...
};

struct KakutaniResult {
  bool converges = false;
  double value = 0.0;          // closed-form sum of eps_n^2 when convergent
  std::string divergence_rate; // growth of the partial sums otherwise
};

// Convergence of sum eps_n^2, decided symbolically from the family form.
// Finite overrides never change the verdict.
KakutaniResult kakutani_square_sum(const ProductMeasureSpec& spec);

// Krieger label from the family form. Deformation markers and overrides are
// equivalent measure changes and are ignored. III_0 is never asserted.
KriegerType classify_family(const ProductMeasureSpec& spec);

struct RatioSetEstimate {
  // Distinct observed log-ratios (merged within 1e-9), with multiplicities.
  std::vector<std::pair<double, long long>> values;
  // Best-fit common divisor of the nonzero log-ratios, when they sit on a
  // lattice; empty when the observations look dense or are all zero.
  std::optional<double> lattice_constant;
  double lattice_residual = 0.0;
};

// Samples pairs (f, y) with supp f inside [1, depth] and records
// log d(nu o S_f)/d nu (y). Diagnostic evidence only, never a certificate.
RatioSetEstimate ratio_set_estimate(const ProductMeasureSpec& spec, int depth,
                                    long long samples, std::uint64_t seed);

}  // namespace fent

#endif
