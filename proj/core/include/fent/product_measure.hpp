#ifndef FENT_PRODUCT_MEASURE_HPP
#define FENT_PRODUCT_MEASURE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>

namespace fent {

// Closed-form coordinate parameter families for the product measure on the
// Cantor group: eps_n identically zero, constant, or c * n^(-a).
struct ZeroFamily {};
struct ConstantFamily {
  double eps = 0.0;
};
struct PowerFamily {
  double c = 0.0;
  double a = 0.0;  // eps_n = c * n^(-a)
};
using EpsilonFamily = std::variant<ZeroFamily, ConstantFamily, PowerFamily>;

struct Deformation {
  int n0 = 0;
  double theta = 1.0;  // in (0,1]
};

// Probability pair of one coordinate factor.
struct CoordinateDistribution {
  double p0 = 0.5;
  double p1 = 0.5;
};

// The product measure nu = (x)_n nu_n on (Z/2Z)^N, described by a closed-form
// epsilon family, finitely many explicit overrides, and an optional
// theta-deformation marker at one coordinate. Every operation touches only
// finitely many coordinates, so nothing is lost by not materializing nu.
class ProductMeasureSpec {
 public:
  ProductMeasureSpec() : family_(ZeroFamily{}) {}
  explicit ProductMeasureSpec(EpsilonFamily family) : family_(std::move(family)) {}

  static ProductMeasureSpec zero() { return ProductMeasureSpec{ZeroFamily{}}; }
  static ProductMeasureSpec constant(double eps) {
    return ProductMeasureSpec{ConstantFamily{eps}};
  }
  static ProductMeasureSpec power(double c, double a) {
    return ProductMeasureSpec{PowerFamily{c, a}};
  }

  const EpsilonFamily& family() const { return family_; }
  const std::map<int, CoordinateDistribution>& overrides() const { return overrides_; }
  const std::optional<Deformation>& deformation() const { return deformation_; }

  // Family epsilon at coordinate n, before overrides and deformation.
  double family_epsilon(int n) const;

  // Effective (nu_n(0), nu_n(1)) after overrides and deformation.
  CoordinateDistribution coordinate_distribution(int n) const;

  // log(nu_n(1 - bit) / nu_n(bit)): the one-coordinate flip log-ratio.
  double log_flip_ratio(int n, int bit) const;

  // Per-coordinate entropy weight (p1 - p0) * log(p1/p0) = Phi(p0).
  double coordinate_weight(int n) const;

  ProductMeasureSpec with_override(int n, double p0, double p1) const;
  ProductMeasureSpec with_deformation(int n0, double theta) const;
  ProductMeasureSpec without_deformation() const;

  std::string family_description() const;

 private:
  EpsilonFamily family_;
  std::map<int, CoordinateDistribution> overrides_;
  std::optional<Deformation> deformation_;
};

}  // namespace fent

#endif
